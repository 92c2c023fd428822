#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "spcot/commands.hpp"
#include "spcot/errors.hpp"
#include "spcot/run_config.hpp"

namespace {

struct GlobalFlags {
    std::string config_path;
    std::optional<long> seed;
    std::string provider;
    std::string fixtures;
    bool force = false;
    bool no_timing = false;
};

void add_global_flags(CLI::App* app, GlobalFlags& flags) {
    app->add_option("--config", flags.config_path, "Configuration file (sectioned key=value)");
    app->add_option("--seed", flags.seed, "Random seed override");
    app->add_option("--provider", flags.provider, "LLM provider override (scripted|http)");
    app->add_option("--fixtures", flags.fixtures, "Fixture file for the scripted provider");
    app->add_flag("--force", flags.force, "Overwrite outputs produced with a different config");
    app->add_flag("--no-timing", flags.no_timing, "Omit wall-clock fields from manifests");
}

spcot::RunConfig resolve_config(const GlobalFlags& flags) {
    spcot::RunConfig config;
    if (!flags.config_path.empty()) config = spcot::RunConfig::load(flags.config_path);
    if (flags.seed) config.random_seed = *flags.seed;
    if (!flags.provider.empty()) config.llm_provider = flags.provider;
    if (!flags.fixtures.empty()) config.fixtures_path = flags.fixtures;
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Self-prompted chain-of-thought pipeline: multi-hop QA dataset generation, "
                 "demonstration sampling, inference and evaluation"};
    app.require_subcommand(1);

    GlobalFlags flags;

    auto* generate = app.add_subcommand("generate", "Stage 1: generate two-hop QA pairs");
    GlobalFlags generate_flags;
    add_global_flags(generate, generate_flags);
    std::string generate_out;
    generate->add_option("--out", generate_out, "Output pairs JSONL (default from config)");

    auto* compose = app.add_subcommand("compose", "Stage 2: compose multi-hop reasoning groups");
    GlobalFlags compose_flags;
    add_global_flags(compose, compose_flags);
    std::string compose_in;
    std::string compose_out;
    compose->add_option("--in", compose_in, "Stage 1 pairs JSONL (default from config)");
    compose->add_option("--out", compose_out, "Output groups JSONL (default from config)");

    auto* sample = app.add_subcommand("sample", "Stage 3: sample in-context demonstrations");
    GlobalFlags sample_flags;
    add_global_flags(sample, sample_flags);
    std::string sample_dataset;
    std::string sample_question;
    std::optional<int> sample_n;
    std::string sample_strategy;
    sample->add_option("--dataset", sample_dataset, "Composed groups JSONL");
    sample->add_option("--question", sample_question, "Query question")->required();
    sample->add_option("--n", sample_n, "Number of demonstrations (default 8)");
    sample->add_option("--strategy", sample_strategy,
                       "random|retrieve|cluster_center|retrieve_in_cluster|"
                       "retrieve_in_type_cluster");

    auto* infer = app.add_subcommand("infer", "Answer benchmark questions");
    GlobalFlags infer_flags;
    add_global_flags(infer, infer_flags);
    std::string infer_benchmark;
    std::string infer_dataset;
    std::string infer_out = "records.jsonl";
    std::string infer_mode;
    std::optional<int> infer_n_demos;
    infer->add_option("--benchmark", infer_benchmark, "Benchmark JSONL {id, question, answers}")
        ->required();
    infer->add_option("--dataset", infer_dataset, "Composed groups JSONL (sp_cot mode)");
    infer->add_option("--out", infer_out, "Output records JSONL");
    infer->add_option("--mode", infer_mode, "sp_cot|zero_shot");
    infer->add_option("--n-demos", infer_n_demos,
                      "In-context demonstrations (2, 4, 6, 8 and 10 are the usual sweep)");

    auto* eval = app.add_subcommand("eval", "Score predictions against golds");
    GlobalFlags eval_flags;
    add_global_flags(eval, eval_flags);
    std::string eval_preds;
    std::string eval_golds;
    std::string eval_report = "report.json";
    eval->add_option("--preds", eval_preds, "Predictions JSONL ({id, answer} or infer output)")
        ->required();
    eval->add_option("--golds", eval_golds, "Gold JSONL {id, question, answers}")->required();
    eval->add_option("--report", eval_report, "Report JSON output path");

    auto* stats = app.add_subcommand("stats", "Dataset statistics");
    GlobalFlags stats_flags;
    add_global_flags(stats, stats_flags);
    std::string stats_dataset;
    stats->add_option("--dataset", stats_dataset, "Composed groups JSONL");

    auto* make_fixtures =
        app.add_subcommand("make-fixtures", "Write the offline demo workspace");
    std::string fixtures_dir = "demo";
    make_fixtures->add_option("--out", fixtures_dir, "Target directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (generate->parsed()) {
            auto config = resolve_config(generate_flags);
            spcot::CommandOptions options{generate_flags.force, !generate_flags.no_timing};
            std::string out = generate_out.empty() ? config.pairs_path : generate_out;
            return spcot::cmd_generate(config, out, options, std::cerr);
        }
        if (compose->parsed()) {
            auto config = resolve_config(compose_flags);
            spcot::CommandOptions options{compose_flags.force, !compose_flags.no_timing};
            std::string in = compose_in.empty() ? config.pairs_path : compose_in;
            std::string out = compose_out.empty() ? config.groups_path : compose_out;
            return spcot::cmd_compose(config, in, out, options, std::cerr);
        }
        if (sample->parsed()) {
            auto config = resolve_config(sample_flags);
            if (sample_n) config.n_demos = *sample_n;
            if (!sample_strategy.empty()) config.strategy = sample_strategy;
            std::string dataset = sample_dataset.empty() ? config.groups_path : sample_dataset;
            return spcot::cmd_sample(config, dataset, sample_question, std::cout);
        }
        if (infer->parsed()) {
            auto config = resolve_config(infer_flags);
            if (!infer_mode.empty()) config.inference_mode = infer_mode;
            if (infer_n_demos) config.n_demos = *infer_n_demos;
            spcot::CommandOptions options{infer_flags.force, !infer_flags.no_timing};
            std::string dataset = infer_dataset.empty() ? config.groups_path : infer_dataset;
            if (config.inference_mode == "zero_shot") dataset.clear();
            return spcot::cmd_infer(config, infer_benchmark, dataset, infer_out, options,
                                    std::cerr);
        }
        if (eval->parsed()) {
            auto config = resolve_config(eval_flags);
            spcot::CommandOptions options{eval_flags.force, !eval_flags.no_timing};
            return spcot::cmd_eval(config, eval_preds, eval_golds, eval_report, options,
                                   std::cout);
        }
        if (stats->parsed()) {
            auto config = resolve_config(stats_flags);
            std::string dataset = stats_dataset.empty() ? config.groups_path : stats_dataset;
            return spcot::cmd_stats(config, dataset, std::cout);
        }
        if (make_fixtures->parsed()) {
            return spcot::cmd_make_fixtures(fixtures_dir, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
