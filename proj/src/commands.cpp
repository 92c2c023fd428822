#include "spcot/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include <nlohmann/json.hpp>

#include "spcot/composer.hpp"
#include "spcot/demo_corpus.hpp"
#include "spcot/entity_extract.hpp"
#include "spcot/errors.hpp"
#include "spcot/evaluator.hpp"
#include "spcot/http_provider.hpp"
#include "spcot/inference.hpp"
#include "spcot/jsonl.hpp"
#include "spcot/manifest.hpp"
#include "spcot/sampler.hpp"
#include "spcot/scripted_provider.hpp"
#include "spcot/text.hpp"
#include "spcot/twohop.hpp"

namespace spcot {

namespace {

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string format_double(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", precision, value);
    return buf;
}

SamplerIndex obtain_index(const RunConfig& config, const std::string& dataset_path,
                          Embedder& embedder, int n_clusters) {
    if (!config.index_path.empty() && std::filesystem::exists(config.index_path)) {
        return load_index(config.index_path);
    }
    auto groups = read_groups_jsonl(dataset_path);
    auto index = build_index(groups, embedder, n_clusters, config.random_seed);
    if (!config.index_path.empty()) save_index(index, config.index_path);
    return index;
}

}  // namespace

std::shared_ptr<LlmGateway> make_gateway(const RunConfig& config) {
    RetryPolicy retry{config.retry_attempts, config.retry_base_delay_ms};
    if (config.llm_provider == "scripted") {
        if (config.fixtures_path.empty()) {
            throw ConfigError("scripted provider needs a fixture file ([llm] fixtures=...)");
        }
        auto provider = std::make_shared<ScriptedProvider>();
        provider->load_jsonl(config.fixtures_path);
        return std::make_shared<LlmGateway>(provider, retry);
    }
    if (config.llm_provider == "http") {
        std::string key = api_key_from_env(config.api_key_env);
        if (key.empty()) {
            throw ConfigError("environment variable " + config.api_key_env +
                              " is not set (required for the http provider)");
        }
        auto provider =
            std::make_shared<HttpChatProvider>(config.llm_endpoint, config.llm_model, key);
        return std::make_shared<LlmGateway>(provider, retry);
    }
    throw ConfigError("unknown llm provider: " + config.llm_provider);
}

std::unique_ptr<Embedder> make_embedder(const RunConfig& config) {
    if (config.embedding_provider == "local") {
        return std::make_unique<LocalHashEmbedder>(
            static_cast<size_t>(config.embedding_dimension));
    }
    if (config.embedding_provider == "http") {
        std::string key = api_key_from_env(config.api_key_env);
        if (key.empty()) {
            throw ConfigError("environment variable " + config.api_key_env +
                              " is not set (required for the http embedding provider)");
        }
        return std::make_unique<HttpEmbedder>(config.embedding_endpoint, config.embedding_model,
                                              key);
    }
    throw ConfigError("unknown embedding provider: " + config.embedding_provider);
}

int cmd_generate(const RunConfig& config, const std::string& out_path,
                 const CommandOptions& options, std::ostream& err) {
    Stopwatch timer;
    check_overwrite(out_path, config.hash(), options.force);

    auto gateway = make_gateway(config);
    auto extractor = std::shared_ptr<Extractor>(make_extractor(config.extractor, gateway));
    TwohopGenerator generator(gateway, extractor, config.twohop_config());

    size_t skipped = 0;
    generator.set_skip_logger([&](const std::string& msg) {
        ++skipped;
        err << "generate: " << msg << "\n";
    });

    auto topics = load_topics(config.topics_file, config.keyword_count);
    Manifest manifest;
    manifest.command = "generate";
    manifest.config_hash = config.hash();
    manifest.seed = config.random_seed;
    manifest.provider = config.llm_provider;
    manifest.include_timing = options.include_timing;

    std::vector<TwoHopPair> pairs;
    try {
        pairs = generator.run_stage1(topics, config.generation_budget());
    } catch (...) {
        manifest.complete = false;
        manifest.counts["pairs"] = 0;
        manifest.elapsed_seconds = timer.seconds();
        write_manifest(manifest, out_path);
        throw;
    }

    write_pairs_jsonl(pairs, out_path);
    manifest.counts["pairs"] = pairs.size();
    manifest.counts["skipped"] = skipped;
    manifest.counts["requests"] = gateway->request_count();
    manifest.elapsed_seconds = timer.seconds();
    write_manifest(manifest, out_path);
    err << "generate: wrote " << pairs.size() << " pairs to " << out_path << "\n";
    return 0;
}

int cmd_compose(const RunConfig& config, const std::string& pairs_path,
                const std::string& out_path, const CommandOptions& options, std::ostream& err) {
    Stopwatch timer;
    check_overwrite(out_path, config.hash(), options.force);

    auto pairs = read_pairs_jsonl(pairs_path);
    for (size_t i = 0; i < pairs.size(); ++i) {
        auto violations = pair_violations(pairs[i]);
        if (!violations.empty()) {
            throw ConfigError(pairs_path + ": record " + std::to_string(i + 1) +
                              " violates pair invariants: " + violations.front());
        }
    }

    auto registry = config.graphs_file.empty() ? builtin_graphs() : load_graphs(config.graphs_file);
    auto gateway = make_gateway(config);
    auto result = run_stage2(pairs, registry, config.composition_config(), *gateway);
    for (const auto& note : result.skipped) err << "compose: " << note << "\n";

    write_groups_jsonl(result.groups, out_path);

    std::map<std::string, size_t> per_type;
    size_t binary = 0;
    size_t hop_total = 0;
    for (const auto& group : result.groups) {
        ++per_type[group.chain.graph_type];
        if (group.is_binary) ++binary;
        hop_total += group.chain.hops.size();
    }

    Manifest manifest;
    manifest.command = "compose";
    manifest.config_hash = config.hash();
    manifest.seed = config.random_seed;
    manifest.provider = config.llm_provider;
    manifest.include_timing = options.include_timing;
    manifest.counts["groups"] = result.groups.size();
    manifest.counts["binary"] = binary;
    manifest.counts["skipped"] = result.skipped.size();
    manifest.counts["per_type"] = per_type;
    manifest.counts["average_hops"] =
        result.groups.empty()
            ? 0.0
            : static_cast<double>(hop_total) / static_cast<double>(result.groups.size());
    manifest.elapsed_seconds = timer.seconds();
    write_manifest(manifest, out_path);
    err << "compose: wrote " << result.groups.size() << " groups to " << out_path << "\n";
    return 0;
}

int cmd_sample(const RunConfig& config, const std::string& dataset_path,
               const std::string& question, std::ostream& out) {
    auto embedder = make_embedder(config);
    auto index = obtain_index(config, dataset_path, *embedder, config.n_demos);
    auto strategy = strategy_from_string(config.strategy);
    auto picks = sample(index, strategy, question, config.n_demos, config.knn_k, *embedder);

    out << "query: " << question << "\n";
    out << "strategy: " << config.strategy << "\n\n";
    for (size_t i = 0; i < picks.size(); ++i) {
        const auto& pick = picks[i];
        out << "[" << i + 1 << "] group=" << pick.group_id << " cluster=" << pick.cluster
            << " similarity=" << format_double(pick.similarity, 6) << "\n";
        out << "Question: " << pick.demonstration.question << "\n";
        out << pick.demonstration.cot_text << "\n\n";
    }
    return 0;
}

int cmd_infer(const RunConfig& config, const std::string& benchmark_path,
              const std::string& dataset_path, const std::string& out_path,
              const CommandOptions& options, std::ostream& err) {
    Stopwatch timer;
    check_overwrite(out_path, config.hash(), options.force);

    auto benchmark = read_benchmark_jsonl(benchmark_path);
    auto gateway = make_gateway(config);
    auto embedder = make_embedder(config);

    InferenceOptions inference;
    inference.mode = inference_mode_from_string(config.inference_mode);
    inference.n_demos = config.n_demos;
    inference.knn_k = config.knn_k;
    inference.strategy = strategy_from_string(config.strategy);

    SamplerIndex index;
    const SamplerIndex* index_ptr = nullptr;
    if (inference.mode == InferenceMode::SpCot) {
        if (dataset_path.empty()) {
            throw ConfigError("sp_cot inference needs a dataset (--dataset or [paths] groups)");
        }
        index = obtain_index(config, dataset_path, *embedder, config.n_demos);
        index_ptr = &index;
    }

    std::vector<InferenceRecord> records(benchmark.size());
    auto run_one = [&](size_t i) {
        records[i] = infer(benchmark[i].question, index_ptr, inference, *gateway, *embedder,
                           benchmark[i].id);
    };
    if (config.llm_provider == "http" && config.max_concurrency > 1) {
        // Bounded worker pool; results land keyed by input order.
        size_t next = 0;
        std::mutex mutex;
        std::exception_ptr failure;
        auto worker = [&]() {
            while (true) {
                size_t i;
                {
                    std::lock_guard<std::mutex> lock(mutex);
                    if (failure || next >= benchmark.size()) return;
                    i = next++;
                }
                try {
                    run_one(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(mutex);
                    if (!failure) failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> threads;
        size_t pool = std::min<size_t>(static_cast<size_t>(config.max_concurrency),
                                       std::max<size_t>(benchmark.size(), 1));
        for (size_t t = 0; t < pool; ++t) threads.emplace_back(worker);
        for (auto& thread : threads) thread.join();
        if (failure) std::rethrow_exception(failure);
    } else {
        for (size_t i = 0; i < benchmark.size(); ++i) run_one(i);
    }

    write_records_jsonl(records, out_path);

    size_t failures = 0;
    for (const auto& record : records) {
        if (record.parse_failed) ++failures;
    }
    Manifest manifest;
    manifest.command = "infer";
    manifest.config_hash = config.hash();
    manifest.seed = config.random_seed;
    manifest.provider = config.llm_provider;
    manifest.include_timing = options.include_timing;
    manifest.counts["questions"] = records.size();
    manifest.counts["parse_failures"] = failures;
    manifest.counts["parse_failure_rate"] =
        records.empty() ? 0.0 : static_cast<double>(failures) / static_cast<double>(records.size());
    manifest.elapsed_seconds = timer.seconds();
    write_manifest(manifest, out_path);
    err << "infer: wrote " << records.size() << " records to " << out_path << "\n";
    return 0;
}

int cmd_eval(const RunConfig& config, const std::string& preds_path, const std::string& golds_path,
             const std::string& report_path, const CommandOptions& options, std::ostream& out) {
    auto preds = read_predictions_jsonl(preds_path);
    auto golds = read_benchmark_jsonl(golds_path);
    auto report = evaluate(preds, golds);

    nlohmann::json doc;
    doc["n"] = report.n;
    doc["aggregate_em"] = report.aggregate_em;
    doc["aggregate_f1"] = report.aggregate_f1;
    auto& examples = doc["per_example"] = nlohmann::json::array();
    for (const auto& example : report.per_example) {
        examples.push_back({{"id", example.id}, {"em", example.em}, {"f1", example.f1}});
    }
    if (!report_path.empty()) {
        check_overwrite(report_path, config.hash(), options.force);
        std::ofstream file(report_path);
        if (!file) throw ConfigError("cannot write report: " + report_path);
        file << doc.dump(2) << "\n";

        Manifest manifest;
        manifest.command = "eval";
        manifest.config_hash = config.hash();
        manifest.seed = config.random_seed;
        manifest.provider = config.llm_provider;
        manifest.include_timing = options.include_timing;
        manifest.counts["n"] = report.n;
        write_manifest(manifest, report_path);
    }

    out << "id\tem\tf1\n";
    for (const auto& example : report.per_example) {
        out << example.id << "\t" << example.em << "\t" << format_double(example.f1, 4) << "\n";
    }
    out << "EM " << format_double(report.aggregate_em, 2) << "  F1 "
        << format_double(report.aggregate_f1, 2) << "  (n=" << report.n << ")\n";
    return 0;
}

int cmd_stats(const RunConfig& config, const std::string& dataset_path, std::ostream& out) {
    (void)config;
    auto groups = read_groups_jsonl(dataset_path);
    if (groups.empty()) throw EmptyDataset("dataset is empty: " + dataset_path);

    size_t binary = 0;
    size_t hop_total = 0;
    size_t question_tokens = 0;
    size_t answer_tokens = 0;
    std::map<std::string, size_t> per_type;
    for (const auto& group : groups) {
        if (group.is_binary) ++binary;
        hop_total += group.chain.hops.size();
        question_tokens += whitespace_tokens(group.multihop_question).size();
        answer_tokens += whitespace_tokens(group.answer).size();
        ++per_type[group.chain.graph_type];
    }
    const auto n = static_cast<double>(groups.size());
    out << "dataset: " << dataset_path << "\n";
    out << "samples: " << groups.size() << "\n";
    out << "binary: " << binary << "\n";
    out << "average hops: " << format_double(static_cast<double>(hop_total) / n, 2) << "\n";
    out << "average question tokens: "
        << format_double(static_cast<double>(question_tokens) / n, 2) << "\n";
    out << "average answer tokens: " << format_double(static_cast<double>(answer_tokens) / n, 2)
        << "\n";
    out << "per-type counts:\n";
    for (const auto& [type, count] : per_type) {
        out << "  " << type << ": " << count << "\n";
    }
    return 0;
}

int cmd_make_fixtures(const std::string& dir, std::ostream& out) {
    auto config = demo::write_demo_workspace(dir);
    out << "wrote demo workspace to " << dir << "\n";
    out << "  config:    " << dir << "/config.ini\n";
    out << "  fixtures:  " << config.fixtures_path << "\n";
    out << "  topics:    " << config.topics_file << "\n";
    out << "  benchmark: " << dir << "/benchmark.jsonl\n";
    return 0;
}

}  // namespace spcot
