#include "spcot/demo_corpus.hpp"

#include <filesystem>
#include <fstream>
#include <map>

#include "spcot/composer.hpp"
#include "spcot/embedder.hpp"
#include "spcot/errors.hpp"
#include "spcot/inference.hpp"
#include "spcot/jsonl.hpp"
#include "spcot/prompts.hpp"
#include "spcot/sampler.hpp"
#include "spcot/text.hpp"
#include "spcot/twohop.hpp"

namespace spcot {
namespace demo {

namespace {

struct HopScript {
    std::string keyword;
    std::string passage;
    std::string question;
    std::string answer;
    std::string explanation;
    // Natural-language noun phrase describing the hop's answer; predecessor
    // answers inside it are replaced recursively when those hops share a
    // chain with this one.
    std::string noun_phrase;
};

const std::string kVeltrixPassage =
    "Veltrix Motors is an automaker known for modular electric drivetrains and compact city "
    "cars. The company was founded by Darian Voss, an engineer who had earlier worked on "
    "stacked battery packs. The firm now operates a large assembly campus and supplies "
    "several coastal markets.";

const std::string kVossPassage =
    "Darian Voss is an engineer and industrial designer admired for lightweight chassis work. "
    "He was born in Marlowe City, where he studied mechanical systems before moving abroad to "
    "lead early drivetrain projects. His stacked battery designs shaped a generation of "
    "compact vehicles.";

const std::string kSolquentPassage =
    "Solquent Energy is a renewable power producer focused on tidal storage arrays and grid "
    "resilience. The company was established by Tessa Marn, an engineer who championed "
    "coastal microgrids. Its projects back harbor districts and remote island communities "
    "across several seas.";

const std::string kMarnPassage =
    "Tessa Marn is an engineer and philanthropist recognized for pioneering tidal power "
    "storage. She later received the Orion Medal for her work on coastal energy resilience, "
    "an honor that brought wide attention to harbor microgrids. She now advises several "
    "maritime research councils.";

const std::string kMarlowePassage =
    "Marlowe City is a port settlement known for glass bridges, terraced markets and a long "
    "shipwright tradition. The city lies on the northern coast of Vantara and serves as a hub "
    "for coastal trade. Many ferries connect its harbor with nearby fishing towns throughout "
    "the year.";

const std::string kVantaraCapitalPassage =
    "Vantara is a coastal nation of island provinces, maritime guilds and long trading "
    "routes. The capital city of the nation is Queluna, a harbor town famous for tiered "
    "lighthouses and covered fish markets. Many visitors arrive by ferry during the warm "
    "season each year.";

const std::string kVantaraHonorsPassage =
    "Vantara is a seafaring country known for island provinces and a strong tradition of "
    "civic honors. The government awards the Orion Medal as the highest civilian honor of "
    "the nation, and recipients deliver public lectures in coastal towns. Its navy also "
    "maintains historic lighthouse routes.";

const std::string kOrionPassage =
    "Orion Medal recipients are selected by a council of civic academies that reviews "
    "service to coastal communities. The medal was first awarded to Renata Kolb, a marine "
    "chemist honored for reef restoration research. They also deliver a public lecture "
    "series in harbor towns.";

const std::vector<HopScript>& hop_scripts() {
    static const std::vector<HopScript> hops = {
        {"Veltrix Motors", kVeltrixPassage, "Who founded Veltrix Motors?", "Darian Voss",
         "Veltrix Motors was founded by Darian Voss.", "the founder of Veltrix Motors"},
        {"Darian Voss", kVossPassage, "In which city was Darian Voss born?", "Marlowe City",
         "Darian Voss was born in Marlowe City.", "the city where Darian Voss was born"},
        {"Solquent Energy", kSolquentPassage, "Who founded Solquent Energy?", "Tessa Marn",
         "Solquent Energy was founded by Tessa Marn.", "the founder of Solquent Energy"},
        {"Tessa Marn", kMarnPassage,
         "Which award did Tessa Marn receive from the government of Vantara?", "Orion Medal",
         "Tessa Marn received the Orion Medal from the government of Vantara.",
         "the award that Tessa Marn received from the government of Vantara"},
        {"Marlowe City", kMarlowePassage, "Which country is Marlowe City a part of?", "Vantara",
         "Marlowe City is a part of Vantara.", "the country that Marlowe City is a part of"},
        {"Vantara", kVantaraCapitalPassage, "What is the capital city of Vantara?", "Queluna",
         "The capital city of Vantara is Queluna.", "the capital city of Vantara"},
        {"Vantara", kVantaraHonorsPassage,
         "Which medal is the highest civilian honor of Vantara?", "Orion Medal",
         "The Orion Medal is the highest civilian honor of Vantara.",
         "the medal that is the highest civilian honor of Vantara"},
        {"Orion Medal", kOrionPassage, "Which scientist first received the Orion Medal?",
         "Renata Kolb", "Renata Kolb was the first scientist to receive the Orion Medal.",
         "the scientist who first received the Orion Medal"},
    };
    return hops;
}

const HopScript* script_for_question(const std::string& question) {
    for (const auto& hop : hop_scripts()) {
        if (equals_normalized(hop.question, question)) return &hop;
    }
    return nullptr;
}

// Natural form of a chain: the sink question with every in-chain
// predecessor mention replaced by that hop's noun phrase, recursively.
// Mirrors the bracket nesting except it reads like a question.
std::string natural_question(const ReasoningChain& chain) {
    const size_t n = chain.hops.size();
    std::vector<std::string> phrase(n);
    auto substitute = [&](std::string text, size_t upto) {
        for (size_t p = 0; p < upto; ++p) {
            // Successor check: this predecessor feeds whichever question
            // mentions its answer; replacement is harmless otherwise since
            // validated chains mention each answer exactly once.
            std::string with_article = "the " + chain.hops[p].answer;
            if (contains_normalized(text, with_article)) {
                replace_normalized(text, with_article, phrase[p]);
            } else if (contains_normalized(text, chain.hops[p].answer)) {
                replace_normalized(text, chain.hops[p].answer, phrase[p]);
            }
        }
        return text;
    };
    for (size_t i = 0; i < n; ++i) {
        const HopScript* script = script_for_question(chain.hops[i].question);
        if (!script) throw InternalError("demo corpus: unknown hop question");
        phrase[i] = substitute(script->noun_phrase, i);
    }
    const HopScript* sink = script_for_question(chain.hops.back().question);
    std::string question = sink->question;
    return substitute(question, n - 1);
}

struct Benchmark {
    std::string id;
    std::string question;
    std::string answer;
    std::string response;
};

const std::vector<Benchmark>& benchmarks() {
    static const std::vector<Benchmark> items = {
        {"b1", "In which city was the founder of Veltrix Motors born?", "Marlowe City",
         "Step 1: Veltrix Motors was founded by Darian Voss.\n"
         "Step 2: Darian Voss was born in Marlowe City.\n"
         "Therefore, the answer in just one entity is: Marlowe City"},
        {"b2", "Which scientist first received the highest civilian honor of Vantara?",
         "Renata Kolb",
         "Step 1: The Orion Medal is the highest civilian honor of Vantara.\n"
         "Step 2: Renata Kolb was the first scientist to receive the Orion Medal.\n"
         "Therefore, the answer in just one entity is: Renata Kolb"},
        {"b3", "What is the capital city of the country that Marlowe City is a part of?",
         "Queluna",
         "Step 1: Marlowe City is a part of Vantara.\n"
         "Step 2: The capital city of Vantara is Queluna.\n"
         "Therefore, the answer in just one entity is: Queluna"},
    };
    return items;
}

}  // namespace

RunConfig demo_config() {
    RunConfig config;
    config.llm_provider = "scripted";
    config.keyword_count = 2;
    // Reform sampling needs floor(fraction * chains-per-type) >= 1 to fire;
    // the demo corpus scripts no reform responses, so it stays off.
    config.binary_fraction_positive = 0.0;
    config.binary_fraction_negative = 0.0;
    config.random_seed = 7;
    return config;
}

std::shared_ptr<ScriptedProvider> build_fixture_provider() {
    auto provider = std::make_shared<ScriptedProvider>();
    const std::string& sys = default_system_message();
    const auto& hops = hop_scripts();

    provider->add_prompt(sys, prompts::name_keywords(2, "enterprises"),
                         "1. Veltrix Motors\n2. Solquent Energy");
    provider->add_prompt(sys, prompts::name_keywords(2, "cities"), "1. Marlowe City");
    provider->add_prompt(sys, prompts::name_keywords(2, "countries"), "1. Vantara");

    // The two passages about Vantara answer the same prompt: the first
    // request (second-hop expansion) sees the capital, the second (topic
    // keyword) the civic honors.
    const std::string vantara_prompt = prompts::generate_passage("Vantara");
    provider->add_prompt_ordinal(sys, vantara_prompt, 0, kVantaraCapitalPassage);
    provider->add_prompt_ordinal(sys, vantara_prompt, 1, kVantaraHonorsPassage);
    for (const auto& hop : hops) {
        if (hop.keyword == "Vantara") continue;
        provider->add_prompt(sys, prompts::generate_passage(hop.keyword), hop.passage);
    }

    // First hops are raised from topic-keyword passages, second hops from
    // passages about the previous answer.
    auto add_qa = [&](const HopScript& hop, bool first, const std::string& avoid) {
        std::string question_prompt =
            first ? prompts::first_hop_question(hop.keyword, hop.passage, hop.answer)
                  : prompts::second_hop_question(hop.keyword, hop.passage, hop.answer, avoid);
        provider->add_prompt(sys, question_prompt, hop.question);
        provider->add_prompt(sys, prompts::extract_answer(hop.keyword, hop.passage, hop.question),
                             hop.answer);
        provider->add_prompt(
            sys, prompts::explanation(hop.keyword, hop.passage, hop.question, hop.answer),
            hop.explanation);
    };
    add_qa(hops[0], true, "");                // Veltrix Motors -> Darian Voss
    add_qa(hops[1], false, "Veltrix Motors"); // Darian Voss -> Marlowe City
    add_qa(hops[2], true, "");                // Solquent Energy -> Tessa Marn
    add_qa(hops[3], false, "Solquent Energy"); // Tessa Marn -> Orion Medal
    add_qa(hops[4], true, "");                // Marlowe City -> Vantara
    add_qa(hops[5], false, "Marlowe City");   // Vantara -> Queluna
    add_qa(hops[6], true, "");                // Vantara -> Orion Medal
    add_qa(hops[7], false, "Vantara");        // Orion Medal -> Renata Kolb

    // Later-stage fixtures are discovered by running the pipeline against
    // what is registered so far: first the generator, then composition to
    // learn which chains survive, scripting one naturalization per chain.
    RunConfig config = demo_config();
    auto gateway = std::make_shared<LlmGateway>(provider, RetryPolicy{config.retry_attempts, 0});
    TwohopGenerator generator(gateway, std::make_shared<HeuristicExtractor>(),
                              config.twohop_config());
    std::vector<TopicSeed> topics = {{"enterprises", config.keyword_count},
                                     {"cities", config.keyword_count},
                                     {"countries", config.keyword_count}};
    auto pairs = generator.run_stage1(topics, config.generation_budget());

    auto composition = config.composition_config();
    auto chains = filter_by_duplication(compose_chains(pairs, builtin_graphs(), composition),
                                        composition);
    for (const auto& chain : chains) {
        provider->add_prompt(sys, prompts::naturalize_with_demos(nest_question(chain)),
                             natural_question(chain));
    }

    // Same trick for inference: build the dataset and index exactly the way
    // the infer command will, then script one reasoning trace per benchmark
    // question.
    auto stage2 = run_stage2(pairs, builtin_graphs(), composition, *gateway);
    LocalHashEmbedder embedder(static_cast<size_t>(config.embedding_dimension));
    auto index = build_index(stage2.groups, embedder, config.n_demos, config.random_seed);
    for (const auto& bench : benchmarks()) {
        auto picks = sample(index, Strategy::RetrieveInCluster, bench.question, config.n_demos,
                            config.knn_k, embedder);
        std::vector<Demonstration> demos;
        for (auto& pick : picks) demos.push_back(std::move(pick.demonstration));
        provider->add_prompt(sys, build_prompt(demos, bench.question), bench.response);
    }

    provider->reset_ordinals();
    return provider;
}

RunConfig write_demo_workspace(const std::string& dir_in) {
    namespace fs = std::filesystem;
    fs::create_directories(dir_in);
    const std::string dir = fs::absolute(dir_in).lexically_normal().string();

    auto provider = build_fixture_provider();
    RunConfig config = demo_config();

    std::string topics_path = (fs::path(dir) / "topics.txt").string();
    {
        std::ofstream topics(topics_path);
        if (!topics) throw ConfigError("cannot write " + topics_path);
        topics << "enterprises\ncities\ncountries\n";
    }

    std::string fixtures_path = (fs::path(dir) / "fixtures.jsonl").string();
    provider->save_jsonl(fixtures_path);

    std::string benchmark_path = (fs::path(dir) / "benchmark.jsonl").string();
    {
        std::vector<GoldExample> examples;
        for (const auto& item : benchmarks()) {
            examples.push_back({item.id, item.question, {item.answer}});
        }
        write_benchmark_jsonl(examples, benchmark_path);
    }

    config.fixtures_path = fixtures_path;
    config.topics_file = topics_path;
    config.pairs_path = (fs::path(dir) / "pairs.jsonl").string();
    config.groups_path = (fs::path(dir) / "groups.jsonl").string();
    config.save((fs::path(dir) / "config.ini").string());
    return config;
}

}  // namespace demo
}  // namespace spcot
