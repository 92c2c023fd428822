#include "spcot/run_config.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "spcot/errors.hpp"
#include "spcot/text.hpp"

namespace spcot {

namespace {

// Field table driving load, save and canonical(): section, key, getter,
// setter. Keeping them together is what makes round-trips lossless.
struct Field {
    const char* section;
    const char* key;
    std::function<std::string(const RunConfig&)> get;
    std::function<void(RunConfig&, const std::string&)> set;
};

std::string dtos(double value) {
    std::ostringstream out;
    out << value;
    return out.str();
}

const std::vector<Field>& fields() {
    auto str = [](std::string RunConfig::*member) {
        return Field{nullptr, nullptr, [member](const RunConfig& c) { return c.*member; },
                     [member](RunConfig& c, const std::string& v) { c.*member = v; }};
    };
    auto num = [](int RunConfig::*member) {
        return Field{nullptr, nullptr,
                     [member](const RunConfig& c) { return std::to_string(c.*member); },
                     [member](RunConfig& c, const std::string& v) { c.*member = std::stoi(v); }};
    };
    auto lng = [](long RunConfig::*member) {
        return Field{nullptr, nullptr,
                     [member](const RunConfig& c) { return std::to_string(c.*member); },
                     [member](RunConfig& c, const std::string& v) { c.*member = std::stol(v); }};
    };
    auto dbl = [](double RunConfig::*member) {
        return Field{nullptr, nullptr, [member](const RunConfig& c) { return dtos(c.*member); },
                     [member](RunConfig& c, const std::string& v) { c.*member = std::stod(v); }};
    };
    auto at = [](Field f, const char* section, const char* key) {
        f.section = section;
        f.key = key;
        return f;
    };

    static const std::vector<Field> table = {
        at(str(&RunConfig::llm_provider), "llm", "provider"),
        at(str(&RunConfig::llm_endpoint), "llm", "endpoint"),
        at(str(&RunConfig::llm_model), "llm", "model"),
        at(str(&RunConfig::api_key_env), "llm", "api_key_env"),
        at(num(&RunConfig::max_concurrency), "llm", "max_concurrency"),
        at(num(&RunConfig::retry_attempts), "llm", "retry_attempts"),
        at(num(&RunConfig::retry_base_delay_ms), "llm", "retry_base_delay_ms"),
        at(str(&RunConfig::fixtures_path), "llm", "fixtures"),
        at(str(&RunConfig::embedding_provider), "embedding", "provider"),
        at(str(&RunConfig::embedding_endpoint), "embedding", "endpoint"),
        at(str(&RunConfig::embedding_model), "embedding", "model"),
        at(num(&RunConfig::embedding_dimension), "embedding", "dimension"),
        at(num(&RunConfig::keyword_count), "generation", "keyword_count"),
        at(num(&RunConfig::max_pairs), "generation", "max_pairs"),
        at(num(&RunConfig::max_candidates_per_passage), "generation",
           "max_candidates_per_passage"),
        at(num(&RunConfig::min_passage_chars), "generation", "min_passage_chars"),
        at(str(&RunConfig::accordance), "generation", "accordance"),
        at(dbl(&RunConfig::accordance_f1_threshold), "generation", "accordance_f1_threshold"),
        at(str(&RunConfig::extractor), "generation", "extractor"),
        at(str(&RunConfig::topics_file), "generation", "topics_file"),
        at(num(&RunConfig::max_duplication_degree), "composition", "max_duplication_degree"),
        at(dbl(&RunConfig::binary_fraction_positive), "composition", "binary_fraction_positive"),
        at(dbl(&RunConfig::binary_fraction_negative), "composition", "binary_fraction_negative"),
        at(str(&RunConfig::graphs_file), "composition", "graphs_file"),
        at(num(&RunConfig::n_demos), "sampler", "n_demos"),
        at(num(&RunConfig::knn_k), "sampler", "knn_k"),
        at(str(&RunConfig::strategy), "sampler", "strategy"),
        at(str(&RunConfig::inference_mode), "inference", "mode"),
        at(lng(&RunConfig::random_seed), "run", "random_seed"),
        at(str(&RunConfig::pairs_path), "paths", "pairs"),
        at(str(&RunConfig::groups_path), "paths", "groups"),
        at(str(&RunConfig::index_path), "paths", "index"),
    };
    return table;
}

}  // namespace

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);

    RunConfig config;
    std::string section;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#' || s[0] == ';') continue;
        if (s.front() == '[' && s.back() == ']') {
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        auto eq = s.find('=');
        if (eq == std::string::npos) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        }
        std::string key = trim(s.substr(0, eq));
        std::string value = trim(s.substr(eq + 1));
        bool known = false;
        for (const auto& field : fields()) {
            if (section == field.section && key == field.key) {
                try {
                    field.set(config, value);
                } catch (const std::exception&) {
                    throw ConfigError(path + ":" + std::to_string(lineno) + ": bad value for " +
                                      key);
                }
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError(path + ":" + std::to_string(lineno) + ": unknown key [" + section +
                              "] " + key);
        }
    }
    return config;
}

std::string RunConfig::canonical() const {
    std::ostringstream out;
    std::string section;
    for (const auto& field : fields()) {
        if (section != field.section) {
            if (!section.empty()) out << "\n";
            section = field.section;
            out << "[" << section << "]\n";
        }
        out << field.key << " = " << field.get(*this) << "\n";
    }
    return out.str();
}

void RunConfig::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write config file: " + path);
    out << canonical();
}

std::string RunConfig::hash() const {
    return hex64(fnv1a64(canonical()));
}

GenerationBudget RunConfig::generation_budget() const {
    GenerationBudget budget;
    budget.max_pairs = max_pairs;
    budget.max_candidates_per_passage = max_candidates_per_passage;
    budget.random_seed = random_seed;
    return budget;
}

TwohopConfig RunConfig::twohop_config() const {
    TwohopConfig config;
    config.min_passage_chars = min_passage_chars;
    if (accordance == "exact") {
        config.accordance = AccordanceMode::Exact;
    } else if (accordance == "token_f1") {
        config.accordance = AccordanceMode::TokenF1;
    } else {
        throw ConfigError("unknown accordance mode: " + accordance);
    }
    config.accordance_f1_threshold = accordance_f1_threshold;
    return config;
}

CompositionConfig RunConfig::composition_config() const {
    CompositionConfig config;
    config.max_duplication_degree = max_duplication_degree;
    config.binary_fraction_positive = binary_fraction_positive;
    config.binary_fraction_negative = binary_fraction_negative;
    config.random_seed = random_seed;
    return config;
}

}  // namespace spcot
