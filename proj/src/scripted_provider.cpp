#include "spcot/scripted_provider.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "spcot/errors.hpp"

namespace spcot {

namespace {

std::string base_of(const std::string& key) {
    auto pos = key.find('#');
    return pos == std::string::npos ? key : key.substr(0, pos);
}

}  // namespace

void ScriptedProvider::add(const std::string& key, const std::string& response) {
    if (responses_.emplace(key, response).second) insertion_order_.push_back(key);
    auto base = base_of(key);
    if (!ordinals_.count(base)) {
        ordinals_.emplace(base, std::make_unique<std::atomic<std::uint64_t>>(0));
    }
}

void ScriptedProvider::add_prompt(const std::string& system_message, const std::string& prompt,
                                  const std::string& response) {
    add(fixture_key(system_message, prompt), response);
}

void ScriptedProvider::add_prompt_ordinal(const std::string& system_message,
                                          const std::string& prompt, std::uint64_t ordinal,
                                          const std::string& response) {
    add(fixture_key_with_ordinal(system_message, prompt, ordinal), response);
}

void ScriptedProvider::load_jsonl(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open fixture file: " + path);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        nlohmann::json obj;
        try {
            obj = nlohmann::json::parse(line);
        } catch (const nlohmann::json::exception& e) {
            throw ConfigError("bad fixture line " + std::to_string(lineno) + ": " + e.what());
        }
        if (!obj.contains("key") || !obj.contains("response")) {
            throw ConfigError("fixture line " + std::to_string(lineno) +
                              " missing \"key\" or \"response\"");
        }
        add(obj.at("key").get<std::string>(), obj.at("response").get<std::string>());
    }
}

void ScriptedProvider::reset_ordinals() {
    for (auto& [key, counter] : ordinals_) counter->store(0);
}

void ScriptedProvider::save_jsonl(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write fixture file: " + path);
    for (const auto& key : insertion_order_) {
        nlohmann::json obj;
        obj["key"] = key;
        obj["response"] = responses_.at(key);
        out << obj.dump() << "\n";
    }
}

std::string ScriptedProvider::complete(const CompletionRequest& request) {
    const std::string base = fixture_key(request.system_message, request.prompt);
    std::uint64_t ordinal = 0;
    auto counter = ordinals_.find(base);
    if (counter != ordinals_.end()) ordinal = counter->second->fetch_add(1);

    auto exact = responses_.find(base + "#" + std::to_string(ordinal));
    if (exact != responses_.end()) return exact->second;
    auto any = responses_.find(base);
    if (any != responses_.end()) return any->second;
    throw FixtureMiss("no fixture for key " + base + "#" + std::to_string(ordinal) +
                      " (prompt starts: \"" + request.prompt.substr(0, 60) + "\")");
}

}  // namespace spcot
