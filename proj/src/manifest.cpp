#include "spcot/manifest.hpp"

#include <filesystem>
#include <fstream>

#include "spcot/errors.hpp"

namespace spcot {

nlohmann::json Manifest::to_json() const {
    nlohmann::json doc;
    doc["command"] = command;
    doc["config_hash"] = config_hash;
    doc["seed"] = seed;
    doc["provider"] = provider;
    doc["complete"] = complete;
    doc["counts"] = counts;
    if (include_timing) doc["timing"] = {{"elapsed_seconds", elapsed_seconds}};
    return doc;
}

std::string manifest_path_for(const std::string& output_path) {
    return output_path + ".manifest.json";
}

void check_overwrite(const std::string& output_path, const std::string& config_hash, bool force) {
    if (force) return;
    std::string path = manifest_path_for(output_path);
    if (!std::filesystem::exists(path)) return;
    std::ifstream in(path);
    if (!in) return;
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception&) {
        throw ConfigError("existing manifest is unreadable, use --force to overwrite: " + path);
    }
    std::string existing = doc.value("config_hash", std::string());
    if (!existing.empty() && existing != config_hash) {
        throw ConfigError("refusing to overwrite " + output_path +
                          ": it was produced with config hash " + existing +
                          " (current " + config_hash + "); use --force to override");
    }
}

void write_manifest(const Manifest& manifest, const std::string& output_path) {
    std::ofstream out(manifest_path_for(output_path));
    if (!out) throw ConfigError("cannot write manifest for " + output_path);
    out << manifest.to_json().dump(2) << "\n";
}

}  // namespace spcot
