#pragma once

#include <map>
#include <string>

#include <nlohmann/json.hpp>

namespace spcot {

// Every command writes "<output>.manifest.json" beside its output with the
// config hash, seed and counts. Rewriting an output whose manifest carries
// a different config hash requires --force.
struct Manifest {
    std::string command;
    std::string config_hash;
    long seed = 0;
    std::string provider;
    bool complete = true;
    nlohmann::json counts = nlohmann::json::object();
    bool include_timing = true;
    double elapsed_seconds = 0.0;

    nlohmann::json to_json() const;
};

std::string manifest_path_for(const std::string& output_path);

// Throws ConfigError when the existing manifest has a different config hash
// and force is off.
void check_overwrite(const std::string& output_path, const std::string& config_hash, bool force);

void write_manifest(const Manifest& manifest, const std::string& output_path);

}  // namespace spcot
