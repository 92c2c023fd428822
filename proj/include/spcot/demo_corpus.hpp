#pragma once

#include <memory>
#include <string>

#include "spcot/run_config.hpp"
#include "spcot/scripted_provider.hpp"

namespace spcot {
namespace demo {

// Scripted fixture corpus over a small fictional entity web, rich enough to
// compose chains of every registered graph type. Intended for offline runs,
// tests and the quickstart.
std::shared_ptr<ScriptedProvider> build_fixture_provider();

// Configuration the fixtures were scripted against (scripted provider,
// two keywords per topic, binary reform disabled).
RunConfig demo_config();

// Writes fixtures.jsonl, topics.txt, benchmark.jsonl and config.ini into
// `dir` and returns the config (with paths pointing into `dir`).
RunConfig write_demo_workspace(const std::string& dir);

}  // namespace demo
}  // namespace spcot
