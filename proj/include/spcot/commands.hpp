#pragma once

#include <iosfwd>
#include <memory>
#include <string>

#include "spcot/embedder.hpp"
#include "spcot/gateway.hpp"
#include "spcot/run_config.hpp"

namespace spcot {

struct CommandOptions {
    bool force = false;
    bool include_timing = true;
};

// Provider wiring shared by the commands. Scripted mode requires a fixture
// file; http mode requires the API key environment variable to be set
// before any request goes out.
std::shared_ptr<LlmGateway> make_gateway(const RunConfig& config);
std::unique_ptr<Embedder> make_embedder(const RunConfig& config);

int cmd_generate(const RunConfig& config, const std::string& out_path,
                 const CommandOptions& options, std::ostream& err);

int cmd_compose(const RunConfig& config, const std::string& pairs_path,
                const std::string& out_path, const CommandOptions& options, std::ostream& err);

int cmd_sample(const RunConfig& config, const std::string& dataset_path,
               const std::string& question, std::ostream& out);

int cmd_infer(const RunConfig& config, const std::string& benchmark_path,
              const std::string& dataset_path, const std::string& out_path,
              const CommandOptions& options, std::ostream& err);

int cmd_eval(const RunConfig& config, const std::string& preds_path, const std::string& golds_path,
             const std::string& report_path, const CommandOptions& options, std::ostream& out);

int cmd_stats(const RunConfig& config, const std::string& dataset_path, std::ostream& out);

// Writes the offline demo workspace (fixtures, topics, benchmark, config).
int cmd_make_fixtures(const std::string& dir, std::ostream& out);

}  // namespace spcot
