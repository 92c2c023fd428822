#pragma once

#include <memory>
#include <string>
#include <vector>

#include "spcot/embedder.hpp"
#include "spcot/gateway.hpp"

namespace spcot {

// Chat-completion client: one stateless request per pipeline step, single
// system role plus single user role. Transient transport and rate-limit
// failures surface as TransportError so the gateway can retry them.
class HttpChatProvider : public ChatProvider {
public:
    HttpChatProvider(std::string endpoint, std::string model, std::string api_key);

    std::string complete(const CompletionRequest& request) override;
    bool retryable() const override { return true; }

private:
    std::string endpoint_;
    std::string model_;
    std::string api_key_;
};

class HttpEmbedder : public Embedder {
public:
    HttpEmbedder(std::string endpoint, std::string model, std::string api_key,
                 size_t expected_dimension = 0);

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;
    size_t dimension() const override { return dimension_; }

private:
    std::string endpoint_;
    std::string model_;
    std::string api_key_;
    size_t dimension_;
};

// Reads the API key from the configured environment variable; empty result
// means the variable is missing or blank.
std::string api_key_from_env(const std::string& env_var);

}  // namespace spcot
