#include "spcot/http_provider.hpp"

#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "spcot/errors.hpp"

namespace spcot {

namespace {

using nlohmann::json;

struct Endpoint {
    std::string base;  // scheme://host[:port]
    std::string prefix;
};

Endpoint split_endpoint(const std::string& endpoint) {
    auto scheme_end = endpoint.find("://");
    if (scheme_end == std::string::npos) {
        throw ConfigError("endpoint must include a scheme: " + endpoint);
    }
    auto path_start = endpoint.find('/', scheme_end + 3);
    if (path_start == std::string::npos) return {endpoint, ""};
    std::string prefix = endpoint.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
    return {endpoint.substr(0, path_start), prefix};
}

json post_json(const std::string& endpoint, const std::string& path, const std::string& api_key,
               const json& body) {
    Endpoint ep = split_endpoint(endpoint);
    httplib::Client client(ep.base);
    client.set_connection_timeout(30);
    client.set_read_timeout(120);
    httplib::Headers headers;
    if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);

    auto result = client.Post(ep.prefix + path, headers, body.dump(), "application/json");
    if (!result) {
        throw TransportError("request to " + ep.base + path + " failed: " +
                             httplib::to_string(result.error()));
    }
    if (result->status == 429 || result->status >= 500) {
        throw TransportError("HTTP " + std::to_string(result->status) + " from " + path);
    }
    if (result->status != 200) {
        throw ProviderError("HTTP " + std::to_string(result->status) + " from " + path + ": " +
                            result->body.substr(0, 200));
    }
    try {
        return json::parse(result->body);
    } catch (const json::exception& e) {
        throw ProviderError(std::string("unparseable response body: ") + e.what());
    }
}

}  // namespace

std::string api_key_from_env(const std::string& env_var) {
    const char* value = std::getenv(env_var.c_str());
    return value ? value : "";
}

HttpChatProvider::HttpChatProvider(std::string endpoint, std::string model, std::string api_key)
    : endpoint_(std::move(endpoint)), model_(std::move(model)), api_key_(std::move(api_key)) {}

std::string HttpChatProvider::complete(const CompletionRequest& request) {
    json body{{"model", model_},
              {"messages",
               {{{"role", "system"}, {"content", request.system_message}},
                {{"role", "user"}, {"content", request.prompt}}}},
              {"temperature", request.temperature},
              {"max_tokens", request.max_tokens}};
    json response = post_json(endpoint_, "/chat/completions", api_key_, body);
    try {
        return response.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw ProviderError(std::string("unexpected chat-completion shape: ") + e.what());
    }
}

HttpEmbedder::HttpEmbedder(std::string endpoint, std::string model, std::string api_key,
                           size_t expected_dimension)
    : endpoint_(std::move(endpoint)),
      model_(std::move(model)),
      api_key_(std::move(api_key)),
      dimension_(expected_dimension) {}

std::vector<EmbeddingVector> HttpEmbedder::embed(const std::vector<std::string>& texts) {
    json body{{"model", model_}, {"input", texts}};
    json response = post_json(endpoint_, "/embeddings", api_key_, body);
    std::vector<EmbeddingVector> out;
    try {
        for (const auto& item : response.at("data")) {
            EmbeddingVector v = item.at("embedding").get<EmbeddingVector>();
            l2_normalize(v);
            out.push_back(std::move(v));
        }
    } catch (const json::exception& e) {
        throw ProviderError(std::string("unexpected embeddings shape: ") + e.what());
    }
    if (out.size() != texts.size()) {
        throw ProviderError("embeddings response count mismatch");
    }
    if (!out.empty()) dimension_ = out.front().size();
    return out;
}

}  // namespace spcot
