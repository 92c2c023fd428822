#include "spcot/gateway.hpp"

#include <chrono>
#include <thread>

#include "spcot/errors.hpp"
#include "spcot/text.hpp"

namespace spcot {

double temperature_for(TaskKind task) {
    switch (task) {
        case TaskKind::KeywordNaming:
        case TaskKind::QuestionGeneration:
            return 1.0;
        default:
            return 0.0;
    }
}

const std::string& default_system_message() {
    static const std::string msg =
        "You should use your knowledge to answer the question to the best of your ability, "
        "not refuse to answer, even though you know your knowledge is sometimes out of date. "
        "If some references are uncertain, answer all possible cases rather than requesting "
        "further information.";
    return msg;
}

int MaxTokenDefaults::for_task(TaskKind task) const {
    switch (task) {
        case TaskKind::PassageGeneration:
            return passage;
        case TaskKind::KeywordNaming:
        case TaskKind::QuestionGeneration:
        case TaskKind::BinaryReform:
        case TaskKind::MultihopReform:
            return question;
        case TaskKind::AnswerExtraction:
            return answer;
        case TaskKind::ExplanationGeneration:
            return explanation;
        case TaskKind::Inference:
            return inference;
    }
    return question;
}

std::string fixture_key(const std::string& system_message, const std::string& prompt) {
    std::string payload = system_message;
    payload.push_back('\x1f');
    payload += prompt;
    return hex64(fnv1a64(payload));
}

std::string fixture_key_with_ordinal(const std::string& system_message, const std::string& prompt,
                                     std::uint64_t ordinal) {
    return fixture_key(system_message, prompt) + "#" + std::to_string(ordinal);
}

LlmGateway::LlmGateway(std::shared_ptr<ChatProvider> provider, RetryPolicy retry,
                       std::string system_message, MaxTokenDefaults max_tokens)
    : provider_(std::move(provider)),
      retry_(retry),
      system_message_(std::move(system_message)),
      max_tokens_(max_tokens) {}

std::string LlmGateway::complete(TaskKind task, const std::string& prompt) {
    CompletionRequest request;
    request.system_message = system_message_;
    request.prompt = prompt;
    request.temperature = temperature_for(task);
    request.max_tokens = max_tokens_.for_task(task);
    return complete(request);
}

std::string LlmGateway::complete(const CompletionRequest& request) {
    if (request.prompt.empty()) throw std::invalid_argument("prompt must be non-empty");
    if (request.temperature < 0.0 || request.temperature > 2.0) {
        throw std::invalid_argument("temperature out of range [0, 2]");
    }
    int delay_ms = retry_.base_delay_ms;
    for (int attempt = 1;; ++attempt) {
        ++requests_;
        try {
            return provider_->complete(request);
        } catch (const TransportError&) {
            if (!provider_->retryable() || attempt >= retry_.attempts) throw;
            if (delay_ms > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay_ms));
            delay_ms *= 2;
        }
    }
}

}  // namespace spcot
