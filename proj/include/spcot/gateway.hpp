#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

namespace spcot {

enum class TaskKind {
    KeywordNaming,
    PassageGeneration,
    QuestionGeneration,
    AnswerExtraction,
    ExplanationGeneration,
    BinaryReform,
    MultihopReform,
    Inference,
};

// 1.0 where diversity helps (naming terms, raising questions), 0.0 for the
// most deterministic response everywhere else.
double temperature_for(TaskKind task);

// System message attached verbatim to every request.
const std::string& default_system_message();

struct CompletionRequest {
    std::string system_message;
    std::string prompt;
    double temperature = 0.0;
    int max_tokens = 256;
};

// Stable key identifying a request for fixture lookup. Repeated identical
// prompts are distinguished by an ordinal suffix ("<key>#<n>").
std::string fixture_key(const std::string& system_message, const std::string& prompt);
std::string fixture_key_with_ordinal(const std::string& system_message, const std::string& prompt,
                                     std::uint64_t ordinal);

class ChatProvider {
public:
    virtual ~ChatProvider() = default;
    virtual std::string complete(const CompletionRequest& request) = 0;
    // True when a failure is worth retrying (transient transport errors).
    virtual bool retryable() const { return false; }
};

struct RetryPolicy {
    int attempts = 3;
    int base_delay_ms = 1000;  // doubles per attempt: 1s, 2s, 4s
};

struct MaxTokenDefaults {
    int passage = 512;
    int question = 128;
    int answer = 128;
    int explanation = 128;
    int inference = 512;

    int for_task(TaskKind task) const;
};

// Routes every pipeline call through the temperature policy and the shared
// system message, retrying transient provider failures with backoff.
class LlmGateway {
public:
    LlmGateway(std::shared_ptr<ChatProvider> provider, RetryPolicy retry = {},
               std::string system_message = default_system_message(),
               MaxTokenDefaults max_tokens = {});

    std::string complete(TaskKind task, const std::string& prompt);
    std::string complete(const CompletionRequest& request);

    std::uint64_t request_count() const { return requests_.load(); }
    const std::string& system_message() const { return system_message_; }

private:
    std::shared_ptr<ChatProvider> provider_;
    RetryPolicy retry_;
    std::string system_message_;
    MaxTokenDefaults max_tokens_;
    std::atomic<std::uint64_t> requests_{0};
};

}  // namespace spcot
