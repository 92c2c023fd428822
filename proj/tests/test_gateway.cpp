#include <doctest.h>

#include <filesystem>

#include "spcot/errors.hpp"
#include "spcot/gateway.hpp"
#include "spcot/scripted_provider.hpp"
#include "test_support.hpp"

using namespace spcot;

TEST_SUITE("gateway") {

TEST_CASE("temperature policy") {
    CHECK(temperature_for(TaskKind::PassageGeneration) == 0.0);
    CHECK(temperature_for(TaskKind::KeywordNaming) == 1.0);
    CHECK(temperature_for(TaskKind::QuestionGeneration) == 1.0);
    CHECK(temperature_for(TaskKind::AnswerExtraction) == 0.0);
    CHECK(temperature_for(TaskKind::ExplanationGeneration) == 0.0);
    CHECK(temperature_for(TaskKind::BinaryReform) == 0.0);
    CHECK(temperature_for(TaskKind::MultihopReform) == 0.0);
    CHECK(temperature_for(TaskKind::Inference) == 0.0);
}

TEST_CASE("scripted provider answers registered prompts") {
    testsupport::ScriptedGateway scripted;
    scripted.script("prompt P", "Elon Musk");
    CHECK(scripted.gateway->complete(TaskKind::Inference, "prompt P") == "Elon Musk");
}

TEST_CASE("scripted provider misses unregistered prompts") {
    testsupport::ScriptedGateway scripted;
    scripted.script("known", "x");
    CHECK_THROWS_AS(scripted.gateway->complete(TaskKind::Inference, "unknown"),
                    FixtureMiss);
}

TEST_CASE("repeated identical prompts follow ordinals") {
    auto provider = std::make_shared<ScriptedProvider>();
    const auto& sys = default_system_message();
    provider->add_prompt_ordinal(sys, "same prompt", 0, "first response");
    provider->add_prompt_ordinal(sys, "same prompt", 1, "second response");
    LlmGateway gateway(provider, RetryPolicy{3, 0});
    CHECK(gateway.complete(TaskKind::Inference, "same prompt") == "first response");
    CHECK(gateway.complete(TaskKind::Inference, "same prompt") == "second response");
    CHECK_THROWS_AS(gateway.complete(TaskKind::Inference, "same prompt"), FixtureMiss);

    provider->reset_ordinals();
    CHECK(gateway.complete(TaskKind::Inference, "same prompt") == "first response");
}

TEST_CASE("an ordinal-free entry serves every repetition") {
    testsupport::ScriptedGateway scripted;
    scripted.script("loop", "same");
    for (int i = 0; i < 3; ++i) {
        CHECK(scripted.gateway->complete(TaskKind::Inference, "loop") == "same");
    }
}

TEST_CASE("fixture table round-trips through jsonl") {
    auto path = std::filesystem::temp_directory_path() / "spcot_fixture_roundtrip.jsonl";
    {
        ScriptedProvider provider;
        provider.add_prompt(default_system_message(), "p1", "r1");
        provider.add_prompt_ordinal(default_system_message(), "p2", 0, "r2");
        provider.save_jsonl(path.string());
    }
    auto loaded = std::make_shared<ScriptedProvider>();
    loaded->load_jsonl(path.string());
    CHECK(loaded->size() == 2);
    LlmGateway gateway(loaded, RetryPolicy{3, 0});
    CHECK(gateway.complete(TaskKind::Inference, "p1") == "r1");
    CHECK(gateway.complete(TaskKind::Inference, "p2") == "r2");
    std::filesystem::remove(path);
}

namespace {

class FlakyProvider : public ChatProvider {
public:
    explicit FlakyProvider(int failures) : failures_(failures) {}
    std::string complete(const CompletionRequest&) override {
        ++calls;
        if (calls <= failures_) throw TransportError("temporary outage");
        return "recovered";
    }
    bool retryable() const override { return true; }
    int calls = 0;

private:
    int failures_;
};

}  // namespace

TEST_CASE("transient transport failures are retried with the configured budget") {
    auto flaky = std::make_shared<FlakyProvider>(2);
    LlmGateway gateway(flaky, RetryPolicy{3, 0});
    CHECK(gateway.complete(TaskKind::Inference, "q") == "recovered");
    CHECK(flaky->calls == 3);
}

TEST_CASE("exhausted retries propagate the transport error") {
    auto flaky = std::make_shared<FlakyProvider>(10);
    LlmGateway gateway(flaky, RetryPolicy{3, 0});
    CHECK_THROWS_AS(gateway.complete(TaskKind::Inference, "q"), TransportError);
    CHECK(flaky->calls == 3);
}

TEST_CASE("the scripted provider is never retried") {
    testsupport::ScriptedGateway scripted;
    CHECK_THROWS_AS(scripted.gateway->complete(TaskKind::Inference, "missing"), FixtureMiss);
    CHECK(scripted.gateway->request_count() == 1);
}

TEST_CASE("request preconditions") {
    testsupport::ScriptedGateway scripted;
    CompletionRequest request;
    request.prompt = "";
    CHECK_THROWS_AS(scripted.gateway->complete(request), std::invalid_argument);
    request.prompt = "x";
    request.temperature = 3.0;
    CHECK_THROWS_AS(scripted.gateway->complete(request), std::invalid_argument);
}

TEST_CASE("fixture keys separate system message and prompt") {
    CHECK(fixture_key("sys", "prompt") != fixture_key("sysp", "rompt"));
    CHECK(fixture_key("s", "p") == fixture_key("s", "p"));
    CHECK(fixture_key_with_ordinal("s", "p", 2) == fixture_key("s", "p") + "#2");
}

TEST_CASE("max token defaults per task") {
    MaxTokenDefaults defaults;
    CHECK(defaults.for_task(TaskKind::PassageGeneration) == 512);
    CHECK(defaults.for_task(TaskKind::QuestionGeneration) == 128);
    CHECK(defaults.for_task(TaskKind::Inference) == 512);
}

}  // TEST_SUITE
