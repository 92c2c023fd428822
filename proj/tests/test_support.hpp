#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spcot/embedder.hpp"
#include "spcot/gateway.hpp"
#include "spcot/scripted_provider.hpp"
#include "spcot/types.hpp"

namespace testsupport {

inline spcot::QAQuadruplet quad(std::string keyword, std::string question, std::string answer,
                                std::string hop_id,
                                spcot::EntityLabel label = spcot::EntityLabel::Other) {
    spcot::QAQuadruplet q;
    q.keyword = std::move(keyword);
    q.question = std::move(question);
    q.answer = std::move(answer);
    q.explanation = "It is " + q.answer + ".";
    q.passage = "A passage about " + q.keyword + " mentioning " + q.answer + ".";
    q.answer_label = label;
    q.hop_id = std::move(hop_id);
    return q;
}

inline spcot::ReasoningChain chain(std::string type,
                                   std::vector<spcot::QAQuadruplet> hops) {
    return spcot::make_chain(std::move(type), std::move(hops));
}

// Gateway over an in-memory scripted table; entries are added against the
// default system message.
struct ScriptedGateway {
    std::shared_ptr<spcot::ScriptedProvider> provider =
        std::make_shared<spcot::ScriptedProvider>();
    std::shared_ptr<spcot::LlmGateway> gateway =
        std::make_shared<spcot::LlmGateway>(provider, spcot::RetryPolicy{3, 0});

    void script(const std::string& prompt, const std::string& response) {
        provider->add_prompt(spcot::default_system_message(), prompt, response);
    }
};

// Embedder returning planted vectors by exact text; unknown texts fall back
// to the deterministic local embedder.
class StubEmbedder : public spcot::Embedder {
public:
    explicit StubEmbedder(size_t dimension) : dimension_(dimension), fallback_(dimension) {}

    void plant(const std::string& text, spcot::EmbeddingVector v) {
        planted_[text] = std::move(v);
    }

    std::vector<spcot::EmbeddingVector> embed(const std::vector<std::string>& texts) override {
        std::vector<spcot::EmbeddingVector> out;
        for (const auto& text : texts) {
            auto it = planted_.find(text);
            if (it != planted_.end()) {
                out.push_back(it->second);
            } else {
                out.push_back(fallback_.embed({text}).front());
            }
        }
        return out;
    }

    size_t dimension() const override { return dimension_; }

private:
    size_t dimension_;
    spcot::LocalHashEmbedder fallback_;
    std::map<std::string, spcot::EmbeddingVector> planted_;
};

}  // namespace testsupport
