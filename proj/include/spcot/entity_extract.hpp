#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "spcot/gateway.hpp"
#include "spcot/types.hpp"

namespace spcot {

struct EntityMention {
    std::string surface;
    EntityLabel label = EntityLabel::Other;
    size_t begin = 0;  // character offsets into the passage
    size_t end = 0;
};

// Candidate-answer source. extract_candidates() deduplicates mentions by
// normalized surface (first occurrence wins) and drops any mention whose
// normalized surface is in `block`.
class Extractor {
public:
    virtual ~Extractor() = default;

    std::vector<EntityMention> extract_candidates(const std::string& passage,
                                                  const std::set<std::string>& block) const;

protected:
    virtual std::vector<EntityMention> raw_mentions(const std::string& passage) const = 0;
};

// Gazetteer-free rules: capitalized spans with stopword-aware boundaries,
// classified by suffix/context cues; numeric, date, percent, money, time,
// ordinal and quantity patterns.
class HeuristicExtractor : public Extractor {
protected:
    std::vector<EntityMention> raw_mentions(const std::string& passage) const override;
};

// Asks the configured model to list entities, one "surface | LABEL" line
// each. Mentions that cannot be located in the passage are dropped.
class LlmExtractor : public Extractor {
public:
    explicit LlmExtractor(std::shared_ptr<LlmGateway> gateway) : gateway_(std::move(gateway)) {}

protected:
    std::vector<EntityMention> raw_mentions(const std::string& passage) const override;

private:
    std::shared_ptr<LlmGateway> gateway_;
};

std::unique_ptr<Extractor> make_extractor(const std::string& kind,
                                          std::shared_ptr<LlmGateway> gateway);

// Removes mentions whose label cannot seed a follow-up passage (QUANTITY,
// ORDINAL, CARDINAL, PERCENT, MONEY, DATE, TIME). Order-preserving.
std::vector<EntityMention> filter_keyword_feasible(const std::vector<EntityMention>& mentions);

}  // namespace spcot
