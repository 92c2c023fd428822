#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace spcot {

using EmbeddingVector = std::vector<double>;

double dot(const EmbeddingVector& a, const EmbeddingVector& b);
double squared_distance(const EmbeddingVector& a, const EmbeddingVector& b);
void l2_normalize(EmbeddingVector& v);

class Embedder {
public:
    virtual ~Embedder() = default;
    // One unit-norm vector per text.
    virtual std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;
    virtual size_t dimension() const = 0;
};

// Deterministic fallback: character n-grams feature-hashed into a fixed-size
// signed accumulator, then L2-normalized. No model weights involved.
class LocalHashEmbedder : public Embedder {
public:
    explicit LocalHashEmbedder(size_t dimension = 256, std::uint64_t seed = 0x5bc0ffee)
        : dimension_(dimension), seed_(seed) {}

    std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) override;
    size_t dimension() const override { return dimension_; }

private:
    size_t dimension_;
    std::uint64_t seed_;
};

}  // namespace spcot
