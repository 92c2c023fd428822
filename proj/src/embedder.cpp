#include "spcot/embedder.hpp"

#include <cmath>

#include "spcot/errors.hpp"
#include "spcot/text.hpp"

namespace spcot {

double dot(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.size() != b.size()) throw InternalError("embedding dimension mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

double squared_distance(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.size() != b.size()) throw InternalError("embedding dimension mismatch");
    double sum = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return sum;
}

void l2_normalize(EmbeddingVector& v) {
    double norm = std::sqrt(dot(v, v));
    if (norm <= 0.0) {
        // Degenerate all-zero vector: place it on a fixed axis.
        if (!v.empty()) v[0] = 1.0;
        return;
    }
    for (double& x : v) x /= norm;
}

std::vector<EmbeddingVector> LocalHashEmbedder::embed(const std::vector<std::string>& texts) {
    std::vector<EmbeddingVector> out;
    out.reserve(texts.size());
    for (const auto& text : texts) {
        EmbeddingVector v(dimension_, 0.0);
        std::string norm = normalized_text(text);
        // Pad so short strings still produce 3-grams.
        std::string padded = "^^" + norm + "$$";
        for (size_t n = 2; n <= 4; ++n) {
            if (padded.size() < n) continue;
            for (size_t i = 0; i + n <= padded.size(); ++i) {
                std::uint64_t h = fnv1a64(std::string_view(padded).substr(i, n)) ^ seed_;
                size_t index = h % dimension_;
                double sign = ((h >> 32) & 1) ? 1.0 : -1.0;
                v[index] += sign;
            }
        }
        l2_normalize(v);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace spcot
