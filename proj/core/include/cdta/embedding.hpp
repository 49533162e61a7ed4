#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace cdta {

struct EmbeddingVector {
    std::vector<float> values;
    double norm = 0.0;  // cached L2 norm

    std::size_t dim() const { return values.size(); }

    static EmbeddingVector from_values(std::vector<float> v);
};

/// Cosine similarity; 0 when either vector has zero norm.
double cosine(const EmbeddingVector& a, const EmbeddingVector& b);

/// Deterministic offline embedding: every lowercased alphanumeric word is
/// hashed (FNV-1a) into one of `dim` buckets, counts accumulated, then
/// L2-normalized. Shared vocabulary yields high cosine, disjoint vocabulary
/// near zero (up to rare bucket collisions), which gives real geometry to
/// semantic chunking, topic dedup and retrieval without any network.
EmbeddingVector hash_embedding(std::string_view text, std::size_t dim = 1536);

/// Raw little-endian float32 serialization (cache entries, .vec files).
std::string embedding_to_bytes(const EmbeddingVector& v);
EmbeddingVector embedding_from_bytes(std::string_view bytes);

}  // namespace cdta
