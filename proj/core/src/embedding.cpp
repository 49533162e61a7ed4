#include "cdta/embedding.hpp"

#include <cmath>
#include <cstring>
#include <stdexcept>

#include "cdta/text.hpp"

namespace cdta {

EmbeddingVector EmbeddingVector::from_values(std::vector<float> v) {
    EmbeddingVector e;
    e.values = std::move(v);
    double sum = 0.0;
    for (float x : e.values) sum += static_cast<double>(x) * static_cast<double>(x);
    e.norm = std::sqrt(sum);
    return e;
}

double cosine(const EmbeddingVector& a, const EmbeddingVector& b) {
    if (a.dim() != b.dim() || a.norm <= 0.0 || b.norm <= 0.0) return 0.0;
    double dot = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i) {
        dot += static_cast<double>(a.values[i]) * static_cast<double>(b.values[i]);
    }
    return dot / (a.norm * b.norm);
}

std::string embedding_to_bytes(const EmbeddingVector& v) {
    static_assert(sizeof(float) == 4, "float32 expected");
    std::string bytes(v.values.size() * 4, '\0');
    if (!v.values.empty()) std::memcpy(bytes.data(), v.values.data(), bytes.size());
    return bytes;
}

EmbeddingVector embedding_from_bytes(std::string_view bytes) {
    if (bytes.size() % 4 != 0) {
        throw std::invalid_argument("embedding byte length not a multiple of 4");
    }
    std::vector<float> values(bytes.size() / 4);
    if (!values.empty()) std::memcpy(values.data(), bytes.data(), bytes.size());
    return EmbeddingVector::from_values(std::move(values));
}

EmbeddingVector hash_embedding(std::string_view text, std::size_t dim) {
    std::vector<float> buckets(dim, 0.0f);
    for (const auto& word : content_words(text)) {
        std::size_t bucket = static_cast<std::size_t>(fnv1a64(word) % dim);
        buckets[bucket] += 1.0f;
    }
    double sum = 0.0;
    for (float x : buckets) sum += static_cast<double>(x) * static_cast<double>(x);
    if (sum > 0.0) {
        const double inv = 1.0 / std::sqrt(sum);
        for (float& x : buckets) x = static_cast<float>(x * inv);
    }
    return EmbeddingVector::from_values(std::move(buckets));
}

}  // namespace cdta
