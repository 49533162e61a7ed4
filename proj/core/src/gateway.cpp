#include "cdta/gateway.hpp"

#include <algorithm>
#include <unordered_map>

namespace cdta {

void TokenBucket::set_rate(int per_minute) {
    std::lock_guard<std::mutex> lock(mutex_);
    if (per_minute <= 0) {
        interval_ = std::chrono::steady_clock::duration::zero();
    } else {
        interval_ = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
            std::chrono::duration<double>(60.0 / per_minute));
    }
    next_start_ = std::chrono::steady_clock::time_point{};
}

void TokenBucket::acquire() {
    std::chrono::steady_clock::time_point slot;
    {
        std::lock_guard<std::mutex> lock(mutex_);
        if (interval_ == std::chrono::steady_clock::duration::zero()) return;
        const auto now = std::chrono::steady_clock::now();
        slot = std::max(now, next_start_);
        next_start_ = slot + interval_;
    }
    std::this_thread::sleep_until(slot);
}

Gateway::Gateway(std::shared_ptr<ChatProvider> chat_provider,
                 std::shared_ptr<EmbeddingProvider> embedding_provider, ResponseCache cache,
                 GatewayOptions options)
    : chat_provider_(std::move(chat_provider)),
      embedding_provider_(std::move(embedding_provider)),
      cache_(std::move(cache)),
      options_(options),
      bucket_(options.rate_per_minute) {
    if (!chat_provider_) throw std::invalid_argument("gateway needs a chat provider");
    if (!embedding_provider_) throw std::invalid_argument("gateway needs an embedding provider");
}

bool Gateway::scripted() const {
    return chat_provider_->name() == "scripted";
}

void Gateway::sleep_backoff(int attempt) {
    const int shift = std::min(attempt, 16);
    long long delay = static_cast<long long>(options_.retry.base_delay_ms) << shift;
    delay = std::min<long long>(delay, options_.retry.max_delay_ms);
    if (delay > 0) std::this_thread::sleep_for(std::chrono::milliseconds(delay));
}

std::string Gateway::chat(const ChatRequest& request) {
    const std::string key = cache_key(chat_provider_->name(), role_name(request.role),
                                      request.prompt, request.temperature);
    const bool cacheable =
        request.temperature == 0.0 || scripted() || options_.cache_sampled;

    if (cacheable) {
        if (auto hit = cache_.get(key)) {
            std::lock_guard<std::mutex> lock(stats_mutex_);
            ++stats_.chat_cache_hits;
            return *hit;
        }
    }

    std::string response;
    for (int attempt = 0;; ++attempt) {
        try {
            {
                std::lock_guard<std::mutex> lock(stats_mutex_);
                ++stats_.chat_calls;
                ++stats_.chat_calls_by_role[std::string(role_name(request.role))];
            }
            response = chat_provider_->chat(request);
            break;
        } catch (const ProviderError& e) {
            if (!e.retryable() || attempt + 1 >= options_.retry.max_attempts) throw;
            {
                std::lock_guard<std::mutex> lock(stats_mutex_);
                ++stats_.retries;
            }
            sleep_backoff(attempt);
        }
    }

    if (cacheable) cache_.put(key, response);
    return response;
}

std::vector<EmbeddingVector> Gateway::embed_batch(const std::vector<std::string>& texts) {
    if (texts.empty()) throw std::invalid_argument("embed_batch: empty text list");
    for (const auto& t : texts) {
        if (t.empty()) throw std::invalid_argument("embed_batch: empty text in batch");
    }

    const std::string provider_name = embedding_provider_->name();
    std::vector<std::string> keys;
    keys.reserve(texts.size());
    for (const auto& t : texts) keys.push_back(cache_key(provider_name, "embedding", t, 0.0));

    std::vector<EmbeddingVector> out(texts.size());
    std::vector<char> resolved(texts.size(), 0);

    std::size_t hits = 0;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (auto cached = cache_.get(keys[i])) {
            out[i] = embedding_from_bytes(*cached);
            resolved[i] = 1;
            ++hits;
        }
    }

    // Dedup misses: identical texts are embedded once.
    std::vector<std::string> miss_texts;
    std::unordered_map<std::string, std::size_t> miss_slot;
    for (std::size_t i = 0; i < texts.size(); ++i) {
        if (resolved[i]) continue;
        if (miss_slot.emplace(texts[i], miss_texts.size()).second) {
            miss_texts.push_back(texts[i]);
        }
    }

    if (!miss_texts.empty()) {
        auto vectors = embedding_provider_->embed(miss_texts);
        if (vectors.size() != miss_texts.size()) {
            throw std::runtime_error("embedding provider returned wrong batch size");
        }
        const std::size_t expected_dim = embedding_provider_->dim();
        for (const auto& v : vectors) {
            if (v.dim() != expected_dim) {
                throw std::runtime_error(
                    "embedding dimension mismatch: provider advertises " +
                    std::to_string(expected_dim) + ", got " + std::to_string(v.dim()));
            }
        }
        for (std::size_t i = 0; i < texts.size(); ++i) {
            if (resolved[i]) continue;
            const auto& vec = vectors[miss_slot.at(texts[i])];
            out[i] = vec;
            cache_.put(keys[i], embedding_to_bytes(vec));
        }
    }

    {
        std::lock_guard<std::mutex> lock(stats_mutex_);
        stats_.embed_cache_hits += hits;
        stats_.embed_texts += miss_texts.size();
    }
    return out;
}

GatewayStats Gateway::stats() const {
    std::lock_guard<std::mutex> lock(stats_mutex_);
    return stats_;
}

void Gateway::reset_stats() {
    std::lock_guard<std::mutex> lock(stats_mutex_);
    stats_ = GatewayStats{};
}

}  // namespace cdta
