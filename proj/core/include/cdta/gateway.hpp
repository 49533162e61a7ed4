#pragma once

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cdta/cache.hpp"
#include "cdta/provider.hpp"

namespace cdta {

struct RetryPolicy {
    int max_attempts = 5;
    int base_delay_ms = 200;  // doubles per retry, capped at max_delay_ms
    int max_delay_ms = 5000;
};

struct GatewayOptions {
    int max_in_flight = 8;
    int rate_per_minute = 0;  // 0 disables pacing
    RetryPolicy retry;
    bool cache_sampled = false;  // also cache temperature > 0 responses
};

/// Pacing limiter: capacity-one token bucket refilled at rate/minute, i.e.
/// job k may start no earlier than k/rate minutes after the first.
class TokenBucket {
public:
    explicit TokenBucket(int per_minute = 0) { set_rate(per_minute); }

    void set_rate(int per_minute);
    void acquire();

private:
    std::mutex mutex_;
    std::chrono::steady_clock::duration interval_{};
    std::chrono::steady_clock::time_point next_start_{};
};

struct GatewayStats {
    std::size_t chat_calls = 0;  // provider invocations, including failed attempts
    std::size_t chat_cache_hits = 0;
    std::size_t embed_texts = 0;  // texts sent to the embedding provider
    std::size_t embed_cache_hits = 0;
    std::size_t retries = 0;
    std::size_t peak_in_flight = 0;
    std::map<std::string, std::size_t> chat_calls_by_role;
};

/// A bounded batch aborted on its first non-retryable failure. Completed
/// responses are already cached, so a rerun resumes where the batch stopped.
class BatchError : public std::runtime_error {
public:
    BatchError(std::size_t failed_index, std::string cause, std::vector<std::size_t> completed)
        : std::runtime_error("bounded batch aborted at job " + std::to_string(failed_index) +
                             ": " + cause),
          failed_index_(failed_index),
          completed_(std::move(completed)) {}

    std::size_t failed_index() const { return failed_index_; }
    const std::vector<std::size_t>& completed() const { return completed_; }

private:
    std::size_t failed_index_;
    std::vector<std::size_t> completed_;
};

/// Uniform front door to chat and embedding providers: response cache,
/// retry with exponential backoff, shared pacing, bounded fan-out.
class Gateway {
public:
    Gateway(std::shared_ptr<ChatProvider> chat_provider,
            std::shared_ptr<EmbeddingProvider> embedding_provider, ResponseCache cache,
            GatewayOptions options = {});

    /// Single chat exchange. Cache is consulted first for temperature-0 and
    /// scripted requests; transient provider failures are retried with
    /// exponential backoff until the attempt limit.
    std::string chat(const ChatRequest& request);

    /// Order-preserving batch embedding with per-text caching. Identical
    /// texts are embedded once.
    std::vector<EmbeddingVector> embed_batch(const std::vector<std::string>& texts);

    /// Run jobs with at most max_in_flight in flight and token-bucket pacing.
    /// All jobs complete, or the batch aborts carrying the first failure and
    /// the indices that did complete.
    template <typename R>
    std::vector<R> run_bounded(const std::vector<std::function<R()>>& jobs, int max_in_flight,
                               int rate_per_minute);

    template <typename R>
    std::vector<R> run_bounded(const std::vector<std::function<R()>>& jobs) {
        return run_bounded<R>(jobs, options_.max_in_flight, options_.rate_per_minute);
    }

    bool scripted() const;
    std::size_t embedding_dim() const { return embedding_provider_->dim(); }
    const GatewayOptions& options() const { return options_; }
    const ResponseCache& cache() const { return cache_; }

    GatewayStats stats() const;
    void reset_stats();

    ChatProvider& chat_provider() { return *chat_provider_; }
    EmbeddingProvider& embedding_provider() { return *embedding_provider_; }

private:
    void sleep_backoff(int attempt);

    std::shared_ptr<ChatProvider> chat_provider_;
    std::shared_ptr<EmbeddingProvider> embedding_provider_;
    ResponseCache cache_;
    GatewayOptions options_;
    TokenBucket bucket_;

    mutable std::mutex stats_mutex_;
    GatewayStats stats_;
    std::atomic<std::size_t> in_flight_{0};
};

template <typename R>
std::vector<R> Gateway::run_bounded(const std::vector<std::function<R()>>& jobs,
                                    int max_in_flight, int rate_per_minute) {
    if (max_in_flight <= 0) throw std::invalid_argument("max_in_flight must be positive");
    if (rate_per_minute < 0) throw std::invalid_argument("rate_per_minute must be >= 0");

    std::vector<R> results(jobs.size());
    if (jobs.empty()) return results;

    bucket_.set_rate(rate_per_minute);

    std::atomic<std::size_t> next{0};
    std::atomic<bool> stop{false};
    std::vector<char> done(jobs.size(), 0);

    std::mutex failure_mutex;
    bool failed = false;
    std::size_t failed_index = 0;
    std::string failure_message;

    auto worker = [&]() {
        while (!stop.load(std::memory_order_acquire)) {
            const std::size_t index = next.fetch_add(1, std::memory_order_relaxed);
            if (index >= jobs.size()) return;
            bucket_.acquire();
            if (stop.load(std::memory_order_acquire)) return;

            const std::size_t current = in_flight_.fetch_add(1, std::memory_order_relaxed) + 1;
            {
                std::lock_guard<std::mutex> lock(stats_mutex_);
                if (current > stats_.peak_in_flight) stats_.peak_in_flight = current;
            }
            try {
                results[index] = jobs[index]();
                done[index] = 1;
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failed || index < failed_index) {
                    failed = true;
                    failed_index = index;
                    failure_message = e.what();
                }
                stop.store(true, std::memory_order_release);
            }
            in_flight_.fetch_sub(1, std::memory_order_relaxed);
        }
    };

    const std::size_t worker_count =
        std::min<std::size_t>(static_cast<std::size_t>(max_in_flight), jobs.size());
    std::vector<std::thread> workers;
    workers.reserve(worker_count);
    for (std::size_t i = 0; i < worker_count; ++i) workers.emplace_back(worker);
    for (auto& t : workers) t.join();

    if (failed) {
        std::vector<std::size_t> completed;
        for (std::size_t i = 0; i < done.size(); ++i) {
            if (done[i]) completed.push_back(i);
        }
        throw BatchError(failed_index, failure_message, std::move(completed));
    }
    return results;
}

}  // namespace cdta
