#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cdta/embedding.hpp"

namespace cdta {

/// Tiered model roles. Each role carries its own model name and default
/// temperature (extraction 0.3, relevance 0.0, synthesis 0.7,
/// context-augment 0.0; generation and judge default to 0.0).
enum class ModelRole {
    Extraction,
    Relevance,
    Synthesis,
    ContextAugment,
    Generation,
    Judge,
};

std::string_view role_name(ModelRole role);
ModelRole role_from_name(std::string_view name);
double default_temperature(ModelRole role);

struct ChatRequest {
    ModelRole role = ModelRole::Relevance;
    std::string prompt;
    double temperature = 0.0;
    int max_output_tokens = 2048;

    // Template slot values the prompt was rendered from. The scripted
    // provider reads these instead of re-parsing the prompt; live providers
    // ignore them. Never part of the cache key.
    std::map<std::string, std::string> fields;
};

class ProviderError : public std::runtime_error {
public:
    ProviderError(int status, bool retryable, const std::string& message)
        : std::runtime_error(message), status_(status), retryable_(retryable) {}

    int status() const { return status_; }
    bool retryable() const { return retryable_; }

private:
    int status_;
    bool retryable_;
};

/// Scripted provider found no override file and no rule applies.
class FixtureMissError : public std::runtime_error {
public:
    explicit FixtureMissError(const std::string& key)
        : std::runtime_error("scripted provider: no fixture for key " + key), key_(key) {}

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

class ChatProvider {
public:
    virtual ~ChatProvider() = default;
    virtual std::string name() const = 0;
    virtual std::string chat(const ChatRequest& request) = 0;
};

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::string name() const = 0;
    virtual std::size_t dim() const = 0;
    virtual std::vector<EmbeddingVector> embed(const std::vector<std::string>& texts) = 0;
};

}  // namespace cdta
