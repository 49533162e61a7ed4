#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cdta {

// 64-bit FNV-1a. Used for deterministic word bucketing and cache keys;
// must never depend on std::hash (implementation-defined).
std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ull);

/// Half-open [begin, end) byte range into some source text.
struct TextSpan {
    std::size_t begin = 0;
    std::size_t end = 0;

    std::size_t size() const { return end - begin; }
    bool operator==(const TextSpan&) const = default;
};

/// Whitespace-delimited word spans, in order. Words are maximal runs of
/// non-whitespace bytes.
std::vector<TextSpan> split_words(std::string_view text);

/// Lowercased alphanumeric runs ("content words"); punctuation is discarded.
std::vector<std::string> content_words(std::string_view text);

/// Lowercase, collapse every non-alphanumeric run to a single space, trim.
/// Two texts with the same normalization are treated as the same content by
/// substring-based relevance oracles.
std::string normalize_text(std::string_view text);

/// Fraction of `needle`'s distinct content words that occur in `haystack`.
/// 0 when the needle has no content words.
double word_coverage(std::string_view needle, std::string_view haystack);

std::string to_lower(std::string_view text);
std::string trim(std::string_view text);

const std::vector<std::string>& default_abbreviations();

/// Sentence spans. A sentence ends at '.', '!' or '?' followed by whitespace
/// and an uppercase letter, or at end of text. A '.' directly after a known
/// abbreviation does not end a sentence. Spans exclude inter-sentence
/// whitespace; concatenating spans with the gaps between them reconstructs
/// the input.
std::vector<TextSpan> split_sentences(
    std::string_view text,
    const std::vector<std::string>& abbreviations = default_abbreviations());

/// Paragraph content spans. A paragraph boundary is one or more blank lines
/// (lines containing only whitespace). Spans cover content lines including
/// interior newlines; gaps between spans are the separators.
std::vector<TextSpan> split_paragraphs(std::string_view text);

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

enum class TokenizerMode {
    WhitespaceHeuristic,  // ceil(words * 1.3), fully deterministic, offline
    PluggableExternal,    // delegates to a registered counting callback
};

struct TokenizerSpec {
    TokenizerMode mode = TokenizerMode::WhitespaceHeuristic;
    std::string name = "ws-heuristic-1.3";

    bool operator==(const TokenizerSpec&) const = default;
};

using TokenCountFn = std::function<std::size_t(std::string_view)>;

/// Register an external tokenizer under a name usable with
/// TokenizerMode::PluggableExternal.
void register_tokenizer(const std::string& name, TokenCountFn fn);

class Tokenizer {
public:
    Tokenizer() = default;
    explicit Tokenizer(TokenizerSpec spec);

    /// Token count of a text. Heuristic mode: ceil(word_count * 1.3),
    /// computed in integer arithmetic as (13*w + 9) / 10.
    std::size_t count(std::string_view text) const;

    /// Cumulative token offsets per word: result[i] = tokens before word i,
    /// result[words] = total. Gives the token-space geometry used by
    /// token-window chunkers. In heuristic mode result[words] == count(text);
    /// in pluggable mode offsets are per-word counts summed, which external
    /// tokenizers may not reproduce on the joined text.
    std::vector<std::size_t> cumulative_word_tokens(
        std::string_view text, const std::vector<TextSpan>& words) const;

    const TokenizerSpec& spec() const { return spec_; }

private:
    TokenizerSpec spec_{};
};

}  // namespace cdta
