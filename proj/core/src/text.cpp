#include "cdta/text.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace cdta {

namespace {

bool is_space(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_alnum(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_upper(char c) {
    return std::isupper(static_cast<unsigned char>(c)) != 0;
}

char lower(char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

}  // namespace

std::uint64_t fnv1a64(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

std::vector<TextSpan> split_words(std::string_view text) {
    std::vector<TextSpan> words;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && is_space(text[i])) ++i;
        if (i >= n) break;
        std::size_t begin = i;
        while (i < n && !is_space(text[i])) ++i;
        words.push_back({begin, i});
    }
    return words;
}

std::vector<std::string> content_words(std::string_view text) {
    std::vector<std::string> words;
    std::string current;
    for (char c : text) {
        if (is_alnum(c)) {
            current.push_back(lower(c));
        } else if (!current.empty()) {
            words.push_back(std::move(current));
            current.clear();
        }
    }
    if (!current.empty()) words.push_back(std::move(current));
    return words;
}

std::string normalize_text(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    for (char c : text) {
        if (is_alnum(c)) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            out.push_back(lower(c));
        } else {
            pending_space = true;
        }
    }
    return out;
}

double word_coverage(std::string_view needle, std::string_view haystack) {
    auto needle_words = content_words(needle);
    if (needle_words.empty()) return 0.0;
    std::sort(needle_words.begin(), needle_words.end());
    needle_words.erase(std::unique(needle_words.begin(), needle_words.end()), needle_words.end());

    auto hay_words = content_words(haystack);
    std::sort(hay_words.begin(), hay_words.end());

    std::size_t found = 0;
    for (const auto& w : needle_words) {
        if (std::binary_search(hay_words.begin(), hay_words.end(), w)) ++found;
    }
    return static_cast<double>(found) / static_cast<double>(needle_words.size());
}

std::string to_lower(std::string_view text) {
    std::string out(text);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string trim(std::string_view text) {
    std::size_t b = 0;
    std::size_t e = text.size();
    while (b < e && is_space(text[b])) ++b;
    while (e > b && is_space(text[e - 1])) --e;
    return std::string(text.substr(b, e - b));
}

const std::vector<std::string>& default_abbreviations() {
    static const std::vector<std::string> abbrevs = {
        "mr", "mrs", "ms", "dr", "prof", "sr", "jr", "st", "vs",
        "etc", "e.g", "i.e", "cf", "fig", "al", "inc", "ltd", "co", "no",
    };
    return abbrevs;
}

namespace {

// Word immediately preceding position `dot` (exclusive), lowercased, with
// leading quotes/parens stripped.
std::string word_before(std::string_view text, std::size_t dot) {
    std::size_t b = dot;
    while (b > 0 && !is_space(text[b - 1])) --b;
    while (b < dot && !is_alnum(text[b])) ++b;
    std::string w;
    for (std::size_t i = b; i < dot; ++i) w.push_back(lower(text[i]));
    return w;
}

}  // namespace

std::vector<TextSpan> split_sentences(std::string_view text,
                                      const std::vector<std::string>& abbreviations) {
    std::vector<TextSpan> sentences;
    const std::size_t n = text.size();

    std::size_t start = 0;
    while (start < n && is_space(text[start])) ++start;
    if (start >= n) return sentences;

    std::size_t cursor = start;
    for (std::size_t i = start; i < n; ++i) {
        char c = text[i];
        if (c != '.' && c != '!' && c != '?') continue;

        if (c == '.') {
            std::string prev = word_before(text, i);
            if (std::find(abbreviations.begin(), abbreviations.end(), prev) !=
                abbreviations.end()) {
                continue;
            }
        }

        // Find the next non-whitespace char after the terminator.
        std::size_t j = i + 1;
        if (j < n && !is_space(text[j])) continue;  // e.g. "3.14", "e.g."
        while (j < n && is_space(text[j])) ++j;
        if (j < n && !is_upper(text[j])) continue;

        sentences.push_back({cursor, i + 1});
        cursor = j;
        if (j >= n) break;
        i = j - 1;  // resume scanning at the next sentence start
    }

    if (cursor < n) {
        std::size_t end = n;
        while (end > cursor && is_space(text[end - 1])) --end;
        if (end > cursor) sentences.push_back({cursor, end});
    }
    return sentences;
}

std::vector<TextSpan> split_paragraphs(std::string_view text) {
    std::vector<TextSpan> paragraphs;
    const std::size_t n = text.size();
    std::size_t i = 0;

    auto line_is_blank = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
            if (!is_space(text[k])) return false;
        }
        return true;
    };

    std::size_t para_begin = std::string::npos;
    std::size_t para_end = 0;
    while (i <= n) {
        std::size_t line_begin = i;
        std::size_t line_end = i;
        while (line_end < n && text[line_end] != '\n') ++line_end;

        if (line_begin >= n) break;
        if (line_is_blank(line_begin, line_end)) {
            if (para_begin != std::string::npos) {
                paragraphs.push_back({para_begin, para_end});
                para_begin = std::string::npos;
            }
        } else {
            std::size_t content_begin = line_begin;
            while (content_begin < line_end && is_space(text[content_begin])) ++content_begin;
            std::size_t content_end = line_end;
            while (content_end > content_begin && is_space(text[content_end - 1])) --content_end;
            if (para_begin == std::string::npos) para_begin = content_begin;
            para_end = content_end;
        }
        i = line_end + 1;
    }
    if (para_begin != std::string::npos) paragraphs.push_back({para_begin, para_end});
    return paragraphs;
}

// ---------------------------------------------------------------------------
// Tokenizer
// ---------------------------------------------------------------------------

namespace {

std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

std::unordered_map<std::string, TokenCountFn>& tokenizer_registry() {
    static std::unordered_map<std::string, TokenCountFn> registry;
    return registry;
}

// ceil(1.3 * w) without floating point: (13w + 9) / 10.
std::size_t heuristic_tokens(std::size_t words) {
    return (13 * words + 9) / 10;
}

}  // namespace

void register_tokenizer(const std::string& name, TokenCountFn fn) {
    std::lock_guard<std::mutex> lock(registry_mutex());
    tokenizer_registry()[name] = std::move(fn);
}

Tokenizer::Tokenizer(TokenizerSpec spec) : spec_(std::move(spec)) {}

std::size_t Tokenizer::count(std::string_view text) const {
    if (spec_.mode == TokenizerMode::WhitespaceHeuristic) {
        return heuristic_tokens(split_words(text).size());
    }
    TokenCountFn fn;
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        auto it = tokenizer_registry().find(spec_.name);
        if (it == tokenizer_registry().end()) {
            throw std::runtime_error("no tokenizer registered under name '" + spec_.name + "'");
        }
        fn = it->second;
    }
    return fn(text);
}

std::vector<std::size_t> Tokenizer::cumulative_word_tokens(
    std::string_view text, const std::vector<TextSpan>& words) const {
    std::vector<std::size_t> offsets(words.size() + 1, 0);
    if (spec_.mode == TokenizerMode::WhitespaceHeuristic) {
        for (std::size_t i = 0; i <= words.size(); ++i) offsets[i] = heuristic_tokens(i);
        return offsets;
    }
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::string_view w = text.substr(words[i].begin, words[i].size());
        offsets[i + 1] = offsets[i] + count(w);
    }
    return offsets;
}

}  // namespace cdta
