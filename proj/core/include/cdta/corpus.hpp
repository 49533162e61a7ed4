#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "cdta/text.hpp"

namespace cdta {

struct Document {
    std::string doc_id;
    std::string title;
    std::string body;
    std::string source_path;
};

/// Atomic corpus unit. Concatenating a document's segments in ordinal order,
/// each followed by its separator, reconstructs the document body byte for
/// byte.
struct Segment {
    std::string segment_id;  // "<doc_id>#<ordinal>"
    std::string doc_id;
    std::size_t ordinal = 0;
    std::string text;
    std::string separator;  // bytes between this segment and the next (or EOF)
    std::size_t token_count = 0;
};

std::string make_segment_id(const std::string& doc_id, std::size_t ordinal);

struct IngestStats {
    std::size_t files_seen = 0;
    std::size_t documents = 0;
    std::size_t skipped_empty = 0;
};

/// Load documents from a directory of UTF-8 .txt files (doc_id = filename
/// stem) or from a JSON manifest ({"documents": [{doc_id, title?, body|path}]}).
/// Output is sorted by doc_id. Duplicate doc_ids and unreadable files are
/// hard errors; empty inputs produce a warning and are skipped.
std::vector<Document> ingest_corpus(const std::filesystem::path& root,
                                    IngestStats* stats = nullptr);

struct SegmentationOptions {
    // Single-paragraph documents above this token count fall back to
    // sentence-boundary splitting.
    std::size_t sentence_fallback_tokens = 300;
    // Greedy sentence grouping target for the fallback path.
    std::size_t target_segment_tokens = 150;
};

/// Stage-1 segmentation: split on blank-line paragraph boundaries; if the
/// document is a single paragraph above the fallback threshold, split at
/// sentence boundaries grouped greedily toward the target size.
std::vector<Segment> segment_document(const Document& doc, const Tokenizer& tokenizer,
                                      const SegmentationOptions& options = {});

std::vector<Segment> segment_corpus(const std::vector<Document>& docs,
                                    const Tokenizer& tokenizer,
                                    const SegmentationOptions& options = {});

std::size_t count_tokens(std::string_view text, const Tokenizer& tokenizer);

}  // namespace cdta
