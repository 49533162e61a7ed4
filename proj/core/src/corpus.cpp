#include "cdta/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cdta/log.hpp"

namespace cdta {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

std::string make_segment_id(const std::string& doc_id, std::size_t ordinal) {
    return doc_id + "#" + std::to_string(ordinal);
}

namespace {

std::string read_text_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path.string());
    std::ostringstream oss;
    oss << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failure on file: " + path.string());
    return oss.str();
}

void add_document(std::vector<Document>& docs, std::set<std::string>& seen, Document doc,
                  IngestStats* stats) {
    if (trim(doc.body).empty()) {
        log_warn("skipping empty document: " + doc.doc_id);
        if (stats) ++stats->skipped_empty;
        return;
    }
    if (!seen.insert(doc.doc_id).second) {
        throw std::runtime_error("duplicate doc_id in corpus: " + doc.doc_id);
    }
    docs.push_back(std::move(doc));
}

std::vector<Document> ingest_directory(const fs::path& root, IngestStats* stats) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root)) {
        if (entry.is_regular_file() && entry.path().extension() == ".txt") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    std::vector<Document> docs;
    std::set<std::string> seen;
    for (const auto& file : files) {
        if (stats) ++stats->files_seen;
        Document doc;
        doc.doc_id = file.stem().string();
        doc.title = doc.doc_id;
        doc.body = read_text_file(file);
        doc.source_path = file.string();
        add_document(docs, seen, std::move(doc), stats);
    }
    if (docs.empty()) log_warn("corpus directory yielded no documents: " + root.string());
    return docs;
}

std::vector<Document> ingest_manifest(const fs::path& manifest_path, IngestStats* stats) {
    ordered_json manifest;
    try {
        manifest = ordered_json::parse(read_text_file(manifest_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("manifest parse error in " + manifest_path.string() + ": " +
                                 e.what());
    }

    const ordered_json* entries = nullptr;
    if (manifest.is_array()) {
        entries = &manifest;
    } else if (manifest.is_object() && manifest.contains("documents")) {
        entries = &manifest["documents"];
    } else {
        throw std::runtime_error("manifest must be an array or contain a 'documents' array: " +
                                 manifest_path.string());
    }

    std::vector<Document> docs;
    std::set<std::string> seen;
    for (const auto& entry : *entries) {
        if (stats) ++stats->files_seen;
        if (!entry.contains("doc_id")) {
            throw std::runtime_error("manifest entry missing doc_id in " + manifest_path.string());
        }
        Document doc;
        doc.doc_id = entry["doc_id"].get<std::string>();
        doc.title = entry.value("title", doc.doc_id);
        if (entry.contains("body")) {
            doc.body = entry["body"].get<std::string>();
            doc.source_path = manifest_path.string();
        } else if (entry.contains("path")) {
            fs::path body_path = manifest_path.parent_path() / entry["path"].get<std::string>();
            doc.body = read_text_file(body_path);
            doc.source_path = body_path.string();
        } else {
            throw std::runtime_error("manifest entry for '" + doc.doc_id +
                                     "' has neither body nor path");
        }
        add_document(docs, seen, std::move(doc), stats);
    }
    if (docs.empty()) log_warn("manifest yielded no documents: " + manifest_path.string());
    return docs;
}

}  // namespace

std::vector<Document> ingest_corpus(const fs::path& root, IngestStats* stats) {
    if (!fs::exists(root)) {
        throw std::runtime_error("corpus path does not exist: " + root.string());
    }
    std::vector<Document> docs;
    if (fs::is_directory(root)) {
        docs = ingest_directory(root, stats);
    } else if (root.extension() == ".json") {
        docs = ingest_manifest(root, stats);
    } else {
        throw std::runtime_error("unsupported corpus input (expect directory or .json manifest): " +
                                 root.string());
    }
    std::sort(docs.begin(), docs.end(),
              [](const Document& a, const Document& b) { return a.doc_id < b.doc_id; });
    if (stats) stats->documents = docs.size();
    return docs;
}

std::size_t count_tokens(std::string_view text, const Tokenizer& tokenizer) {
    return tokenizer.count(text);
}

namespace {

Segment make_segment(const Document& doc, std::size_t ordinal, std::string text,
                     std::string separator, const Tokenizer& tokenizer) {
    Segment seg;
    seg.doc_id = doc.doc_id;
    seg.ordinal = ordinal;
    seg.segment_id = make_segment_id(doc.doc_id, ordinal);
    seg.text = std::move(text);
    seg.separator = std::move(separator);
    seg.token_count = tokenizer.count(seg.text);
    return seg;
}

// Regroup sentence spans greedily toward the target token budget. A group is
// closed when adding the next sentence would exceed the target; a single
// oversized sentence forms its own group.
std::vector<TextSpan> group_sentences(const std::string& body, const std::vector<TextSpan>& sentences,
                                      const Tokenizer& tokenizer, std::size_t target_tokens) {
    std::vector<TextSpan> groups;
    std::size_t i = 0;
    while (i < sentences.size()) {
        TextSpan group = sentences[i];
        std::size_t group_tokens = tokenizer.count(
            std::string_view(body).substr(group.begin, group.size()));
        std::size_t j = i + 1;
        while (j < sentences.size()) {
            TextSpan candidate{group.begin, sentences[j].end};
            std::size_t candidate_tokens = tokenizer.count(
                std::string_view(body).substr(candidate.begin, candidate.size()));
            if (candidate_tokens > target_tokens && group_tokens > 0) break;
            group = candidate;
            group_tokens = candidate_tokens;
            ++j;
        }
        groups.push_back(group);
        i = j;
    }
    return groups;
}

}  // namespace

std::vector<Segment> segment_document(const Document& doc, const Tokenizer& tokenizer,
                                      const SegmentationOptions& options) {
    if (doc.body.empty()) {
        throw std::invalid_argument("segment_document: empty body for doc " + doc.doc_id);
    }

    std::vector<TextSpan> spans = split_paragraphs(doc.body);
    if (spans.empty()) {
        // Whitespace-only body: keep it lossless as a single degenerate segment.
        return {make_segment(doc, 0, doc.body, "", tokenizer)};
    }

    // Sentence fallback for wall-of-text documents without paragraph markers.
    if (spans.size() == 1) {
        std::string_view only(doc.body);
        only = only.substr(spans[0].begin, spans[0].size());
        if (tokenizer.count(only) > options.sentence_fallback_tokens) {
            auto sentences = split_sentences(only);
            std::vector<TextSpan> rebased;
            rebased.reserve(sentences.size());
            for (const auto& s : sentences) {
                rebased.push_back({spans[0].begin + s.begin, spans[0].begin + s.end});
            }
            auto groups = group_sentences(doc.body, rebased, tokenizer,
                                          options.target_segment_tokens);
            if (groups.size() > 1) spans = std::move(groups);
        }
    }

    // Leading bytes before the first span attach to the first segment so the
    // split stays lossless.
    std::vector<Segment> segments;
    segments.reserve(spans.size());
    for (std::size_t i = 0; i < spans.size(); ++i) {
        std::size_t begin = (i == 0) ? 0 : spans[i].begin;
        std::size_t end = spans[i].end;
        std::size_t sep_end = (i + 1 < spans.size()) ? spans[i + 1].begin : doc.body.size();
        segments.push_back(make_segment(doc, i, doc.body.substr(begin, end - begin),
                                        doc.body.substr(end, sep_end - end), tokenizer));
    }
    return segments;
}

std::vector<Segment> segment_corpus(const std::vector<Document>& docs, const Tokenizer& tokenizer,
                                    const SegmentationOptions& options) {
    std::vector<Segment> all;
    for (const auto& doc : docs) {
        auto segs = segment_document(doc, tokenizer, options);
        all.insert(all.end(), std::make_move_iterator(segs.begin()),
                   std::make_move_iterator(segs.end()));
    }
    return all;
}

}  // namespace cdta
