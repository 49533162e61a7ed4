#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace cdta {

using ordered_json = nlohmann::ordered_json;

/// Write bytes to a temp file in the target directory, then rename into
/// place. Readers never observe a partially written file.
void atomic_write_file(const std::filesystem::path& path, const std::string& content);

std::string read_file(const std::filesystem::path& path);

/// One JSON object per line. Serialization is deterministic: ordered keys,
/// no whitespace.
void write_jsonl(const std::filesystem::path& path, const std::vector<ordered_json>& records);

std::vector<ordered_json> read_jsonl(const std::filesystem::path& path);

}  // namespace cdta
