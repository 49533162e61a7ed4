#include "cdta/jsonl.hpp"

#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cdta {

namespace fs = std::filesystem;

void atomic_write_file(const fs::path& path, const std::string& content) {
    static std::atomic<unsigned> counter{0};
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp" + std::to_string(counter.fetch_add(1));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for write: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, path);
}

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path.string());
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

void write_jsonl(const fs::path& path, const std::vector<ordered_json>& records) {
    std::string buffer;
    for (const auto& record : records) {
        buffer += record.dump();
        buffer += '\n';
    }
    atomic_write_file(path, buffer);
}

std::vector<ordered_json> read_jsonl(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path.string());
    std::vector<ordered_json> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            records.push_back(ordered_json::parse(line));
        } catch (const nlohmann::json::parse_error& e) {
            throw std::runtime_error("jsonl parse error at " + path.string() + ":" +
                                     std::to_string(line_no) + ": " + e.what());
        }
    }
    return records;
}

}  // namespace cdta
