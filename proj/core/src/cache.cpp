#include "cdta/cache.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cdta/jsonl.hpp"
#include "cdta/text.hpp"

namespace cdta {

namespace fs = std::filesystem;

std::string cache_key(std::string_view provider, std::string_view role,
                      std::string_view payload, double temperature) {
    char temp_buf[32];
    std::snprintf(temp_buf, sizeof(temp_buf), "%.6f", temperature);

    std::string canonical;
    canonical.reserve(provider.size() + role.size() + payload.size() + 24);
    canonical.append(provider);
    canonical.push_back('\x1f');
    canonical.append(role);
    canonical.push_back('\x1f');
    canonical.append(temp_buf);
    canonical.push_back('\x1f');
    canonical.append(payload);

    // Two independently seeded FNV passes give a 128-bit address.
    const std::uint64_t hi = fnv1a64(canonical, 0xcbf29ce484222325ull);
    const std::uint64_t lo = fnv1a64(canonical, 0x9ae16a3b2f90404full);
    char out[33];
    std::snprintf(out, sizeof(out), "%016llx%016llx",
                  static_cast<unsigned long long>(hi), static_cast<unsigned long long>(lo));
    return std::string(out);
}

ResponseCache::ResponseCache(fs::path dir) : dir_(std::move(dir)) {
    if (!dir_.empty()) fs::create_directories(dir_);
}

fs::path ResponseCache::entry_path(const std::string& key) const {
    return dir_ / key;
}

std::optional<std::string> ResponseCache::get(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    const fs::path path = entry_path(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream oss;
    oss << in.rdbuf();
    return oss.str();
}

void ResponseCache::put(const std::string& key, const std::string& value) const {
    if (!enabled()) return;
    atomic_write_file(entry_path(key), value);
}

bool ResponseCache::contains(const std::string& key) const {
    return enabled() && fs::exists(entry_path(key));
}

std::size_t ResponseCache::size() const {
    if (!enabled() || !fs::exists(dir_)) return 0;
    std::size_t n = 0;
    for (const auto& entry : fs::directory_iterator(dir_)) {
        if (entry.is_regular_file()) ++n;
    }
    return n;
}

}  // namespace cdta
