#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace cdta {

/// Content address for a provider exchange: identical inputs always produce
/// the identical key.
std::string cache_key(std::string_view provider, std::string_view role,
                      std::string_view payload, double temperature);

/// Content-addressed response cache, one file per key, written atomically
/// (temp then rename) so concurrent writers of the same key are benign and a
/// killed run never leaves a torn entry behind.
class ResponseCache {
public:
    ResponseCache() = default;  // disabled
    explicit ResponseCache(std::filesystem::path dir);

    bool enabled() const { return !dir_.empty(); }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& value) const;
    bool contains(const std::string& key) const;
    std::size_t size() const;

private:
    std::filesystem::path entry_path(const std::string& key) const;

    std::filesystem::path dir_;
};

}  // namespace cdta
