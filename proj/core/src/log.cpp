#include "cdta/log.hpp"

#include <atomic>
#include <iostream>
#include <mutex>

namespace cdta {

namespace {
std::mutex io_mutex;
std::atomic<std::size_t> warnings{0};
}  // namespace

void log_info(const std::string& message) {
    std::lock_guard<std::mutex> lock(io_mutex);
    std::cerr << "[info] " << message << "\n";
}

void log_warn(const std::string& message) {
    warnings.fetch_add(1, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lock(io_mutex);
    std::cerr << "[warn] " << message << "\n";
}

std::size_t warning_count() {
    return warnings.load(std::memory_order_relaxed);
}

}  // namespace cdta
