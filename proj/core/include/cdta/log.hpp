#pragma once

#include <string>

namespace cdta {

void log_info(const std::string& message);
void log_warn(const std::string& message);

/// Warnings emitted so far in this process; tests use this to assert that
/// degenerate paths were flagged rather than silently ignored.
std::size_t warning_count();

}  // namespace cdta
