#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sqgda {

/// Warning sink for recoverable conditions (degenerate ensembles, guarded
/// divisions). Writes to stderr by default; tests may install a collector.
void log_warn(const std::string& msg);
void set_warn_handler(void (*handler)(const std::string&));

/// SHA-1 hex digest; used for content-addressing resolved run configs in
/// manifests. Not a security boundary.
std::string sha1_hex(std::string_view data);

std::string format_double(double v);  // shortest round-trippable decimal

bool all_finite(std::span<const double> v);

}  // namespace sqgda
