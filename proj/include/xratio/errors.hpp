#pragma once

#include <stdexcept>
#include <string>

namespace xratio {

/// Thrown when an enumeration would exceed its configured size cap.
/// The CLI maps this to exit code 2.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace xratio
