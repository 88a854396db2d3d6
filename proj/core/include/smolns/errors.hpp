#pragma once

#include <stdexcept>
#include <string>

namespace smolns {

// Raised when a step would violate the CFL rule; the message carries the
// limit and the offending quantities so the driver can report and stop.
struct CflError : std::runtime_error {
    explicit CflError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smolns
