#include "smolns/grid.hpp"

#include <stdexcept>

namespace smolns {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

void throw_if_nonempty(const std::vector<std::string>& errors) {
    if (errors.empty()) return;
    std::string msg;
    for (const auto& e : errors) {
        if (!msg.empty()) msg += "; ";
        msg += e;
    }
    throw std::invalid_argument(msg);
}

}  // namespace

std::vector<std::string> GridSpec2D::validate() const {
    std::vector<std::string> errors;
    if (nx < 8 || !is_power_of_two(nx))
        errors.push_back("nx: must be a power of two >= 8 (got " + std::to_string(nx) + ")");
    if (ny < 8 || !is_power_of_two(ny))
        errors.push_back("ny: must be a power of two >= 8 (got " + std::to_string(ny) + ")");
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
        errors.push_back("dealias_fraction: must lie in (0,1]");
    return errors;
}

void GridSpec2D::require_valid() const { throw_if_nonempty(validate()); }

std::vector<std::string> FiberGrid::validate() const {
    std::vector<std::string> errors;
    if (nm < 8 || !is_power_of_two(nm))
        errors.push_back("nm: must be a power of two >= 8 (got " + std::to_string(nm) + ")");
    return errors;
}

void FiberGrid::require_valid() const { throw_if_nonempty(validate()); }

}  // namespace smolns
