#pragma once

#include <optional>

#include "cmpl/inf_laurent.hpp"

namespace cmpl {

/// Recover a/b in k with max(deg a, deg b) <= H from its expansion at infinity.
/// Needs at least 2H + 2 known coefficients (PrecisionError otherwise).
/// Returns nullopt when no such fraction matches every known coefficient.
std::optional<RatFunc> rational_reconstruct(const InfLaurent& x, long H);

}  // namespace cmpl
