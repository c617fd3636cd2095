#pragma once

namespace cmpl {

/// Requested output precision plus internal guard digits. For k_v the target
/// is an absolute precision (digits mod v^target); for k_inf it is the lowest
/// exponent of theta that must be correct.
struct PrecisionBudget {
  long target = 20;
  long slack = 4;
  /// Ceiling for adaptive working precision before giving up.
  long max_working = 1L << 14;
};

}  // namespace cmpl
