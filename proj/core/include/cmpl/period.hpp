#pragma once

#include "cmpl/inf_laurent.hpp"

namespace cmpl {

/// pi~^(q-1) = (-theta)^q prod_{i>=1} (1 - theta^(1-q^i))^(-(q-1)) in k_inf,
/// with every coefficient of theta^e, e >= prec, correct.
InfLaurent carlitz_period_power(const FieldPtr& F, long prec);

}  // namespace cmpl
