#include "cmpl/period.hpp"

namespace cmpl {

InfLaurent carlitz_period_power(const FieldPtr& F, long prec) {
  const long q = F->q();
  if (prec > q) return InfLaurent::zero_to(F, prec);
  const std::size_t n = static_cast<std::size_t>(q - prec + 1);
  Poly prod = Poly::one(F);
  for (long e = q - 1; static_cast<std::size_t>(e) < n; e = e * q + q - 1)
    prod = (prod * (Poly::one(F) - Poly::monomial(F, 1, static_cast<std::size_t>(e)))).truncated(n);
  Poly m = series_inverse(prod.pow(static_cast<std::uint64_t>(q - 1)).truncated(n), n);
  if (q % 2 == 1) m = -m;
  return InfLaurent::from_parts(F, q, m, prec);
}

}  // namespace cmpl
