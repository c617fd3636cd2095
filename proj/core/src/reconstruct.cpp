#include "cmpl/reconstruct.hpp"

#include "cmpl/errors.hpp"

namespace cmpl {

std::optional<RatFunc> rational_reconstruct(const InfLaurent& x, long H) {
  if (H < 0) throw DomainError("height bound must be non-negative");
  const FieldPtr& F = x.field();
  if (x.is_exact_zero()) return RatFunc(F);
  if (x.is_exact()) {
    const Poly m = x.mantissa().reversed(x.mantissa().size());
    const long low = x.val() - m.deg();
    RatFunc r = low >= 0 ? RatFunc(m.shifted(static_cast<std::size_t>(low)))
                         : RatFunc(m, Poly::monomial(F, 1, static_cast<std::size_t>(-low)));
    if (r.height() > H) return std::nullopt;
    return r;
  }
  const long n = x.is_zero() ? x.val() - x.prec() + 1 : x.count();
  if (x.is_zero()) {
    // All known coefficients vanish; 0 is the only candidate of small height
    // once enough of them are known.
    if (-x.prec() + 1 < 2 * H + 2) throw PrecisionError("not enough known coefficients to reconstruct");
    return RatFunc(F);
  }
  if (n < 2 * H + 2) throw PrecisionError("not enough known coefficients to reconstruct");
  const std::size_t N = static_cast<std::size_t>(n);

  // Pade approximation of the mantissa M(X) = a~(X)/b~(X) mod X^n.
  Poly r0 = Poly::monomial(F, 1, N), r1 = x.mantissa().truncated(N);
  Poly t0(F), t1 = Poly::one(F);
  while (r1.deg() > H) {
    auto [qt, r] = Poly::divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly t = t0 - qt * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r1.is_zero() || t1.deg() > H || t1.coeff(0) == 0) return std::nullopt;

  const long da = r1.deg(), db = t1.deg();
  const Poly A = r1.reversed(static_cast<std::size_t>(da + 1));
  const Poly B = t1.reversed(static_cast<std::size_t>(db + 1));
  const long shift = x.val() - da + db;
  RatFunc cand = shift >= 0 ? RatFunc(A.shifted(static_cast<std::size_t>(shift)), B)
                            : RatFunc(A, B.shifted(static_cast<std::size_t>(-shift)));
  if (cand.height() > H) return std::nullopt;
  if (!agrees(InfLaurent::embed(cand, x.prec()), x)) return std::nullopt;
  return cand;
}

}  // namespace cmpl
