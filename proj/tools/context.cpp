#include "context.hpp"

#include "cmpl/errors.hpp"

namespace cmpl::cli {

namespace {

FieldPtr make_field(const Options& o) {
  if (o.q < 2) throw DomainError("q must be a prime power >= 2");
  std::uint32_t p = 0;
  for (std::uint32_t d = 2; d * d <= o.q && !p; ++d)
    if (o.q % d == 0) p = d;
  if (!p) p = o.q;
  std::uint32_t e = 0, rest = o.q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw DomainError("q = " + std::to_string(o.q) + " is not a prime power");
  return FqField::make(p, e, o.fq_modulus.empty() ? std::vector<std::uint32_t>{} : parse_digits(o.fq_modulus));
}

}  // namespace

Context Context::make(const Options& o, bool need_place) {
  Context c;
  c.F = make_field(o);
  c.K = o.ext_minpoly.empty() ? ExtField::trivial(c.F) : ExtField::make(c.F, parse_minpoly(c.F, o.ext_minpoly));
  if (need_place) {
    c.P = VPlace::make(parse_poly(c.F, o.v));
    c.emb = VAdicEmbedding::make(c.K, c.P, o.root);
  }
  return c;
}

}  // namespace cmpl::cli
