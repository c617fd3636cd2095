#include "cmpl/tmodule.hpp"

#include "cmpl/lsequence.hpp"

namespace cmpl {

namespace {

ExtMatrix ad(const ExtMatrix& N, const ExtMatrix& Y) { return N * Y - Y * N; }

// ad(N)(Y) = N Y - Y N for a 0/1 superdiagonal N.
FracMatrix ad_sup(const std::vector<bool>& sup, const FracMatrix& Y) {
  const std::size_t n = Y.rows();
  FracMatrix out(n, n, Y.ext());
  out = out.over(Y.den());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      AxElem x(Y.ext());
      if (a + 1 < n && sup[a]) x += Y.num(a + 1, c);
      if (c > 0 && sup[c - 1]) x -= Y.num(a, c - 1);
      out.num(a, c) = std::move(x);
    }
  return out;
}

}  // namespace

ExtMatrix solve_nilpotent_sylvester(const ExtElem& c, const ExtMatrix& N, const ExtMatrix& C) {
  const ExtPtr& K = c.ext();
  const ExtElem D = c - ExtElem::from_poly(K, Poly::theta(K->base()));
  if (D.is_zero()) throw DomainError("Sylvester solve needs c != theta");
  const ExtElem Dinv = D.inv();
  ExtMatrix X = ext_zero_matrix(C.rows(), C.cols(), K);
  ExtMatrix term = C;
  ExtElem scale = Dinv;
  while (!term.is_zero()) {
    X += term.map([&](const ExtElem& x) { return x * scale; });
    term = ad(N, term);
    scale = scale * Dinv;
  }
  return X;
}

FracMatrix solve_nilpotent_sylvester(const Poly& key, const std::vector<bool>& sup, const FracMatrix& C) {
  FracMatrix X(C.rows(), C.cols(), C.ext());
  FracMatrix term = C;
  long j = 1;
  bool first = true;
  while (!term.is_zero()) {
    FracMatrix piece = term.div_key(key, j);
    X = first ? piece : X + piece;
    first = false;
    term = ad_sup(sup, term);
    ++j;
  }
  return X;
}

TModule::TModule(const Composition& s, std::vector<ExtElem> u) : s_(s), u_(std::move(u)) {
  const std::size_t r = s_.depth();
  if (u_.size() != r) throw DomainError("need one u per entry of s");
  K_ = u_[0].ext();
  for (const auto& x : u_) {
    if (x.is_zero()) throw DomainError("t-module parameters u_i must be nonzero");
    check_same_ext(x.ext(), K_);
  }
  const std::size_t d = dim();
  sup_.assign(d, false);
  for (std::size_t l = 0; l < r; ++l)
    for (int k = 0; k + 1 < s_.d(l); ++k) sup_[static_cast<std::size_t>(s_.offset(l) + k)] = true;
  E_ = ext_zero_matrix(d, d, K_);
  const ExtElem one = ExtElem::from_poly(K_, Poly::one(K_->base()));
  for (std::size_t l = 0; l < r; ++l) {
    ExtElem corner = one;
    for (std::size_t m = l; m < r; ++m) {
      if (m > l) corner = -(corner * u_[m - 1]);
      E_(static_cast<std::size_t>(s_.bottom(l)), static_cast<std::size_t>(s_.offset(m))) = corner;
    }
  }
}

ExtMatrix TModule::N() const {
  ExtMatrix m = ext_zero_matrix(dim(), dim(), K_);
  for (std::size_t a = 0; a + 1 < dim(); ++a)
    if (sup_[a]) m(a, a + 1) = ExtElem::from_poly(K_, Poly::one(K_->base()));
  return m;
}

ExtMatrix TModule::d_rho_t() const {
  ExtMatrix m = N();
  for (std::size_t a = 0; a < dim(); ++a) m(a, a) = ExtElem::from_poly(K_, Poly::theta(K_->base()));
  return m;
}

TauMatrixPoly TModule::rho_t() const { return TauMatrixPoly({d_rho_t(), E_}); }

TauMatrixPoly TModule::rho(const Poly& a) const {
  const TauMatrixPoly t = rho_t();
  auto scalar = [&](Fq c) {
    return TauMatrixPoly::constant(ext_identity(dim(), K_).map([&](const ExtElem& x) { return x.scaled(c); }));
  };
  if (a.is_zero()) return TauMatrixPoly(dim(), K_);
  TauMatrixPoly acc = scalar(a.lead());
  for (long k = a.deg() - 1; k >= 0; --k) acc = acc * t + scalar(a.coeff(static_cast<std::size_t>(k)));
  return acc;
}

ExtMatrix TModule::d_rho(const Poly& a) const {
  const ExtMatrix base = d_rho_t();
  ExtMatrix acc = ext_zero_matrix(dim(), dim(), K_);
  const ExtMatrix I = ext_identity(dim(), K_);
  for (long k = a.deg(); k >= 0; --k)
    acc = acc * base + I.map([&](const ExtElem& x) { return x.scaled(a.coeff(static_cast<std::size_t>(k))); });
  return acc;
}

ExtVector TModule::apply_t(const ExtVector& w) const {
  if (w.size() != dim()) throw DomainError("point dimension does not match the t-module");
  const ExtElem th = ExtElem::from_poly(K_, Poly::theta(K_->base()));
  ExtVector out(dim(), ExtElem(K_));
  const ExtVector tw = twist(w, 1);
  for (std::size_t a = 0; a < dim(); ++a) {
    ExtElem x = th * w[a];
    if (a + 1 < dim() && sup_[a]) x += w[a + 1];
    for (std::size_t c = 0; c < dim(); ++c)
      if (!E_(a, c).is_zero() && !tw[c].is_zero()) x += E_(a, c) * tw[c];
    out[a] = std::move(x);
  }
  return out;
}

ExtVector TModule::apply(const Poly& a, const ExtVector& w) const {
  ExtVector out(dim(), ExtElem(K_));
  ExtVector it = w;
  for (long k = 0; k <= a.deg(); ++k) {
    if (k > 0) it = apply_t(it);
    const Fq c = a.coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    for (std::size_t i = 0; i < dim(); ++i) out[i] += it[i].scaled(c);
  }
  return out;
}

ExtVector TModule::special_point() const {
  ExtVector p(dim(), ExtElem(K_));
  const std::size_t r = s_.depth();
  ExtElem prod = ExtElem::from_poly(K_, Poly::one(K_->base()));
  for (std::size_t l = r; l-- > 0;) {
    prod = prod * u_[l];
    p[static_cast<std::size_t>(s_.bottom(l))] = ((r - 1 - l) % 2 == 0) ? prod : -prod;
  }
  return p;
}

Matrix<Frac> TModule::twisted_E(unsigned i) const {
  Matrix<Frac> m(dim(), dim(), Frac(K_));
  for (std::size_t a = 0; a < dim(); ++a)
    for (std::size_t c = 0; c < dim(); ++c)
      if (!E_(a, c).is_zero()) m(a, c) = Frac::from_ext(E_(a, c)).frobenius(i);
  return m;
}

std::vector<FracMatrix> TModule::log_coeffs(std::size_t I) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (P_.empty()) P_.push_back(FracMatrix::identity(dim(), K_));
  while (P_.size() <= I) {
    const std::size_t i = P_.size() - 1;
    // (theta^(q^(i+1)) - theta) P + P N - N P = -P_i E^(i)
    FracMatrix C = -mul_sparse(P_[i], twisted_E(static_cast<unsigned>(i)));
    FracMatrix X = solve_nilpotent_sylvester(frobenius_key(K_->base(), static_cast<unsigned>(i + 1)), sup_, C);
    X.reduce_known_factors();
    P_.push_back(std::move(X));
  }
  return std::vector<FracMatrix>(P_.begin(), P_.begin() + static_cast<long>(I) + 1);
}

std::vector<FracMatrix> TModule::exp_coeffs(std::size_t I) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (Q_.empty()) Q_.push_back(FracMatrix::identity(dim(), K_));
  while (Q_.size() <= I) {
    const std::size_t i = Q_.size();
    // (theta^(q^i) - theta) Q + Q N - N Q = E Q_(i-1)^(1)
    FracMatrix C = mul_sparse(twisted_E(0), Q_[i - 1].frobenius(1));
    FracMatrix X = solve_nilpotent_sylvester(frobenius_key(K_->base(), static_cast<unsigned>(i)), sup_, C);
    X.reduce_known_factors();
    Q_.push_back(std::move(X));
  }
  return std::vector<FracMatrix>(Q_.begin(), Q_.begin() + static_cast<long>(I) + 1);
}

Frac TModule::closed_form_corner(std::size_t i, std::size_t l, std::size_t m) const {
  const FieldPtr& F = K_->base();
  const Frac one(AxElem::from_poly(K_, Poly::one(F)));
  // 1 / L_n^e with L_n = (-1)^n prod_{j<=n} key_j
  auto invL = [&](std::size_t n, long e) {
    Frac x = (n * static_cast<std::size_t>(e)) % 2 ? -one : one;
    for (std::size_t j = 1; j <= n; ++j) x = x.div_key(frobenius_key(F, static_cast<unsigned>(j)), e);
    return x;
  };
  if (l > m) return Frac(K_);
  const Frac tail = invL(i, s_.d(m));
  if (l == m) return tail;
  // T[n] = sum over i_l <= ... <= i_e = n of the first (e - l + 1) factors
  std::vector<Frac> T(i, Frac(K_));
  for (std::size_t e = l; e < m; ++e) {
    std::vector<Frac> next(i, Frac(K_));
    Frac acc(K_);
    for (std::size_t n = 0; n < i; ++n) {
      const Frac w = Frac::from_ext(u_[e]).frobenius(static_cast<unsigned>(n)) * invL(n, s_.s(e));
      if (e == l) {
        next[n] = w;
      } else {
        acc += T[n];
        next[n] = w * acc;
      }
    }
    T = std::move(next);
  }
  Frac sum(K_);
  for (const auto& x : T) sum += x;
  sum = sum * tail;
  return (m - l) % 2 ? -sum : sum;
}

}  // namespace cmpl
