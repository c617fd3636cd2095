#include "cmpl/ext.hpp"

#include <cmath>
#include <sstream>

#include "cmpl/errors.hpp"

namespace cmpl {

namespace {

constexpr std::uint64_t kSearchCap = std::uint64_t{1} << 22;

// All polynomials of degree <= D, visited through a callback; false to stop.
template <class Fn>
bool for_each_poly(const FieldPtr& F, long D, Fn&& fn) {
  if (D < 0) return fn(Poly(F));
  const std::uint64_t q = F->q();
  std::uint64_t total = 1;
  for (long i = 0; i <= D; ++i) {
    total *= q;
    if (total > kSearchCap) throw DomainError("irreducibility search space too large for deg m <= 4 trial factorization");
  }
  std::vector<Fq> c(static_cast<std::size_t>(D + 1), 0);
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t t = code;
    for (auto& x : c) {
      x = static_cast<Fq>(t % q);
      t /= q;
    }
    if (!fn(Poly(F, c))) return false;
  }
  return true;
}

Poly eval_minpoly(const std::vector<Poly>& m, const Poly& r) {
  Poly acc(r.field());
  for (std::size_t i = m.size(); i-- > 0;) acc = acc * r + m[i];
  return acc;
}

// Does x^2 + b x + c divide m in A[x]?
bool quadratic_divides(const std::vector<Poly>& m, const Poly& b, const Poly& c) {
  std::vector<Poly> r = m;
  const std::size_t n = m.size() - 1;
  for (std::size_t k = n; k >= 2; --k) {
    const Poly lead = r[k];
    if (lead.is_zero()) continue;
    r[k - 1] -= lead * b;
    r[k - 2] -= lead * c;
    r[k] = Poly(lead.field());
  }
  return r[0].is_zero() && r[1].is_zero();
}

void check_irreducible(const FieldPtr& F, const std::vector<Poly>& m) {
  const std::size_t n = m.size() - 1;
  if (n == 1) return;
  double bound = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!m[i].is_zero())
      bound = std::max(bound, static_cast<double>(m[i].deg()) / static_cast<double>(n - i));
  if (m[0].is_zero()) throw DomainError("minimal polynomial has the root 0");
  const long D = static_cast<long>(std::floor(bound + 1e-9));
  for_each_poly(F, D, [&](const Poly& r) {
    if (eval_minpoly(m, r).is_zero()) throw DomainError("minimal polynomial has a root in k: " + r.to_string());
    return true;
  });
  if (n == 4) {
    const long Db = D;
    const long Dc = static_cast<long>(std::floor(2 * bound + 1e-9));
    for_each_poly(F, Db, [&](const Poly& b) {
      return for_each_poly(F, Dc, [&](const Poly& c) {
        if (quadratic_divides(m, b, c)) throw DomainError("minimal polynomial has a quadratic factor over k");
        return true;
      });
    });
  }
}

}  // namespace

void check_same_ext(const ExtPtr& a, const ExtPtr& b) {
  if (a == b) return;
  if (!a || !b || !a->same_as(*b)) throw DomainError("elements of different extensions K cannot be mixed");
}

// ---------------------------------------------------------------- AxElem

AxElem::AxElem(const ExtPtr& K) : K_(K), c_(K->degree(), Poly(K->base())) {}

AxElem::AxElem(const ExtPtr& K, std::vector<Poly> c) : K_(K), c_(std::move(c)) {
  const std::size_t n = K_->degree();
  if (c_.size() > n) {
    reduce_high(c_);
  }
  c_.resize(n, Poly(K_->base()));
}

AxElem AxElem::from_poly(const ExtPtr& K, const Poly& a) {
  AxElem r(K);
  r.c_[0] = a;
  return r;
}

bool AxElem::is_zero() const {
  for (const auto& p : c_)
    if (!p.is_zero()) return false;
  return true;
}

bool AxElem::is_scalar() const {
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

long AxElem::max_deg() const {
  long d = -1;
  for (const auto& p : c_) d = std::max(d, p.deg());
  return d;
}

AxElem AxElem::operator-() const {
  AxElem r(*this);
  for (auto& p : r.c_) p = -p;
  return r;
}

AxElem& AxElem::operator+=(const AxElem& b) {
  check_same_ext(K_, b.K_);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += b.c_[j];
  return *this;
}

AxElem& AxElem::operator-=(const AxElem& b) {
  check_same_ext(K_, b.K_);
  for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= b.c_[j];
  return *this;
}

void AxElem::reduce_high(std::vector<Poly>& wide) const {
  const auto& m = K_->minpoly();
  const std::size_t n = m.size() - 1;
  for (std::size_t k = wide.size(); k-- > n;) {
    if (wide[k].is_zero()) continue;
    const Poly c = wide[k];
    for (std::size_t i = 0; i < n; ++i)
      if (!m[i].is_zero()) wide[k - n + i] -= c * m[i];
    wide[k] = Poly(c.field());
  }
  wide.resize(n);
}

AxElem operator*(const AxElem& a, const AxElem& b) {
  check_same_ext(a.K_, b.K_);
  const std::size_t n = a.c_.size();
  if (n == 1) return AxElem(a.K_, {a.c_[0] * b.c_[0]});
  std::vector<Poly> wide(2 * n - 1, Poly(a.K_->base()));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (!b.c_[j].is_zero()) wide[i + j] += a.c_[i] * b.c_[j];
  }
  a.reduce_high(wide);
  return AxElem(a.K_, std::move(wide));
}

AxElem AxElem::mul_poly(const Poly& a) const {
  AxElem r(*this);
  for (auto& p : r.c_) p = p.is_zero() ? p : p * a;
  return r;
}

AxElem AxElem::scaled(Fq c) const {
  AxElem r(*this);
  for (auto& p : r.c_) p = p.scaled(c);
  return r;
}

bool AxElem::divide_exact(const Poly& d, AxElem* out) const {
  std::vector<Poly> qs(c_.size());
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j].is_zero()) {
      qs[j] = c_[j];
      continue;
    }
    if (!Poly::divides_exact(c_[j], d, &qs[j])) return false;
  }
  if (out) *out = AxElem(K_, std::move(qs));
  return true;
}

AxElem AxElem::frobenius(unsigned s) const {
  if (s == 0) return *this;
  if (c_.size() == 1) return AxElem(K_, {c_[0].frobenius(s)});
  AxElem cur = *this;
  const auto& xq = K_->frobenius_powers();
  for (unsigned it = 0; it < s; ++it) {
    AxElem next(K_);
    for (std::size_t j = 0; j < cur.c_.size(); ++j) {
      if (cur.c_[j].is_zero()) continue;
      next += xq[j].mul_poly(cur.c_[j].frobenius(1));
    }
    cur = std::move(next);
  }
  return cur;
}

AxElem AxElem::pow(std::uint64_t n) const {
  AxElem r = from_poly(K_, Poly::one(K_->base()));
  AxElem b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Poly AxElem::content() const {
  Poly g(K_->base());
  for (const auto& p : c_) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? p.monic() : gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

std::string AxElem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = c_.size(); j-- > 0;) {
    if (c_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    const std::string cs = c_[j].to_string();
    if (j == 0) {
      os << cs;
      continue;
    }
    if (!c_[j].is_one()) os << "(" << cs << ")*";
    os << "x";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

// ---------------------------------------------------------------- ExtField

ExtPtr ExtField::make(const FieldPtr& F, std::vector<Poly> m) {
  if (m.size() < 2) throw DomainError("minimal polynomial must have degree >= 1");
  if (m.size() > 5) throw DomainError("extensions of degree > 4 are not supported");
  for (auto& c : m)
    if (!c.field()) c = Poly(F);
  if (!m.back().is_one()) throw DomainError("minimal polynomial must be monic with coefficients in A");
  const bool trivial = m.size() == 2 && m[0].is_zero();
  if (!trivial) check_irreducible(F, m);
  std::shared_ptr<ExtField> K(new ExtField(F, std::move(m)));
  const std::size_t n = K->degree();
  // x^q mod m, then its powers.
  std::vector<Poly> xc(n, Poly(F));
  if (n > 1) xc[1] = Poly::one(F);
  else if (!trivial) xc[0] = -K->m_[0];
  AxElem x(K, xc);
  AxElem xq = x.pow(F->q());
  AxElem acc = AxElem::from_poly(K, Poly::one(F));
  for (std::size_t j = 0; j < n; ++j) {
    K->xq_.push_back(acc);
    acc = acc * xq;
  }
  return K;
}

ExtPtr ExtField::trivial(const FieldPtr& F) { return make(F, {Poly(F), Poly::one(F)}); }

std::string ExtField::minpoly_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = m_.size(); j-- > 0;) {
    if (m_[j].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << "(" << m_[j].to_string() << ")";
      continue;
    }
    if (!m_[j].is_one()) os << "(" << m_[j].to_string() << ")*";
    os << "x";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}

// ---------------------------------------------------------------- ExtElem

ExtElem::ExtElem(const ExtPtr& K) : num_(K), den_(Poly::one(K->base())) {}

ExtElem::ExtElem(AxElem num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("zero denominator in K");
  normalize();
}

ExtElem::ExtElem(AxElem num) : num_(std::move(num)), den_(Poly::one(num_.ext()->base())) {}

ExtElem ExtElem::from_ratfunc(const ExtPtr& K, const RatFunc& r) {
  return ExtElem(AxElem::from_poly(K, r.num()), r.den());
}

ExtElem ExtElem::generator(const ExtPtr& K) {
  const FieldPtr& F = K->base();
  std::vector<Poly> c(K->degree(), Poly(F));
  if (K->degree() > 1) c[1] = Poly::one(F);
  else c[0] = -K->minpoly()[0];
  return ExtElem(AxElem(K, std::move(c)));
}

ExtElem ExtElem::from_coords(const ExtPtr& K, const std::vector<RatFunc>& coords) {
  if (coords.size() != K->degree()) throw DomainError("coordinate count does not match [K:k]");
  const FieldPtr& F = K->base();
  Poly L = Poly::one(F);
  for (const auto& c : coords) L = L * (c.den() / gcd(L, c.den()));
  std::vector<Poly> nums;
  for (const auto& c : coords) nums.push_back(c.num() * (L / c.den()));
  return ExtElem(AxElem(K, std::move(nums)), L);
}

void ExtElem::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::one(den_.field());
    return;
  }
  if (!den_.is_constant()) {
    Poly g = gcd(num_.content(), den_);
    if (!g.is_one()) {
      num_.divide_exact(g, &num_);
      den_ = den_ / g;
    }
  }
  const Fq l = den_.lead();
  if (l != 1) {
    const Fq li = den_.F().inv(l);
    num_ = num_.scaled(li);
    den_ = den_.scaled(li);
  }
}

RatFunc ExtElem::to_ratfunc() const {
  if (!in_base()) throw DomainError("element of K does not lie in k");
  return RatFunc(num_.coord(0), den_);
}

std::vector<RatFunc> ExtElem::coords() const {
  std::vector<RatFunc> out;
  for (const auto& c : num_.coords()) out.emplace_back(c, den_);
  return out;
}

ExtElem ExtElem::operator-() const {
  ExtElem r(*this);
  r.num_ = -r.num_;
  return r;
}

ExtElem operator+(const ExtElem& a, const ExtElem& b) {
  check_same_ext(a.ext(), b.ext());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_one()) return ExtElem(a.num_ + b.num_);
    return ExtElem(a.num_ + b.num_, a.den_);
  }
  Poly g = gcd(a.den_, b.den_);
  Poly ca = b.den_ / g, cb = a.den_ / g;
  return ExtElem(a.num_.mul_poly(ca) + b.num_.mul_poly(cb), a.den_ * ca);
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
  check_same_ext(a.ext(), b.ext());
  if (a.is_zero() || b.is_zero()) return ExtElem(a.ext());
  AxElem n = a.num_ * b.num_;
  if (a.den_.is_one() && b.den_.is_one()) return ExtElem(std::move(n));
  return ExtElem(std::move(n), a.den_ * b.den_);
}

ExtElem ExtElem::scaled(Fq c) const {
  if (c == 0) return ExtElem(ext());
  ExtElem r(*this);
  r.num_ = r.num_.scaled(c);
  return r;
}

ExtElem ExtElem::inv() const {
  if (is_zero()) throw DomainError("inverse of zero in K");
  const ExtPtr& K = ext();
  const std::size_t n = K->degree();
  const FieldPtr& F = K->base();
  if (n == 1) return ExtElem(AxElem::from_poly(K, den_), num_.coord(0));
  // Solve M y = e_0 over k, where column j of M holds num * x^j.
  std::vector<std::vector<RatFunc>> M(n, std::vector<RatFunc>(n + 1, RatFunc(F)));
  AxElem col = num_;
  std::vector<Poly> xc(n, Poly(F));
  xc[1] = Poly::one(F);
  const AxElem x(K, xc);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) M[i][j] = RatFunc(col.coord(i));
    col = col * x;
  }
  M[0][n] = RatFunc::constant(F, 1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && M[piv][c].is_zero()) ++piv;
    if (piv == n) throw DomainError("singular multiplication matrix; minimal polynomial reducible?");
    std::swap(M[piv], M[c]);
    const RatFunc inv = M[c][c].inv();
    for (std::size_t k = c; k <= n; ++k) M[c][k] = M[c][k] * inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || M[r][c].is_zero()) continue;
      const RatFunc f = M[r][c];
      for (std::size_t k = c; k <= n; ++k) M[r][k] = M[r][k] - f * M[c][k];
    }
  }
  std::vector<RatFunc> y;
  for (std::size_t i = 0; i < n; ++i) y.push_back(M[i][n] * RatFunc(den_));
  return from_coords(K, y);
}

ExtElem ExtElem::pow(long n) const {
  if (n < 0) return inv().pow(-n);
  ExtElem r = from_poly(ext(), Poly::one(field()));
  ExtElem b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

ExtElem ExtElem::frobenius(unsigned s) const {
  if (s == 0) return *this;
  AxElem n = num_.frobenius(s);
  if (den_.is_one()) return ExtElem(std::move(n));
  return ExtElem(std::move(n), den_.frobenius(s));
}

std::string ExtElem::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace cmpl
