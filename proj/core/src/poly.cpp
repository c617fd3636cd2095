#include "cmpl/poly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cmpl/errors.hpp"

namespace cmpl {

namespace {

constexpr std::size_t kKaratsubaCutoff = 40;

// Schoolbook product over F_p with delayed reduction; out has na+nb-1 slots.
void school_p(const Fq* a, std::size_t na, const Fq* b, std::size_t nb, std::uint64_t* acc) {
  for (std::size_t i = 0; i < na; ++i) {
    const std::uint64_t ai = a[i];
    if (ai == 0) continue;
    std::uint64_t* row = acc + i;
    for (std::size_t j = 0; j < nb; ++j) row[j] += ai * b[j];
  }
}

// Karatsuba for equal lengths n over F_p; writes 2n-1 reduced coefficients.
void kara_p(const Fq* a, const Fq* b, std::size_t n, Fq* out, std::uint32_t p) {
  if (n <= kKaratsubaCutoff) {
    std::vector<std::uint64_t> acc(2 * n - 1, 0);
    school_p(a, n, b, n, acc.data());
    for (std::size_t i = 0; i + 1 < 2 * n; ++i) out[i] = static_cast<Fq>(acc[i] % p);
    return;
  }
  const std::size_t m = n / 2;
  const std::size_t h = n - m;  // h >= m
  std::vector<Fq> z0(2 * m - 1), z2(2 * h - 1), z1(2 * h - 1);
  kara_p(a, b, m, z0.data(), p);
  kara_p(a + m, b + m, h, z2.data(), p);
  std::vector<Fq> sa(h), sb(h);
  for (std::size_t i = 0; i < h; ++i) {
    Fq x = a[m + i], y = b[m + i];
    if (i < m) {
      x += a[i];
      if (x >= p) x -= p;
      y += b[i];
      if (y >= p) y -= p;
    }
    sa[i] = x;
    sb[i] = y;
  }
  kara_p(sa.data(), sb.data(), h, z1.data(), p);
  for (std::size_t i = 0; i < z1.size(); ++i) {
    std::uint64_t v = z1[i] + 2 * static_cast<std::uint64_t>(p);
    if (i < z0.size()) v -= z0[i];
    v -= z2[i];
    z1[i] = static_cast<Fq>(v % p);
  }
  std::fill(out, out + 2 * n - 1, 0);
  for (std::size_t i = 0; i < z0.size(); ++i) out[i] = z0[i];
  for (std::size_t i = 0; i < z2.size(); ++i) out[2 * m + i] = z2[i];
  for (std::size_t i = 0; i < z1.size(); ++i) {
    Fq& o = out[m + i];
    o += z1[i];
    if (o >= p) o -= p;
  }
}

std::vector<Fq> mul_prime(const std::vector<Fq>& a, const std::vector<Fq>& b, std::uint32_t p) {
  const std::size_t na = a.size(), nb = b.size();
  std::vector<Fq> out(na + nb - 1, 0);
  const std::size_t small = std::min(na, nb);
  std::size_t nz_a = 0, nz_b = 0;
  for (auto x : a) nz_a += x != 0;
  for (auto x : b) nz_b += x != 0;
  // Rough operation counts; the schoolbook loop skips zero coefficients.
  const double school = static_cast<double>(std::min(nz_a, nz_b)) * static_cast<double>(std::max(na, nb));
  const double kara = 2.0 * static_cast<double>(std::max(na, nb)) * std::pow(static_cast<double>(small), 0.585);
  if (small <= kKaratsubaCutoff || school <= kara) {
    const std::vector<Fq>& s = nz_a <= nz_b ? a : b;
    const std::vector<Fq>& d = nz_a <= nz_b ? b : a;
    std::vector<std::uint64_t> acc(out.size(), 0);
    // Delayed reduction: flush before the accumulator can overflow.
    const std::uint64_t limit = ~std::uint64_t{0} / (std::uint64_t{p} * p) - 1;
    std::uint64_t pending = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == 0) continue;
      school_p(&s[i], 1, d.data(), d.size(), acc.data() + i);
      if (++pending == limit) {
        for (auto& v : acc) v %= p;
        pending = 0;
      }
    }
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = static_cast<Fq>(acc[i] % p);
    return out;
  }
  // Split the longer operand into blocks of the shorter length.
  const std::vector<Fq>& longer = na >= nb ? a : b;
  const std::vector<Fq>& shorter = na >= nb ? b : a;
  const std::size_t n = shorter.size();
  std::vector<Fq> block(n), prod(2 * n - 1);
  for (std::size_t off = 0; off < longer.size(); off += n) {
    const std::size_t len = std::min(n, longer.size() - off);
    std::fill(block.begin(), block.end(), 0);
    std::copy(longer.begin() + off, longer.begin() + off + len, block.begin());
    kara_p(block.data(), shorter.data(), n, prod.data(), p);
    const std::size_t used = std::min(prod.size(), out.size() - off);
    for (std::size_t i = 0; i < used; ++i) {
      Fq& o = out[off + i];
      o += prod[i];
      if (o >= p) o -= p;
    }
  }
  return out;
}

std::vector<Fq> mul_generic(const FqField& F, const std::vector<Fq>& a, const std::vector<Fq>& b) {
  std::vector<Fq> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) out[i + j] = F.add(out[i + j], F.mul(a[i], b[j]));
  }
  return out;
}

void check_same(const Poly& a, const Poly& b) {
  if (a.field() && b.field() && !same_field(a.field(), b.field()))
    throw DomainError("polynomials over different coefficient fields");
}

const FieldPtr& pick_field(const Poly& a, const Poly& b) { return a.field() ? a.field() : b.field(); }

}  // namespace

std::vector<Fq> mul_coeffs(const FqField& F, const std::vector<Fq>& a, const std::vector<Fq>& b) {
  if (a.empty() || b.empty()) return {};
  if (F.e() == 1) return mul_prime(a, b, F.p());
  return mul_generic(F, a, b);
}

Poly Poly::constant(const FieldPtr& f, Fq c) { return Poly(f, std::vector<Fq>{c}); }

Poly Poly::monomial(const FieldPtr& f, Fq c, std::size_t n) {
  if (c == 0) return Poly(f);
  std::vector<Fq> v(n + 1, 0);
  v[n] = c;
  return Poly(f, std::move(v));
}

std::size_t Poly::nnz() const {
  std::size_t n = 0;
  for (auto x : c_) n += x != 0;
  return n;
}

std::size_t Poly::low_degree() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return 0;
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& x : r.c_) x = f_->neg(x);
  return r;
}

Poly& Poly::operator+=(const Poly& b) {
  check_same(*this, b);
  if (!f_) f_ = b.f_;
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), 0);
  const FqField& F = *f_;
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = F.add(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& b) {
  check_same(*this, b);
  if (!f_) f_ = b.f_;
  if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), 0);
  const FqField& F = *f_;
  for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = F.sub(c_[i], b.c_[i]);
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  const FieldPtr& f = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(f);
  return Poly(f, mul_coeffs(*f, a.c_, b.c_));
}

Poly Poly::scaled(Fq c) const {
  if (c == 0) return Poly(f_);
  if (c == 1) return *this;
  Poly r(*this);
  for (auto& x : r.c_) x = f_->mul(x, c);
  return r;
}

Poly Poly::shifted(std::size_t n) const {
  if (is_zero() || n == 0) return *this;
  std::vector<Fq> v(n, 0);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(f_, std::move(v));
}

Poly Poly::truncated(std::size_t n) const {
  if (c_.size() <= n) return *this;
  return Poly(f_, std::vector<Fq>(c_.begin(), c_.begin() + n));
}

Poly Poly::reversed(std::size_t len) const {
  std::vector<Fq> v(len, 0);
  for (std::size_t i = 0; i < c_.size() && i < len; ++i) v[len - 1 - i] = c_[i];
  return Poly(f_, std::move(v));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return scaled(f_->inv(lead()));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly(f_);
  std::vector<Fq> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = f_->mul(c_[i], f_->from_int(static_cast<long long>(i)));
  return Poly(f_, std::move(v));
}

Poly Poly::pow(std::uint64_t n) const {
  Poly r = one(f_);
  Poly b = *this;
  while (n) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

Poly Poly::frobenius(unsigned s) const {
  if (s == 0 || c_.size() <= 1) return *this;
  std::size_t step = 1;
  for (unsigned i = 0; i < s; ++i) step *= f_->q();
  std::vector<Fq> v((c_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
  return Poly(f_, std::move(v));
}

Fq Poly::eval(Fq x) const {
  Fq r = 0;
  for (std::size_t i = c_.size(); i-- > 0;) r = f_->add(f_->mul(r, x), c_[i]);
  return r;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const FieldPtr& f = pick_field(a, b);
  if (a.deg() < b.deg()) return {Poly(f), a};
  const FqField& F = *f;
  const std::size_t db = static_cast<std::size_t>(b.deg());
  const Fq li = F.inv(b.lead());
  std::vector<std::pair<std::size_t, Fq>> terms;
  for (std::size_t j = 0; j < db; ++j)
    if (b.c_[j] != 0) terms.emplace_back(j, F.neg(b.c_[j]));
  std::vector<Fq> r = a.c_;
  std::vector<Fq> qt(r.size() - db, 0);
  if (F.e() == 1) {
    const std::uint32_t p = F.p();
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i] == 0) continue;
      const std::uint64_t c = (std::uint64_t{r[i]} * li) % p;
      qt[i - db] = static_cast<Fq>(c);
      r[i] = 0;
      Fq* base = r.data() + (i - db);
      for (const auto& [j, nb] : terms) base[j] = static_cast<Fq>((base[j] + c * nb) % p);
    }
  } else {
    for (std::size_t i = r.size(); i-- > db;) {
      if (r[i] == 0) continue;
      const Fq c = F.mul(r[i], li);
      qt[i - db] = c;
      r[i] = 0;
      Fq* base = r.data() + (i - db);
      for (const auto& [j, nb] : terms) base[j] = F.add(base[j], F.mul(c, nb));
    }
  }
  r.resize(db);
  return {Poly(f, std::move(qt)), Poly(f, std::move(r))};
}

bool Poly::divides_exact(const Poly& a, const Poly& b, Poly* quotient) {
  auto [qt, r] = divrem(a, b);
  if (!r.is_zero()) return false;
  if (quotient) *quotient = std::move(qt);
  return true;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  for (std::size_t i = a.c_.size(); i-- > 0;)
    if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
  return false;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Fq c = c_[i];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    const std::string cs = f_->to_string(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (c != 1) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

XgcdResult xgcd(const Poly& a, const Poly& b) {
  const FieldPtr& f = a.field() ? a.field() : b.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::one(f), s1(f);
  Poly t0(f), t1 = Poly::one(f);
  while (!r1.is_zero()) {
    auto [qt, r] = Poly::divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - qt * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - qt * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Fq li = f->inv(r0.lead());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Poly modinv(const Poly& a, const Poly& c) {
  if (c.deg() < 1) throw DomainError("modinv modulus must have positive degree");
  XgcdResult x = xgcd(a % c, c);
  if (!x.g.is_one()) throw DomainError("modinv: " + a.to_string() + " is not invertible mod " + c.to_string());
  return x.s % c;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& a, std::uint64_t n, const Poly& m) {
  Poly r = Poly::one(m.field()) % m;
  Poly b = a % m;
  while (n) {
    if (n & 1) r = mulmod(r, b, m);
    n >>= 1;
    if (n) b = mulmod(b, b, m);
  }
  return r;
}

long ord(const Poly& f, const Poly& v, long cap) {
  if (f.is_zero()) throw DomainError("valuation of zero");
  long k = 0;
  Poly cur = f;
  while (cap < 0 || k < cap) {
    Poly qt;
    if (!Poly::divides_exact(cur, v, &qt)) break;
    cur = std::move(qt);
    ++k;
  }
  return k;
}

}  // namespace cmpl
