#include "cmpl/fq.hpp"

#include <sstream>

#include "cmpl/errors.hpp"

namespace cmpl {

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, low degree first; only used to validate and
// search moduli, where degrees are tiny.
using PPoly = std::vector<std::uint32_t>;

void trim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  std::uint64_t n = p - 2;
  while (n) {
    if (n & 1) r = r * b % p;
    b = b * b % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

PPoly pmod(PPoly a, const PPoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t li = inv_mod_p(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = std::uint64_t{a.back()} * li % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i)
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i] % p) % p);
    trim(a);
  }
  return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return pmod(std::move(r), m, p);
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Rabin's irreducibility test over F_p for a monic modulus of degree e.
bool is_irreducible(const PPoly& m, std::uint32_t p) {
  const std::uint32_t e = static_cast<std::uint32_t>(m.size() - 1);
  if (e == 1) return true;
  auto frob_power = [&](std::uint32_t k) {
    // x^{p^k} mod m
    PPoly x = {0, 1};
    PPoly r = pmod(x, m, p);
    for (std::uint32_t i = 0; i < k; ++i) {
      PPoly acc = {1};
      PPoly base = r;
      std::uint32_t n = p;
      while (n) {
        if (n & 1) acc = pmulmod(acc, base, m, p);
        base = pmulmod(base, base, m, p);
        n >>= 1;
      }
      r = acc;
    }
    return r;
  };
  PPoly full = frob_power(e);
  PPoly xm = pmod(PPoly{0, 1}, m, p);
  trim(full);
  if (full != xm) return false;
  for (std::uint32_t r = 2; r <= e; ++r) {
    if (e % r != 0 || !is_prime(r)) continue;
    PPoly h = frob_power(e / r);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    if (h.empty()) return false;
    PPoly g = pgcd(m, h, p);
    if (g.size() > 1) return false;
  }
  return true;
}

}  // namespace

FieldPtr FqField::make(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw DomainError("extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw DomainError("field order exceeds the desk-scale cap 2^20");
  }
  if (e == 1) {
    modulus = {0, 1};
  } else if (modulus.empty()) {
    // Smallest monic irreducible of degree e, enumerating lower coefficients.
    PPoly cand(e + 1, 0);
    cand[e] = 1;
    for (std::uint64_t code = 0; code < q; ++code) {
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < e; ++i) {
        cand[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      if (cand[0] != 0 && is_irreducible(cand, p)) {
        modulus = cand;
        break;
      }
    }
  } else {
    if (modulus.size() != e + 1 || modulus.back() != 1)
      throw DomainError("F_q modulus must be monic of degree e");
    for (auto c : modulus)
      if (c >= p) throw DomainError("F_q modulus coefficient out of range");
    if (!is_irreducible(modulus, p)) throw DomainError("F_q modulus is reducible over F_p");
  }
  return FieldPtr(new FqField(p, e, std::move(modulus)));
}

FieldPtr FqField::of_order(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be >= 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw DomainError(std::to_string(q) + " is not a prime power");
  return make(static_cast<std::uint32_t>(p), e);
}

FqField::FqField(std::uint32_t p, std::uint32_t e, std::vector<std::uint32_t> modulus)
    : p_(p), e_(e), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  if (e_ > 1 && q_ <= 1024) {
    add_table_.resize(std::size_t{q_} * q_);
    mul_table_.resize(std::size_t{q_} * q_);
    for (Fq a = 0; a < q_; ++a)
      for (Fq b = 0; b < q_; ++b) {
        std::uint32_t s = 0, pw = 1;
        Fq x = a, y = b;
        for (std::uint32_t i = 0; i < e_; ++i) {
          s += ((x % p_ + y % p_) % p_) * pw;
          x /= p_;
          y /= p_;
          pw *= p_;
        }
        add_table_[std::size_t{a} * q_ + b] = s;
        mul_table_[std::size_t{a} * q_ + b] = mul_slow(a, b);
      }
  }
  inv_table_.assign(q_, 0);
  for (Fq a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);
}

Fq FqField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Fq>(r);
}

Fq FqField::from_digits(const std::vector<std::uint32_t>& digits) const {
  if (digits.size() > e_) throw ParseError("F_q element has too many coordinates");
  Fq s = 0, pw = 1;
  for (auto d : digits) {
    if (d >= p_) throw ParseError("F_q coordinate out of range");
    s += d * pw;
    pw *= p_;
  }
  return s;
}

std::vector<std::uint32_t> FqField::digits(Fq a) const {
  std::vector<std::uint32_t> out(e_);
  for (std::uint32_t i = 0; i < e_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

Fq FqField::add_ext(Fq a, Fq b) const {
  if (!add_table_.empty()) return add_table_[std::size_t{a} * q_ + b];
  Fq s = 0, pw = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    s += ((a % p_ + b % p_) % p_) * pw;
    a /= p_;
    b /= p_;
    pw *= p_;
  }
  return s;
}

Fq FqField::neg_ext(Fq a) const {
  Fq s = 0, pw = 1;
  for (std::uint32_t i = 0; i < e_; ++i) {
    const Fq d = a % p_;
    s += (d == 0 ? 0 : p_ - d) * pw;
    a /= p_;
    pw *= p_;
  }
  return s;
}

Fq FqField::mul_ext(Fq a, Fq b) const {
  if (!mul_table_.empty()) return mul_table_[std::size_t{a} * q_ + b];
  return mul_slow(a, b);
}

Fq FqField::mul_slow(Fq a, Fq b) const {
  const auto da = digits(a);
  const auto db = digits(b);
  PPoly prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  PPoly r = pmod(std::move(prod), modulus_, p_);
  r.resize(e_, 0);
  return from_digits(r);
}

Fq FqField::inv(Fq a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  if (!inv_table_.empty() && inv_table_[a] != 0) return inv_table_[a];
  return pow(a, q_ - 2);
}

Fq FqField::pow(Fq a, std::uint64_t n) const {
  Fq r = 1;
  while (n) {
    if (n & 1) r = mul(r, a);
    a = mul(a, a);
    n >>= 1;
  }
  return r;
}

std::string FqField::to_string(Fq a) const {
  if (e_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::uint32_t i = e_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << d[i];
    } else {
      if (d[i] != 1) os << d[i] << "*";
      os << "g";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace cmpl
