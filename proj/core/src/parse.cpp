#include "cmpl/parse.hpp"

#include <cctype>
#include <memory>
#include <sstream>

#include "cmpl/errors.hpp"

namespace cmpl {

namespace {

struct Node {
  enum Kind { Num, Name, Add, Sub, Mul, Div, Neg, Pow } kind;
  long long num = 0;
  std::string name;
  std::unique_ptr<Node> a, b;
};
using NodePtr = std::unique_ptr<Node>;

NodePtr leaf_num(long long n) {
  auto p = std::make_unique<Node>();
  p->kind = Node::Num;
  p->num = n;
  return p;
}

NodePtr binary(Node::Kind k, NodePtr a, NodePtr b) {
  auto p = std::make_unique<Node>();
  p->kind = k;
  p->a = std::move(a);
  p->b = std::move(b);
  return p;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse \"" + s_ + "\" at " + std::to_string(pos_) + ": " + why);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isalnum(static_cast<unsigned char>(c)) || c == '(';
  }

  NodePtr expr() {
    NodePtr e = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        e = binary(Node::Add, std::move(e), term());
      } else if (peek('-')) {
        ++pos_;
        e = binary(Node::Sub, std::move(e), term());
      } else {
        return e;
      }
    }
  }

  NodePtr term() {
    NodePtr e = unary();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        e = binary(Node::Mul, std::move(e), unary());
      } else if (peek('/')) {
        ++pos_;
        e = binary(Node::Div, std::move(e), unary());
      } else if (starts_factor()) {
        e = binary(Node::Mul, std::move(e), power());
      } else {
        return e;
      }
    }
  }

  NodePtr unary() {
    if (peek('-')) {
      ++pos_;
      auto p = std::make_unique<Node>();
      p->kind = Node::Neg;
      p->a = unary();
      return p;
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a non-negative integer");
      base = binary(Node::Pow, std::move(base), leaf_num(std::stoll(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  NodePtr atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ - start > 15) fail("integer too long");
      return leaf_num(std::stoll(s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      auto p = std::make_unique<Node>();
      p->kind = Node::Name;
      p->name = s_.substr(start, pos_ - start);
      return p;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

template <class V, class Leaf, class Divide>
V eval(const Node& n, const Leaf& leaf, const Divide& divide) {
  switch (n.kind) {
    case Node::Num:
    case Node::Name:
      return leaf(n);
    case Node::Add:
      return eval<V>(*n.a, leaf, divide) + eval<V>(*n.b, leaf, divide);
    case Node::Sub:
      return eval<V>(*n.a, leaf, divide) - eval<V>(*n.b, leaf, divide);
    case Node::Mul:
      return eval<V>(*n.a, leaf, divide) * eval<V>(*n.b, leaf, divide);
    case Node::Div:
      return divide(eval<V>(*n.a, leaf, divide), eval<V>(*n.b, leaf, divide));
    case Node::Neg:
      return -eval<V>(*n.a, leaf, divide);
    case Node::Pow: {
      const V base = eval<V>(*n.a, leaf, divide);
      V r = leaf(*leaf_num(1));
      for (long long k = 0; k < n.b->num; ++k) r = r * base;
      return r;
    }
  }
  throw ParseError("bad expression tree");
}

Fq scalar(const FieldPtr& F, long long n) { return F->from_int(n); }

[[noreturn]] void unknown(const std::string& name, const std::string& allowed) {
  throw ParseError("unknown name '" + name + "' (allowed: " + allowed + ")");
}

// polynomials in one variable over F_q; `var` is the accepted variable name
Poly parse_univariate(const FieldPtr& F, const std::string& s, const std::string& var) {
  const NodePtr tree = Parser(s).parse();
  auto leaf = [&](const Node& n) -> Poly {
    if (n.kind == Node::Num) return Poly::constant(F, scalar(F, n.num));
    if (n.name == var) return Poly::theta(F);
    if (n.name == "g") return Poly::constant(F, F->generator());
    unknown(n.name, var + ", g");
  };
  auto divide = [&](const Poly& a, const Poly& b) -> Poly {
    if (b.is_zero()) throw DomainError("division by zero in \"" + s + "\"");
    Poly qt(F);
    if (!Poly::divides_exact(a, b, &qt)) throw ParseError("inexact division in polynomial \"" + s + "\"");
    return qt;
  };
  return eval<Poly>(*tree, leaf, divide);
}

// coefficients in A of a polynomial in x
struct XPoly {
  std::vector<Poly> c;
  friend XPoly operator+(const XPoly& a, const XPoly& b) {
    XPoly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size(), Poly(b.c[0].field()));
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    return r;
  }
  XPoly operator-() const {
    XPoly r = *this;
    for (auto& p : r.c) p = -p;
    return r;
  }
  friend XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }
  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    XPoly r{std::vector<Poly>(a.c.size() + b.c.size() - 1, Poly(a.c[0].field()))};
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }
};

}  // namespace

ExtElem parse_elem(const ExtPtr& K, const std::string& s) {
  const FieldPtr& F = K->base();
  const NodePtr tree = Parser(s).parse();
  auto leaf = [&](const Node& n) -> ExtElem {
    if (n.kind == Node::Num) return ExtElem::from_poly(K, Poly::constant(F, scalar(F, n.num)));
    if (n.name == "theta") return ExtElem::from_poly(K, Poly::theta(F));
    if (n.name == "g") return ExtElem::from_poly(K, Poly::constant(F, F->generator()));
    if (n.name == "x") {
      if (K->is_trivial()) throw ParseError("'x' needs an extension minimal polynomial");
      return ExtElem::generator(K);
    }
    unknown(n.name, "theta, x, g");
  };
  auto divide = [&](const ExtElem& a, const ExtElem& b) -> ExtElem {
    if (b.is_zero()) throw DomainError("division by zero in \"" + s + "\"");
    return a / b;
  };
  return eval<ExtElem>(*tree, leaf, divide);
}

Poly parse_poly(const FieldPtr& F, const std::string& s) { return parse_univariate(F, s, "theta"); }

Poly parse_t_poly(const FieldPtr& F, const std::string& s) { return parse_univariate(F, s, "t"); }

std::vector<Poly> parse_minpoly(const FieldPtr& F, const std::string& s) {
  const NodePtr tree = Parser(s).parse();
  auto leaf = [&](const Node& n) -> XPoly {
    if (n.kind == Node::Num) return {{Poly::constant(F, scalar(F, n.num))}};
    if (n.name == "theta") return {{Poly::theta(F)}};
    if (n.name == "g") return {{Poly::constant(F, F->generator())}};
    if (n.name == "x") return {{Poly(F), Poly::one(F)}};
    unknown(n.name, "x, theta, g");
  };
  auto divide = [&](const XPoly&, const XPoly&) -> XPoly { throw ParseError("division in a minimal polynomial"); };
  XPoly m = eval<XPoly>(*tree, leaf, divide);
  while (m.c.size() > 1 && m.c.back().is_zero()) m.c.pop_back();
  if (m.c.size() < 2 || !m.c.back().is_one()) throw ParseError("minimal polynomial must be monic in x of degree >= 1");
  return m.c;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

long long parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw ParseError("not an integer: \"" + s + "\"");
  }
  while (used < s.size() && std::isspace(static_cast<unsigned char>(s[used]))) ++used;
  if (used != s.size()) throw ParseError("not an integer: \"" + s + "\"");
  return v;
}

}  // namespace

std::vector<ExtElem> parse_tuple(const ExtPtr& K, const std::string& s) {
  std::vector<ExtElem> out;
  for (const auto& part : split(s, ';')) out.push_back(parse_elem(K, part));
  if (out.empty()) throw ParseError("empty tuple");
  return out;
}

Composition parse_composition(const std::string& s) {
  std::vector<int> v;
  for (const auto& part : split(s, ',')) {
    const long long n = parse_int(part);
    if (n < 1 || n > 1000) throw ParseError("index entries must be positive integers: \"" + s + "\"");
    v.push_back(static_cast<int>(n));
  }
  if (v.empty()) throw ParseError("empty index");
  return Composition(v);
}

std::vector<std::uint32_t> parse_digits(const std::string& s) {
  std::vector<std::uint32_t> v;
  for (const auto& part : split(s, ',')) {
    const long long n = parse_int(part);
    if (n < 0) throw ParseError("modulus digits must be non-negative");
    v.push_back(static_cast<std::uint32_t>(n));
  }
  return v;
}

}  // namespace cmpl
