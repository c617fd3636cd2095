#include "cmpl/composition.hpp"

#include "cmpl/errors.hpp"

namespace cmpl {

Composition::Composition(std::vector<int> s) : s_(std::move(s)) {
  if (s_.empty()) throw DomainError("composition index must have depth >= 1");
  for (int x : s_)
    if (x < 1) throw DomainError("composition entries must be positive");
  d_.assign(s_.size(), 0);
  int acc = 0;
  for (std::size_t l = s_.size(); l-- > 0;) {
    acc += s_[l];
    d_[l] = acc;
  }
  weight_ = acc;
  off_.assign(s_.size(), 0);
  int o = 0;
  for (std::size_t l = 0; l < s_.size(); ++l) {
    off_[l] = o;
    o += d_[l];
  }
  dim_ = o;
}

Composition Composition::reversed() const { return Composition(std::vector<int>(s_.rbegin(), s_.rend())); }

Composition Composition::slice(std::size_t a, std::size_t b) const {
  if (a > b || b >= s_.size()) throw DomainError("composition slice out of range");
  return Composition(std::vector<int>(s_.begin() + static_cast<long>(a), s_.begin() + static_cast<long>(b) + 1));
}

std::string Composition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < s_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s_[i]);
  }
  return out + ")";
}

}  // namespace cmpl
