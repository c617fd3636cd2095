#pragma once

#include <string>
#include <vector>

namespace cmpl {

/// Index s = (s_1, ..., s_r) with d_l = s_l + ... + s_r and d = sum_l d_l.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> s);

  const std::vector<int>& s() const { return s_; }
  int s(std::size_t i) const { return s_[i]; }
  std::size_t depth() const { return s_.size(); }
  int weight() const { return weight_; }
  /// d_(l+1) in 0-based indexing.
  int d(std::size_t l) const { return d_[l]; }
  const std::vector<int>& ds() const { return d_; }
  int dim() const { return dim_; }
  /// 0-based index of the first coordinate of block l.
  int offset(std::size_t l) const { return off_[l]; }
  /// 0-based index of the last coordinate of block l.
  int bottom(std::size_t l) const { return off_[l] + d_[l] - 1; }

  Composition reversed() const;
  /// (s_a, ..., s_b), 0-based and inclusive.
  Composition slice(std::size_t a, std::size_t b) const;
  std::string to_string() const;

  friend bool operator==(const Composition& a, const Composition& b) { return a.s_ == b.s_; }

 private:
  std::vector<int> s_, d_, off_;
  int weight_ = 0, dim_ = 0;
};

}  // namespace cmpl
