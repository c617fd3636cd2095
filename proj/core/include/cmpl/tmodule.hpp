#pragma once

#include <mutex>
#include <vector>

#include "cmpl/composition.hpp"
#include "cmpl/frac.hpp"
#include "cmpl/tau.hpp"

namespace cmpl {

/// X with (c - theta) X + X N - N X = C, i.e. X = sum_j ad(N)^j(C) / (c - theta)^(j+1).
ExtMatrix solve_nilpotent_sylvester(const ExtElem& c, const ExtMatrix& N, const ExtMatrix& C);

/// The same equation with c - theta = key and N given by its superdiagonal
/// pattern (sup[a] set when N[a][a+1] = 1), for lazily factored matrices.
FracMatrix solve_nilpotent_sylvester(const Poly& key, const std::vector<bool>& sup, const FracMatrix& C);

/// The t-module G_{s,u}: rho_t = theta I + N + E tau on G_a^d.
class TModule {
 public:
  TModule(const Composition& s, std::vector<ExtElem> u);

  const Composition& index() const { return s_; }
  const std::vector<ExtElem>& u() const { return u_; }
  const ExtPtr& ext() const { return K_; }
  const FieldPtr& field() const { return K_->base(); }
  std::size_t dim() const { return static_cast<std::size_t>(s_.dim()); }
  ExtMatrix N() const;
  const ExtMatrix& E() const { return E_; }
  const std::vector<bool>& superdiagonal() const { return sup_; }
  /// theta I + N.
  ExtMatrix d_rho_t() const;
  TauMatrixPoly rho_t() const;
  /// rho_a for a in F_q[t] (Horner in rho_t).
  TauMatrixPoly rho(const Poly& a) const;
  /// d rho_a = a(theta I + N).
  ExtMatrix d_rho(const Poly& a) const;
  ExtVector apply_t(const ExtVector& w) const;
  /// rho_a(w) from the iterates rho_t^k(w).
  ExtVector apply(const Poly& a, const ExtVector& w) const;
  ExtVector special_point() const;

  /// P_0, ..., P_I of log_G = sum P_i tau^i (cached).
  std::vector<FracMatrix> log_coeffs(std::size_t I) const;
  /// Q_0, ..., Q_I of exp_G = sum Q_i tau^i (cached).
  std::vector<FracMatrix> exp_coeffs(std::size_t I) const;
  /// Closed form of the lower right corner of block (l, m) of P_i (0-based blocks).
  Frac closed_form_corner(std::size_t i, std::size_t l, std::size_t m) const;
  /// E with entries raised to q^i, as lazily factored scalars.
  Matrix<Frac> twisted_E(unsigned i) const;

 private:
  Composition s_;
  std::vector<ExtElem> u_;
  ExtPtr K_;
  ExtMatrix E_;
  std::vector<bool> sup_;
  mutable std::mutex mu_;
  mutable std::vector<FracMatrix> P_, Q_;
};

}  // namespace cmpl
