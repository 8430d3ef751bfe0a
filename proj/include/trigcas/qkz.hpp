// Rational R-matrices and qKZ difference operators on (C^n)^{otimes m}.
//
// Factor indices are 0-based.  Yang's R-matrix is R(u) = 1 - P/u.
//
// Coupling to the trigonometric connection requires matching the Y(sl_n)
// conventions of the qKZ system with the gl_n evaluation realization.  The
// identification negates the Cartan part (T_{i,0} = -(E_ii - E_{i+1,i+1})), so in
// gl_n matrices the qKZ data reads
//   R_Y(u) = 1 + P/u = R(-u),  d_i(z) = z^{+weight} on factor i,
//   B(a)   = delta-form coefficient with evaluation parameters +a.
// QkzConvention::Literal keeps R(u), d_i = z^{-weight} and evaluation
// parameters -a; it exists to report that this reading does not commute.
#pragma once

#include "trigcas/connection.hpp"

#include <functional>
#include <memory>
#include <vector>

namespace trigcas {

enum class QkzConvention { Matched, Literal };

// 1 - P^{kl}/u on the m-fold tensor power of C^n; throws Singular for u = 0.
QMatrix yang_R(const GlModule& V, int k, int l, const Rational& u);
// R^{12}(u) R^{13}(u+v) R^{23}(v) - R^{23}(v) R^{13}(u+v) R^{12}(u) on (C^n)^{otimes 3}.
Rational qybe_residual(int n, const Rational& u, const Rational& v);
// R(u) R^{21}(-u) - (1 - u^{-2}) on (C^n)^{otimes 2}.
Rational unitarity_residual(int n, const Rational& u);

class QkzSystem {
 public:
  QkzSystem(std::shared_ptr<const GlModule> module, Rational kappa, QkzConvention convention = QkzConvention::Matched);

  const GlModule& module() const { return *module_; }
  int m() const { return module_->m(); }
  const Rational& kappa() const { return kappa_; }

  // R-matrix entering A_i and Atilde_i.
  QMatrix R(int k, int l, const Rational& u) const;
  // d_i(z), diagonal.
  QMatrix d(int i, const std::vector<Rational>& z) const;
  // sum_{j <= i} X^{(j)}: d(d_0 ... d_i)(d_0 ... d_i)^{-1} on direction X.
  QMatrix log_derivative_d(int i, const std::vector<Rational>& X) const;

  // Throws Singular naming the pair if some a_k - a_l or a_k - a_l - kappa is
  // 0 or +-1 (R not invertible or undefined).
  void require_nonsingular(const std::vector<Rational>& a) const;

  QMatrix A(int i, const std::vector<Rational>& z, const std::vector<Rational>& a) const;
  QMatrix A_tilde(int i, const std::vector<Rational>& z, const std::vector<Rational>& a) const;
  // Delta_{a}(B) contracted with X, i.e. the delta-form coefficient.
  QMatrix B(const std::vector<Rational>& z, const std::vector<Rational>& X, const std::vector<Rational>& a) const;

  // a + kappa (e_0 + ... + e_i).
  std::vector<Rational> shifted(const std::vector<Rational>& a, int i) const;

  // A_j(a + kappa e_i) A_i(a) - A_i(a + kappa e_j) A_j(a).
  Rational consistency_residual(int i, int j, const std::vector<Rational>& z, const std::vector<Rational>& a) const;
  // A_i(a + kappa(e_0..e_{i-1})) ... A_1(a + kappa e_0) A_0(a) - Atilde_i(a).
  Rational product_lemma_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& a) const;
  // (d Atilde_i) Atilde_i^{-1} - (2 kappa)^{-1} (B(a + kappa(e_0..e_i)) - B(a)).
  Rational cross_diff_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& X,
                               const std::vector<Rational>& a) const;
  // [Atilde_i, B(a)].
  Rational commutation_lemma_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& X,
                                      const std::vector<Rational>& a) const;
  // d(Atilde_i^{-1}) - (2 kappa)^{-1} Atilde_i^{-1} (B(a) - B(a + kappa(e_0..e_i)))
  //                  - (2 kappa)^{-1} [B(a), Atilde_i^{-1}].
  Rational bispectral_residual(int i, const std::vector<Rational>& z, const std::vector<Rational>& X,
                               const std::vector<Rational>& a) const;

  // Sections f: a -> vector.  (TT_i f)(a) = A_i(a)^{-1} f(a + kappa e_i).
  using Section = std::function<std::vector<Rational>(const std::vector<Rational>&)>;
  Section apply_TT(int i, const std::vector<Rational>& z, Section f) const;

 private:
  QMatrix apply_R_chain_A(int i, const std::vector<Rational>& z, const std::vector<Rational>& a) const;

  std::shared_ptr<const GlModule> module_;
  Rational kappa_;
  QkzConvention convention_;
};

std::vector<Rational> mat_vec(const QMatrix& m, const std::vector<Rational>& v);

}  // namespace trigcas
