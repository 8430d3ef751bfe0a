// Tensor powers (C^n)^{\otimes m} of the gl_n vector representation.
//
// Indices are 0-based throughout: E(i, j) is the elementary matrix E_{i+1,j+1}
// acting by the Leibniz rule, slots p = 0..m-1, and the tensor basis vector
// e_{i_0} (x) ... (x) e_{i_{m-1}} has index sum_p i_p n^{m-1-p}.
#pragma once

#include "trigcas/algebra.hpp"

#include <optional>
#include <vector>

namespace trigcas {

struct SmallnessResult {
  bool small = true;
  // On failure: the gl_n weight (multiplicities) equal to 2(theta_a - theta_b) up to trace.
  std::vector<int> witness_weight;
  int root_a = -1, root_b = -1;
};

class GlModule {
 public:
  // m = 0 gives the one-dimensional trivial module.
  GlModule(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  std::size_t dim() const { return dim_; }
  std::vector<std::size_t> factor_dims() const { return std::vector<std::size_t>(static_cast<std::size_t>(m_), static_cast<std::size_t>(n_)); }

  // Tensor digits (i_0, ..., i_{m-1}) of a basis index, and back.
  std::vector<int> digits(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& digits) const;
  // gl_n weight of a basis vector: multiplicity of each e_k.
  std::vector<int> weight(std::size_t index) const;

  QMatrix identity() const { return QMatrix::identity(dim_); }
  // Leibniz action of E_ij.
  const QMatrix& E(int i, int j) const;
  // E_ij acting on slot p only.
  const QMatrix& E_slot(int i, int j, int p) const;
  // kappa_{theta_a - theta_b} = E_ab E_ba + E_ba E_ab.
  QMatrix kappa(int a, int b) const;
  // Permutation of tensor slots p and q.
  QMatrix swap(int p, int q) const;
  // x^{(p)} for an n x n matrix x.
  QMatrix on_slot(const QMatrix& x, int p) const;
  // x acting diagonally, x (x) ... (x) x.
  QMatrix diagonal_action(const QMatrix& x) const;

  SmallnessResult is_small() const;

  // Triple exponential exp(E_ab) exp(-E_ba) exp(E_ab) and its inverse
  // exp(-E_ab) exp(E_ba) exp(-E_ab), both on the module.
  QMatrix tits_root(int a, int b) const;
  QMatrix tits_root_inverse(int a, int b) const;
  // Simple transposition (i, i+1).
  QMatrix tits_operator(int i) const { return tits_root(i, i + 1); }
  QMatrix tits_operator_inverse(int i) const { return tits_root_inverse(i, i + 1); }

  // Basis indices of the sl_n zero weight space (all multiplicities equal).
  std::vector<std::size_t> zero_weight_basis() const;
  // Restriction of x to the span of basis vectors `basis`; throws Precondition
  // if that span is not x-invariant.
  static QMatrix restrict_to(const QMatrix& x, const std::vector<std::size_t>& basis);

  // kappa_alpha - (alpha, alpha)(1 - s_alpha) on V[0] for alpha = theta_a - theta_b.
  // Throws Precondition on non-small modules unless enforce_small is false.
  QMatrix lemma_V0_residual(int a, int b, bool enforce_small = true) const;

 private:
  void check_index(int i) const;

  int n_ = 0;
  int m_ = 0;
  std::size_t dim_ = 1;
  std::vector<QMatrix> E_;       // n*n
  std::vector<QMatrix> E_slot_;  // n*n*m
};

// n x n elementary matrix.
QMatrix elementary(int n, int i, int j);
// exp(E_ab) exp(-E_ba) exp(E_ab) on C^n.
QMatrix vector_tits_root(int n, int a, int b);

}  // namespace trigcas
