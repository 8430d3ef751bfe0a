// Degenerate affine Hecke algebra modules and the AKZ connection.
//
// Relation: s_i x_u - x_{s_i u} s_i = k_{alpha_i} alpha_i(u).  Coweights u are
// in the simple-root value coordinates of rootsys.
#pragma once

#include "trigcas/connection.hpp"

#include <memory>
#include <string>
#include <vector>

namespace trigcas {

// A finite-dimensional module over the dAHA of phi.
struct DahaModule {
  const RootSystem* phi = nullptr;
  std::vector<Rational> k;          // k_alpha per positive root
  std::vector<QMatrix> s;           // simple reflections
  std::vector<QMatrix> s_positive;  // s_alpha per positive root
  std::vector<QMatrix> x_basis;     // x_{t^j}

  std::size_t dim() const { return s.front().rows(); }
  QMatrix x(const RatVec& u) const;
  // y_u = x_u - (1/2) sum_{alpha > 0} alpha(u) k_alpha s_alpha
  QMatrix y(const RatVec& u) const;
  const QMatrix& s_alpha(const IntVec& root) const;
  Rational k_alpha(const IntVec& root) const;

  // t_alpha = k_alpha s_alpha, tau = x, reflections = s.
  ConnectionData connection_data() const;
};

// k constant on root lengths: k_long for long roots, k_short for short ones.
std::vector<Rational> k_by_length(const RootSystem& phi, const Rational& k_long, const Rational& k_short);

// Element of W acting as the reflection s_alpha.
const WeylElement& reflection_element(const RootSystem& phi, const IntVec& alpha);

// Left multiplication by g on C W with basis weyl_group().
QMatrix left_multiplication(const RootSystem& phi, const WeylElement& g);

// Ind_{S h}^{H'} C_lambda with basis [w] = w (x) 1, w in weyl_group().
// lambda[j] = lambda(t^j).
DahaModule induced_module(const RootSystem& phi, const std::vector<Rational>& k, const RatVec& lambda);

struct DahaReport {
  Rational involution{0};    // max |s_i^2 - 1|
  Rational braid{0};         // max over i<j of the braid relation residual
  Rational daha{0};          // max |s_i x_u - x_{s_i u} s_i - k_i alpha_i(u)|
  Rational x_commute{0};     // max |[x_u, x_v]|
  Rational y_equivariant{0}; // max |s_i y_u s_i - y_{s_i u}|
  bool ok() const;
};
DahaReport daha_relations(const DahaModule& mod);

// s_i x_u - x_{s_i u} s_i - k_i alpha_i(u) for basis coweight u = t^j.
QMatrix daha_residual(const DahaModule& mod, int i, int j);
// Ad(s_i) x_u - x_{s_i u} - k_i alpha_i(u) s_i, i.e. the (equiv2) residual with t = k s.
QMatrix equiv2_residual(const DahaModule& mod, int i, int j);

// Witness that (equiv2) and the dAHA relation are equivalent: the two residuals
// differ by right multiplication with s_i.
struct EquivalenceWitness {
  Rational link{0};          // max |equiv2 * s_i - daha|, always 0
  Rational daha{0};          // max |daha residual|
  Rational equiv2{0};        // max |equiv2 residual|
};
EquivalenceWitness equivalence_witness(const DahaModule& mod);
// Same module with x_{t^0} shifted by a matrix unit, which breaks the dAHA relation.
DahaModule perturbed(const DahaModule& mod);

// ---------------------------------------------------------------------------
// Yangian-realized action on the zero weight space of (C^n)^{otimes m}.

class ZeroWeightDaha {
 public:
  // phi must be A_{n-1}; requires a small module with V[0] != 0.
  ZeroWeightDaha(const RootSystem& phi, std::shared_ptr<const GlModule> module, std::vector<Rational> a);

  const DahaModule& module() const { return daha_; }
  const std::vector<std::size_t>& basis() const { return basis_; }
  const GlConnection& connection() const { return conn_; }

  // max |y_u - (-2 J(u))| on V[0] over basis coweights.
  Rational y_match_residual() const;
  // max over positive roots of |kappa_alpha - 2(1 - s_alpha)| on V[0].
  Rational lemma_residual() const;
  // Omega_trig(X) - Omega_AKZ(X) - scalar(X) on V[0], with Omega = -A and X trace-free.
  QMatrix akz_equality_residual(const std::vector<Rational>& z, const std::vector<Rational>& X) const;
  // (1/2) sum_{alpha in Phi} k_alpha alpha(X)/(e^alpha - 1).
  Rational akz_scalar(const std::vector<Rational>& z, const std::vector<Rational>& X) const;

  // Coweight coordinates (alpha_j(u)) of a trace-free diagonal X, and back.
  static RatVec coweight_of(const std::vector<Rational>& X);
  static std::vector<Rational> diagonal_of(const RatVec& c, int n);

 private:
  const RootSystem* phi_;
  GlConnection conn_;
  std::vector<std::size_t> basis_;
  DahaModule daha_;
};

struct IntertwinerResult {
  bool exists = false;
  std::size_t solution_dim = 0;
  QMatrix intertwiner;  // maps the induced module to the target
};
// Invertible Phi with Phi g_ind = g_target Phi for every s_i and x_{t^j}.
IntertwinerResult find_intertwiner(const DahaModule& induced, const DahaModule& target);

// lambda(t^j) = 2 sum_k a_k (t^j)_k for the induced comparison on (C^n)^{otimes n}.
RatVec induced_weight(const std::vector<Rational>& a);

}  // namespace trigcas
