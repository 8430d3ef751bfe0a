// Trigonometric connections.
//
// Sign convention: nabla = d - A.  Every "coefficient" below is A evaluated on
// a tangent direction; residuals that compare connections use the connection
// one-form Omega = -A.
//
// gl_n points are z = (z_1, ..., z_n) with z_i = e^{theta_i}; directions X are
// diagonal matrices given by (X_1, ..., X_n) = (theta_1(X), ..., theta_n(X)).
#pragma once

#include "trigcas/rootsys.hpp"
#include "trigcas/yangian.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace trigcas {

enum class FormStyle { Tau, Delta, RationalZ };

// The gl_n trigonometric Casimir connection realized on a tensor product of
// evaluation modules.
class GlConnection {
 public:
  GlConnection(std::shared_ptr<const GlModule> module, std::vector<Rational> a);

  const YangianRealizer& yangian() const { return y_; }
  const GlModule& module() const { return y_.module(); }
  int n() const { return y_.n(); }

  // Multiplies A by `scale`.  The one-parameter family with lambda^{-1} in
  // front corresponds to scale = 1/lambda.
  void set_scale(Rational scale) { scale_ = std::move(scale); }
  // Negative control: every D_i loses its kappa-sum.
  void set_mutant(bool mutant) { mutant_ = mutant; }

  // Throws Singular unless z_i != z_j for i != j and every z_i != 0.
  static void require_regular(const std::vector<Rational>& z);

  QMatrix coefficient(FormStyle style, const std::vector<Rational>& z, const std::vector<Rational>& X) const;
  // Tau form with Phi_+ replaced by w Phi_+ and tau by tau_w, for w in the Weyl
  // group of phi = A_{n-1}.
  QMatrix coefficient_chamber(const RootSystem& phi, const WeylElement& w, const std::vector<Rational>& z,
                              const std::vector<Rational>& X) const;
  // Floating tau form for complex points and directions.
  CMatrix coefficient_complex(const std::vector<Complex>& z, const std::vector<Complex>& X) const;

  // max over coordinate direction pairs of |[A(e_i), A(e_j)]|.
  Rational flatness_residual(FormStyle style, const std::vector<Rational>& z) const;

  struct EquivarianceReport {
    Rational kappa{0};      // max |Ad(r_i) kappa_alpha - kappa_{s_i alpha}|
    Rational tail{0};       // max |Ad(r_i) D(u) - D(s_i u) - alpha_i(u) kappa_{alpha_i}|, u over coordinate basis
    Rational pointwise{0};  // max |Ad(r_i) A(z)(X) - A(s_i z)(s_i X)|
  };
  EquivarianceReport equivariance_residual(int i, const std::vector<Rational>& z) const;

  // For trace-free X: Omega_gl(X) - Omega_sl(X) - (-sum_i lambda_i(X) t_i), where
  // Omega_sl is built from T_{i,1} via the tau form of the sl_n connection.
  QMatrix sl_restriction_residual(const std::vector<Rational>& z, const std::vector<Rational>& X) const;

  // Omega' - Omega_img - omega for the dynamical operators with parameter lambda,
  // where Omega' = lambda sum_i X_i L_i(a, z), Omega_img = -(lambda/2) A(X) and
  // omega is the closed h-valued one-form.
  QMatrix tv_residual(const std::vector<Rational>& z, const std::vector<Rational>& X, const Rational& lambda) const;
  // L_i(a, z) with the second sum read as (E_ij)_p (E_ji)_q.
  QMatrix tv_L(int i, const std::vector<Rational>& z) const;

  QMatrix D_used(int k) const { return mutant_ ? y_.D_mutant(k) : y_.D(k); }

 private:
  YangianRealizer y_;
  Rational scale_{1};
  bool mutant_ = false;
  std::vector<CMatrix> kappa_c_;  // upper-triangular pairs, row-major over (i<j)
  std::vector<CMatrix> D_c_;
  std::vector<CMatrix> D_mut_c_;
};

// Results of the generic relation suite.
struct RelationEntry {
  std::string relation;
  Rational max_residual{0};
  std::size_t checks = 0;
  std::string first_failure;
  bool ok() const { return sgn(max_residual) == 0; }
};

struct RelationReport {
  std::vector<RelationEntry> entries;
  bool ok() const;
  const RelationEntry* find(const std::string& relation) const;
};

// Data of an A-valued connection on H_reg attached to a root system: t_alpha
// for each positive root (indexed like positive_roots()), tau on the basis of
// fundamental coweights, and optionally the simple-reflection action on A
// given by conjugation with invertible matrices.
struct ConnectionData {
  const RootSystem* phi = nullptr;
  std::vector<QMatrix> t;                 // per positive root
  std::vector<QMatrix> tau_basis;         // tau(t^i)
  std::vector<QMatrix> reflections;       // s_i (optional)
  std::vector<QMatrix> reflections_inv;   // s_i^{-1}

  const QMatrix& t_of(const IntVec& root) const;
  QMatrix tau(const RatVec& v) const;
  QMatrix tau_w(const WeylElement& w, const RatVec& v) const;
  QMatrix delta(const RatVec& v) const;
};

// (tt) on every rank-2 subsystem including non-complete ones, (tau tau),
// (t tau) for every (alpha, w) with w^{-1} alpha simple, (t delta), (t^w t),
// and when reflections are present (equiv1) and (equiv2).
RelationReport generic_relation_suite(const ConnectionData& data);

// sl_n instance on (C^n)^{otimes m}: t_alpha = kappa_alpha, tau(u) = D(u).
ConnectionData sl_connection_data(const RootSystem& phi, const GlConnection& conn);

// Positive root of A_{n-1} in simple-root coordinates -> (a, b) with root theta_a - theta_b.
std::pair<int, int> type_a_root_pair(const IntVec& root);

}  // namespace trigcas
