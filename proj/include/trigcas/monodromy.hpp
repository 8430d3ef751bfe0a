// Numerical parallel transport and the affine braid group monodromy.
//
// Points of the complexified Cartan of gl_n are written zeta = theta/(2 pi i),
// so z_k = exp(2 pi i zeta_k) and the root hypertori e^alpha = 1 are the
// hyperplanes alpha(zeta) in Z.  Flat sections of d - A solve f' = A(gamma)(gamma') f.
#pragma once

#include "trigcas/connection.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace trigcas {

using CVec = std::vector<Complex>;

struct PathSpec {
  std::function<CVec(double)> point;     // zeta(t), t in [0, 1]
  std::function<CVec(double)> velocity;  // zeta'(t)
  std::size_t samples = 512;             // density of the clearance scan
  double clearance = 1e-3;               // required distance to every hyperplane alpha = k
};

PathSpec reversed(const PathSpec& p);
// Min over sampled points and roots theta_i - theta_j of the distance from
// (zeta_i - zeta_j) to the nearest integer.
double wall_distance(const PathSpec& p);
double wall_distance(const CVec& zeta);

struct TransportResult {
  CMatrix matrix;
  std::size_t steps = 0;
  std::size_t rejected = 0;
  double error_estimate = 0.0;  // sum of accepted local error norms (absolute)
};

// Y' = F(t) Y, Y(0) = I on [0, 1]: Dormand-Prince 5(4) with PI step control.
// Mixed tolerance tol (1 + |Y|) per entry.  Throws NumericalBreakdown on step
// underflow, naming t.
TransportResult integrate_linear(const std::function<CMatrix(double)>& F, std::size_t dim, double tol);

// Transport of the connection along a path; checks clearance first.
TransportResult parallel_transport(const GlConnection& conn, const PathSpec& path, double tol);

struct MonodromyConfig {
  Rational lambda{1};   // A is multiplied by 1/lambda
  double tol = 1e-10;
  double offset = 0.1;  // imaginary push-off along the wall normal
};

// Affine A_{n-1} monodromy on a tensor product of gl_n evaluation modules.
class AffineMonodromy {
 public:
  AffineMonodromy(std::shared_ptr<const GlModule> module, std::vector<Rational> a, MonodromyConfig config = {});

  int n() const { return module_->n(); }
  int rank() const { return n() - 1; }
  const MonodromyConfig& config() const { return config_; }
  const GlConnection& connection() const { return conn_; }

  // zeta_k = (n-1-k)/(2(n-1)): the point z = (2^{n-1}, ..., 2, 1) with log_2 z
  // rescaled so that theta(zeta) = 1/2; interior of the fundamental alcove.
  CVec basepoint() const;
  // s_i on zeta; s_0 zeta = zeta - (theta(zeta) - 1) theta^vee.
  CVec affine_reflect(int i, const CVec& zeta) const;
  // Straight segment from basepoint to s_i(basepoint) plus i offset sin(pi t) n_i,
  // n_i the unit normal alpha_i^vee (i >= 1) or -theta^vee (i = 0).
  PathSpec generator_path(int i, double offset) const;

  // Lift of the finite part of s_i acting on the fiber: r_i for i >= 1 and
  // exp(f_theta) exp(-e_theta) exp(f_theta) for i = 0.
  CMatrix lift(int i) const;
  CMatrix lift_inverse(int i) const;

  TransportResult transport(const PathSpec& path) const;
  // G_i = lift(i)^{-1} M_i, an automorphism of the fiber at the basepoint.
  CMatrix generator(int i) const;
  CMatrix generator(int i, double offset) const;
  std::vector<CMatrix> generators() const;

  // m_ij of affine A_{n-1}; 0 for infinity.
  int braid_order(int i, int j) const;
  // |G_i G_j G_i ... - G_j G_i G_j ...| with m_ij factors each; 0 for i = j.
  double braid_residual(int i, int j) const;
  double braid_residual(int i, int j, const std::vector<CMatrix>& gens) const;
  // |M(reversed) M - I| for the generator path i.
  double inverse_path_residual(int i) const;
  // |M - I| around a small circle about the basepoint.
  double contractible_loop_residual() const;
  // |M_i(offset) - M_i(2 offset)|: homotopic pushes off the same wall.
  double homotopy_residual(int i) const;
  // |G_i - lift(i)^{-1}|.
  double scaling_residual(int i) const;

 private:
  std::shared_ptr<const GlModule> module_;
  GlConnection conn_;
  MonodromyConfig config_;
};

// Floating residual of the abelian test d - c dtheta around theta: 0 -> 2 pi i.
double abelian_loop_residual(Complex c, double tol);

}  // namespace trigcas
