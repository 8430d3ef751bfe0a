#include "trigcas/monodromy.hpp"

#include <doctest.h>

#include <cmath>

using namespace trigcas;

namespace {

std::shared_ptr<const GlModule> module(int n, int m) { return std::make_shared<const GlModule>(n, m); }

const std::vector<Rational> kA{rat(0), rat(1, 3)};

}  // namespace

TEST_CASE("integrator reproduces matrix exponentials") {
  // Y' = diag(a, b) Y  ->  diag(e^a, e^b)
  const Complex a(0.3, 1.0), b(-0.7, 2.0);
  const auto diag = integrate_linear(
      [&](double) {
        CMatrix f(2, 2);
        f(0, 0) = a;
        f(1, 1) = b;
        return f;
      },
      2, 1e-12);
  CHECK(std::abs(diag.matrix(0, 0) - std::exp(a)) < 1e-10);
  CHECK(std::abs(diag.matrix(1, 1) - std::exp(b)) < 1e-10);
  CHECK(std::abs(diag.matrix(0, 1)) < 1e-14);
  // Y' = w [[0,1],[-1,0]] Y  ->  rotation by w
  const double w = 5.0;
  const auto rot = integrate_linear(
      [&](double) {
        CMatrix f(2, 2);
        f(0, 1) = w;
        f(1, 0) = -w;
        return f;
      },
      2, 1e-12);
  CHECK(std::abs(rot.matrix(0, 0) - std::cos(w)) < 1e-10);
  CHECK(std::abs(rot.matrix(0, 1) - std::sin(w)) < 1e-10);
  CHECK(rot.steps > 0);
  // Time-dependent scalar: Y' = 2t Y  ->  e
  const auto poly = integrate_linear(
      [](double t) {
        CMatrix f(1, 1);
        f(0, 0) = 2.0 * t;
        return f;
      },
      1, 1e-12);
  CHECK(std::abs(poly.matrix(0, 0) - std::exp(1.0)) < 1e-10);
}

TEST_CASE("integrator reports step underflow") {
  const auto f = [](double t) {
    CMatrix m(1, 1);
    m(0, 0) = Complex(0.0, 1.0) / ((t - 0.5) * (t - 0.5));
    return m;
  };
  try {
    (void)integrate_linear(f, 1, 1e-10);
    FAIL("expected a numerical breakdown");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NumericalBreakdown);
  }
}

TEST_CASE("transport refuses paths that touch a root hypertorus") {
  const GlConnection conn(module(2, 1), {rat(0)});
  PathSpec p;
  p.point = [](double t) { return CVec{Complex(t, 0.0), Complex(1.0 - t, 0.0)}; };
  p.velocity = [](double) { return CVec{Complex(1.0, 0.0), Complex(-1.0, 0.0)}; };
  CHECK(wall_distance(p) < 1e-3);
  try {
    (void)parallel_transport(conn, p, 1e-10);
    FAIL("expected a numerical breakdown");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NumericalBreakdown);
  }
}

TEST_CASE("abelian loop") {
  CHECK(abelian_loop_residual(Complex(0.37, 0.1), 1e-10) < 1e-9);
  CHECK(abelian_loop_residual(Complex(-1.5, 0.0), 1e-10) < 1e-9);
}

TEST_CASE("affine geometry") {
  const AffineMonodromy mono(module(3, 2), kA);
  const CVec z = mono.basepoint();
  CHECK(std::abs(z[0] - 0.5) < 1e-15);
  CHECK(std::abs(z[1] - 0.25) < 1e-15);
  CHECK(std::abs(z[2]) < 1e-15);
  for (int i = 0; i < 3; ++i) {
    const CVec back = mono.affine_reflect(i, mono.affine_reflect(i, z));
    for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(back[k] - z[k]) < 1e-14);
    CHECK(wall_distance(mono.generator_path(i, 0.1)) > 1e-2);
  }
  CHECK(mono.braid_order(0, 1) == 3);
  CHECK(mono.braid_order(1, 2) == 3);
  const AffineMonodromy mono2(module(2, 2), kA);
  CHECK(mono2.braid_order(0, 1) == 0);
}

TEST_CASE("Tits lifts are the finite parts of the affine reflections") {
  const AffineMonodromy mono(module(3, 2), kA);
  for (int i = 0; i < 3; ++i) {
    const CMatrix p = mono.lift(i) * mono.lift_inverse(i);
    CHECK(max_abs(p - CMatrix::identity(p.rows())) < 1e-14);
  }
}

TEST_CASE("monodromy of affine A2 on (C^3)^2") {
  const AffineMonodromy mono(module(3, 2), kA);
  const auto gens = mono.generators();
  REQUIRE(gens.size() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(mono.braid_residual(i, j, gens) <= 1e-6);
  for (int i = 0; i < 3; ++i) {
    CHECK(mono.inverse_path_residual(i) <= 1e-9);
    CHECK(mono.homotopy_residual(i) <= 1e-9);
    for (const auto& e : complex_eigenvalues(gens[static_cast<std::size_t>(i)])) CHECK(std::abs(e) > 1e-6);
  }
  CHECK(mono.contractible_loop_residual() <= 1e-9);
}

TEST_CASE("Liouville: det of the transport is exp of the integrated trace") {
  const AffineMonodromy mono(module(3, 2), kA);
  const PathSpec path = mono.generator_path(1, 0.1);
  const CMatrix M = mono.transport(path).matrix;
  Complex det(1.0, 0.0);
  for (const auto& e : complex_eigenvalues(M)) det *= e;
  const auto tr = integrate_linear(
      [&](double t) {
        const CVec p = path.point(t), v = path.velocity(t);
        std::vector<Complex> z, X;
        for (std::size_t k = 0; k < p.size(); ++k) {
          z.push_back(std::exp(Complex(0.0, 2.0 * M_PI) * p[k]));
          X.push_back(Complex(0.0, 2.0 * M_PI) * v[k]);
        }
        const CMatrix A = mono.connection().coefficient_complex(z, X);
        CMatrix s(1, 1);
        for (std::size_t k = 0; k < A.rows(); ++k) s(0, 0) += A(k, k);
        return s;
      },
      1, 1e-12);
  CHECK(std::abs(det - tr.matrix(0, 0)) <= 1e-7 * std::abs(det));
}

TEST_CASE("non-integral scaling: braid relations hold and the wrong-side push-off breaks them") {
  MonodromyConfig cfg;
  cfg.lambda = 3;
  const AffineMonodromy mono(module(3, 2), kA, cfg);
  auto gens = mono.generators();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(mono.braid_residual(i, j, gens) <= 1e-6);
  gens[0] = mono.generator(0, -cfg.offset);
  CHECK(mono.braid_residual(0, 1, gens) > 1e-3);
}

TEST_CASE("the Tits lift alone does not satisfy the monodromy braid relation") {
  const AffineMonodromy mono(module(3, 2), kA);
  auto gens = mono.generators();
  gens[1] = mono.lift_inverse(1);
  CHECK(mono.braid_residual(0, 1, gens) > 1e-3);
}

TEST_CASE("distance to the Tits lift decays like 1/lambda") {
  MonodromyConfig c3, c4;
  c3.lambda = 1000;
  c4.lambda = 10000;
  const AffineMonodromy m3(module(3, 2), kA, c3), m4(module(3, 2), kA, c4);
  for (int i = 0; i < 3; ++i) {
    const double r3 = m3.scaling_residual(i), r4 = m4.scaling_residual(i);
    CHECK(r4 < r3);
    CHECK(r3 / r4 == doctest::Approx(10.0).epsilon(0.05));
  }
}
