#include "trigcas/connection.hpp"

#include <doctest.h>

#include <cmath>

using namespace trigcas;

namespace {

std::shared_ptr<const GlModule> module(int n, int m) { return std::make_shared<const GlModule>(n, m); }

std::vector<Rational> regular(int n, RationalSampler& rs) {
  for (;;) {
    std::vector<Rational> z;
    for (int i = 0; i < n; ++i) z.push_back(rs.next_nonzero(9, 4));
    try {
      GlConnection::require_regular(z);
      return z;
    } catch (const Error&) {
    }
  }
}

std::vector<Rational> direction(int n, RationalSampler& rs) {
  std::vector<Rational> X;
  for (int i = 0; i < n; ++i) X.push_back(rs.next());
  return X;
}

}  // namespace

TEST_CASE("regularity guard") {
  CHECK_THROWS_AS(GlConnection::require_regular({rat(1), rat(1)}), Error);
  CHECK_THROWS_AS(GlConnection::require_regular({rat(0), rat(1)}), Error);
  CHECK_NOTHROW(GlConnection::require_regular({rat(2), rat(1)}));
}

TEST_CASE("flatness and equivariance on the parameter grid") {
  RationalSampler rs(31);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    CAPTURE(n);
    CAPTURE(m);
    std::vector<Rational> a;
    for (int p = 0; p < m; ++p) a.push_back(rs.next());
    GlConnection conn(module(n, m), a);
    GlConnection mutant(module(n, m), a);
    mutant.set_mutant(true);
    Rational mut(0);
    for (int k = 0; k < 5; ++k) {
      const auto z = regular(n, rs);
      for (auto style : {FormStyle::Tau, FormStyle::Delta, FormStyle::RationalZ}) CHECK(conn.flatness_residual(style, z) == 0);
      for (int i = 0; i + 1 < n; ++i) {
        const auto e = conn.equivariance_residual(i, z);
        CHECK(e.kappa == 0);
        CHECK(e.tail == 0);
        CHECK(e.pointwise == 0);
      }
      const Rational r = mutant.flatness_residual(FormStyle::Tau, z);
      if (r > mut) mut = r;
    }
    CHECK(mut > 0);
  }
}

TEST_CASE("the three forms agree pointwise") {
  RationalSampler rs(37);
  const GlConnection conn(module(3, 2), {rat(1, 2), rat(-1)});
  for (int k = 0; k < 10; ++k) {
    const auto z = regular(3, rs);
    const auto X = direction(3, rs);
    const QMatrix tau = conn.coefficient(FormStyle::Tau, z, X);
    CHECK(conn.coefficient(FormStyle::Delta, z, X) == tau);
    CHECK(conn.coefficient(FormStyle::RationalZ, z, X) == tau);
  }
}

TEST_CASE("the complex coefficient matches the exact one at rational points") {
  RationalSampler rs(41);
  const GlConnection conn(module(2, 2), {rat(0), rat(1, 3)});
  for (int k = 0; k < 5; ++k) {
    const auto z = regular(2, rs);
    const auto X = direction(2, rs);
    const CMatrix exact = to_complex(conn.coefficient(FormStyle::Tau, z, X));
    std::vector<Complex> zc, Xc;
    for (int i = 0; i < 2; ++i) {
      zc.emplace_back(z[static_cast<std::size_t>(i)].get_d(), 0.0);
      Xc.emplace_back(X[static_cast<std::size_t>(i)].get_d(), 0.0);
    }
    CHECK(max_abs(conn.coefficient_complex(zc, Xc) - exact) < 1e-12);
  }
}

TEST_CASE("curvature of the scaled mutant is quadratic in the scale") {
  RationalSampler rs(43);
  const auto V = module(2, 2);
  GlConnection m1(V, {rat(1), rat(2)}), m2(V, {rat(1), rat(2)});
  m1.set_mutant(true);
  m2.set_mutant(true);
  m2.set_scale(2);
  const auto z = regular(2, rs);
  const Rational r1 = m1.flatness_residual(FormStyle::Tau, z);
  CHECK(r1 > 0);
  CHECK(m2.flatness_residual(FormStyle::Tau, z) == 4 * r1);
  // The unscaled connection stays flat for every scale.
  GlConnection c(V, {rat(1), rat(2)});
  c.set_scale(rat(1, 7));
  CHECK(c.flatness_residual(FormStyle::Tau, z) == 0);
}

TEST_CASE("sl_n restriction and the dynamical operators") {
  RationalSampler rs(47);
  for (auto [n, m] : std::vector<std::pair<int, int>>{{2, 1}, {2, 2}, {3, 2}}) {
    std::vector<Rational> a;
    for (int p = 0; p < m; ++p) a.push_back(rs.next());
    const GlConnection conn(module(n, m), a);
    for (int k = 0; k < 3; ++k) {
      const auto z = regular(n, rs);
      auto X = direction(n, rs);
      Rational tr(0);
      for (const auto& x : X) tr += x;
      X.back() -= tr;  // trace-free
      CHECK(conn.sl_restriction_residual(z, X).is_zero());
      CHECK(conn.tv_residual(z, X, rs.next_nonzero()).is_zero());
      CHECK(conn.tv_residual(z, X, rat(0)).is_zero());
    }
  }
}

TEST_CASE("chamber change leaves the coefficient unchanged") {
  RationalSampler rs(53);
  for (int n : {2, 3}) {
    const RootSystem phi = RootSystem::build("A" + std::to_string(n - 1));
    const GlConnection conn(module(n, 2), {rat(1, 3), rat(-1, 2)});
    for (int k = 0; k < 10; ++k) {
      const auto z = regular(n, rs);
      const auto X = direction(n, rs);
      const QMatrix base = conn.coefficient(FormStyle::Tau, z, X);
      CHECK(conn.coefficient_chamber(phi, phi.identity(), z, X) == base);
      CHECK(conn.coefficient_chamber(phi, phi.from_word({0}), z, X) == base);
      CHECK(conn.coefficient_chamber(phi, phi.longest_element(), z, X) == base);
    }
  }
}

TEST_CASE("generic relations hold for t = kappa on sl_3 and sl_4") {
  for (int n : {3, 4}) {
    const RootSystem phi = RootSystem::build("A" + std::to_string(n - 1));
    const GlConnection conn(module(n, 2), {rat(2, 5), rat(-1, 3)});
    const auto rep = generic_relation_suite(sl_connection_data(phi, conn));
    CHECK(rep.ok());
    for (const char* name : {"tt", "tau tau", "t tau", "t delta", "t^w t", "equiv1", "equiv2"}) {
      CAPTURE(name);
      CHECK(rep.find(name) != nullptr);
    }
  }
}

TEST_CASE("generic relations detect the mutant") {
  const RootSystem phi = RootSystem::build("A2");
  GlConnection conn(module(3, 2), {rat(2, 5), rat(-1, 3)});
  conn.set_mutant(true);
  CHECK_FALSE(generic_relation_suite(sl_connection_data(phi, conn)).ok());
}
