#include "trigcas/qkz.hpp"

#include <doctest.h>

using namespace trigcas;

namespace {

std::shared_ptr<const GlModule> module(int n, int m) { return std::make_shared<const GlModule>(n, m); }

std::vector<Rational> good_a(const QkzSystem& q, int m, RationalSampler& rs) {
  for (;;) {
    std::vector<Rational> a;
    for (int p = 0; p < m; ++p) a.push_back(rs.next(20, 3));
    try {
      q.require_nonsingular(a);
      return a;
    } catch (const Error&) {
    }
  }
}

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

}  // namespace

TEST_CASE("Yang's R-matrix is 1 - P/u") {
  const GlModule V(2, 2);
  const Rational u = rat(3, 5);
  QMatrix expected = V.identity();
  expected.add_scaled(-1 / u, V.swap(0, 1));
  CHECK(yang_R(V, 0, 1, u) == expected);
  CHECK_THROWS_AS(yang_R(V, 0, 1, rat(0)), Error);
}

TEST_CASE("QYBE and unitarity") {
  RationalSampler rs(61);
  for (int n : {2, 3})
    for (int k = 0; k < 5; ++k) {
      const Rational u = rs.next_nonzero(), v = rs.next_nonzero();
      if (u + v == 0) continue;
      CHECK(qybe_residual(n, u, v) == 0);
      CHECK(unitarity_residual(n, u) == 0);
    }
}

TEST_CASE("singular parameters are rejected") {
  const QkzSystem q(module(2, 2), rat(1, 2));
  CHECK_THROWS_AS(q.require_nonsingular({rat(0), rat(0)}), Error);
  CHECK_THROWS_AS(q.require_nonsingular({rat(1), rat(0)}), Error);
  CHECK_NOTHROW(q.require_nonsingular({rat(1, 3), rat(0)}));
}

TEST_CASE("qKZ lemmas and the bispectral identity vanish exactly") {
  RationalSampler rs(67);
  for (int m : {2, 3})
    for (int s = 0; s < 5; ++s) {
      CAPTURE(m);
      const Rational kappa = rs.next_nonzero(9, 4);
      const QkzSystem q(module(2, m), kappa);
      const auto a = good_a(q, m, rs);
      const auto z = regular(2, rs);
      const std::vector<Rational> X{rs.next(), rs.next()};
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) CHECK(q.consistency_residual(i, j, z, a) == 0);
        CHECK(q.product_lemma_residual(i, z, a) == 0);
        CHECK(q.cross_diff_residual(i, z, X, a) == 0);
        CHECK(q.commutation_lemma_residual(i, z, X, a) == 0);
        CHECK(q.bispectral_residual(i, z, X, a) == 0);
      }
      // Atilde for the last factor is d_0 ... d_{m-1}, hence diagonal.
      CHECK(q.A_tilde(m - 1, z, a).is_diagonal());
    }
}

TEST_CASE("the unmatched convention breaks the commutation lemma") {
  RationalSampler rs(71);
  const QkzSystem lit(module(2, 2), rat(1, 2), QkzConvention::Literal);
  Rational worst(0);
  for (int s = 0; s < 5; ++s) {
    const auto a = good_a(lit, 2, rs);
    const auto z = regular(2, rs);
    const std::vector<Rational> X{rs.next_nonzero(), rs.next()};
    const Rational r = lit.commutation_lemma_residual(0, z, X, a);
    if (r > worst) worst = r;
  }
  CHECK(worst > 0);
}

TEST_CASE("composed qKZ operators act by Atilde^-1 and a total shift") {
  RationalSampler rs(73);
  for (int m : {2, 3}) {
    const Rational kappa = rat(2, 3);
    const QkzSystem q(module(2, m), kappa);
    const auto z = regular(2, rs);
    const std::size_t dim = q.module().dim();
    // Polynomial test section f(a)_k = (k+1) a_0 + a_{m-1}^2 - k.
    QkzSystem::Section f = [dim, m](const std::vector<Rational>& a) {
      std::vector<Rational> v(dim);
      for (std::size_t k = 0; k < dim; ++k)
        v[k] = Rational(static_cast<long>(k + 1)) * a[0] + a[static_cast<std::size_t>(m - 1)] * a[static_cast<std::size_t>(m - 1)] - Rational(static_cast<long>(k));
      return v;
    };
    for (int i = 0; i < m; ++i) {
      QkzSystem::Section g = f;
      for (int j = i; j >= 0; --j) g = q.apply_TT(j, z, g);
      const auto a = good_a(q, m, rs);
      const auto lhs = g(a);
      const auto rhs = mat_vec(inverse(q.A_tilde(i, z, a)), f(q.shifted(a, i)));
      CHECK(lhs == rhs);
    }
  }
}
