#include "trigcas/connection.hpp"
#include "trigcas/yangian.hpp"

#include <doctest.h>

using namespace trigcas;

namespace {

std::shared_ptr<const GlModule> module(int n, int m) { return std::make_shared<const GlModule>(n, m); }

// Independent realization: Delta t_ij(u) = sum_k t_ik(u) (x) t_kj(u) with
// ev_a(t_ij^{(r)}) = delta_{r0} delta_ij + E_ij a^{r-1}, for m = 2.
QMatrix two_factor_t(int n, int i, int j, int r, const Rational& a0, const Rational& a1) {
  auto ev = [n](int p, int q, int s, const Rational& a) {
    QMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    if (s == 0) {
      if (p == q) x = QMatrix::identity(static_cast<std::size_t>(n));
      return x;
    }
    Rational c = 1;
    for (int k = 1; k < s; ++k) c *= a;
    x(static_cast<std::size_t>(p), static_cast<std::size_t>(q)) = c;
    return x;
  };
  QMatrix out(static_cast<std::size_t>(n * n), static_cast<std::size_t>(n * n));
  for (int k = 0; k < n; ++k)
    for (int p = 0; p <= r; ++p) out += kron(ev(i, k, p, a0), ev(k, j, r - p, a1));
  return out;
}

}  // namespace

TEST_CASE("GlModule: Leibniz action and gl_n relations") {
  const GlModule V(3, 2);
  CHECK(V.dim() == 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          QMatrix rhs(V.dim(), V.dim());
          if (j == k) rhs += V.E(i, l);
          if (l == i) rhs -= V.E(k, j);
          CHECK(commutator(V.E(i, j), V.E(k, l)) == rhs);
        }
  CHECK(V.E(0, 1) == V.E_slot(0, 1, 0) + V.E_slot(0, 1, 1));
  CHECK(V.index_of(V.digits(5)) == 5);
}

TEST_CASE("E_ij E_ji - E_ii = (kappa - E_ii - E_jj)/2") {
  const GlModule V(3, 2);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      QMatrix rhs = V.kappa(i, j) - V.E(i, i) - V.E(j, j);
      rhs.scale(rat(1, 2));
      CHECK(V.E(i, j) * V.E(j, i) - V.E(i, i) == rhs);
    }
}

TEST_CASE("Tits operators conjugate diagonal matrices by the transposition") {
  const GlModule V(3, 2);
  for (int i = 0; i < 2; ++i) {
    const QMatrix r = V.tits_operator(i), ri = V.tits_operator_inverse(i);
    CHECK(r * ri == V.identity());
    for (int k = 0; k < 3; ++k) {
      const int sk = k == i ? i + 1 : (k == i + 1 ? i : k);
      CHECK(r * V.E(k, k) * ri == V.E(sk, sk));
    }
  }
  // On C^2: exp(e) exp(-f) exp(e) = [[0,1],[-1,0]]
  CHECK(vector_tits_root(2, 0, 1) == QMatrix(2, 2, {rat(0), rat(1), rat(-1), rat(0)}));
}

TEST_CASE("smallness") {
  CHECK(GlModule(2, 2).is_small().small);
  CHECK(GlModule(3, 3).is_small().small);
  const auto big = GlModule(2, 4).is_small();
  CHECK_FALSE(big.small);
  CHECK(big.root_a >= 0);
  CHECK(GlModule(3, 3).zero_weight_basis().size() == 6);
  CHECK(GlModule(2, 4).zero_weight_basis().size() == 6);
}

TEST_CASE("evaluation module: t_12^(2) at a = 3 is 3 E_12") {
  const YangianRealizer y(module(2, 1), {rat(3)});
  CHECK(y.t(0, 1, 2) == 3 * y.module().E(0, 1));
  CHECK(y.t(0, 0, 0) == y.module().identity());
  CHECK(y.t(0, 1, 0).is_zero());
  CHECK(y.t(0, 1, 1) == y.module().E(0, 1));
}

TEST_CASE("coproduct realization matches an explicit two-factor computation") {
  RationalSampler rs(17);
  for (int n : {2, 3}) {
    const Rational a0 = rs.next(), a1 = rs.next();
    const YangianRealizer y(module(n, 2), {a0, a1});
    for (int r = 0; r <= 3; ++r)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(y.t(i, j, r) == two_factor_t(n, i, j, r, a0, a1));
  }
}

TEST_CASE("translation: t_12^(2) shifts by v E_12") {
  const Rational v = rat(5, 7);
  const YangianRealizer y0(module(2, 1), {rat(1, 3)}), y1(module(2, 1), {rat(1, 3) + v});
  CHECK(y1.t(0, 1, 2) - y0.t(0, 1, 2) == v * y0.module().E(0, 1));
}

TEST_CASE("RTT, Gelfand-Zetlin and D_i identities vanish exactly") {
  RationalSampler rs(23);
  for (int n : {2, 3})
    for (int m : {1, 2, 3}) {
      CAPTURE(n);
      CAPTURE(m);
      std::vector<Rational> a;
      for (int p = 0; p < m; ++p) a.push_back(rs.next());
      const YangianRealizer y(module(n, m), a);
      const auto rtt = rtt_suite(y, 2);
      CHECK(rtt.max_residual == 0);
      CHECK(rtt.checks > 0);
      CHECK(gz_commutativity(y) == 0);
      CHECK(t1_commutativity(y) == 0);
      const auto di = di_identity_suite(y);
      CHECK(di.ok());
      CHECK(di.commute == 0);
      CHECK(di.shift == 0);
      CHECK(di.bold_invariant == 0);
      CHECK(translation_shift_residual(y, rs.next_nonzero()) == 0);
      CHECK(sl_difference_residual(y) == 0);
    }
}

TEST_CASE("n = 2: Ad(r) D_1 - D_2 = kappa and D_1 - D_2 = -2 T_1 + t^2 + t") {
  const YangianRealizer y(module(2, 2), {rat(1, 2), rat(-2, 3)});
  const GlModule& V = y.module();
  const QMatrix r = V.tits_operator(0), ri = V.tits_operator_inverse(0);
  CHECK(r * y.D(0) * ri - y.D(1) == V.kappa(0, 1));
  const QMatrix t = V.E(0, 0) - V.E(1, 1);
  CHECK(y.D(0) - y.D(1) == -2 * y.T1(0) + t * t + t);
}
