#include "trigcas/algebra.hpp"

#include <doctest.h>

#include <cmath>

using namespace trigcas;

TEST_CASE("rationals print in lowest terms") {
  CHECK(to_string(rat(6, -4)) == "-3/2");
  CHECK(to_string(rat(0)) == "0/1");
  CHECK(to_string(rat(5)) == "5/1");
  CHECK(abs(rat(-2, 3)) == rat(2, 3));
}

TEST_CASE("Gaussian rationals form a field") {
  RationalSampler rs(3);
  for (int k = 0; k < 20; ++k) {
    const Gaussian g{rs.next_nonzero(), rs.next()};
    CHECK(g * g.inverse() == Gaussian(Rational(1)));
    CHECK((g * g.conj()).im == 0);
    CHECK((g * g.conj()).re == g.norm2());
  }
  CHECK(Gaussian::i_unit() * Gaussian::i_unit() == Gaussian(Rational(-1)));
}

TEST_CASE("Laurent polynomials") {
  const Laurent z = Laurent::z(), zi = Laurent::z(-1);
  CHECK(z * zi == Laurent(Rational(1)));
  const Laurent p = z + Laurent(rat(2)) + Laurent::monomial(rat(-3), -2);
  CHECK(p.coefficient(1) == 1);
  CHECK(p.coefficient(0) == 2);
  CHECK(p.coefficient(-2) == -3);
  CHECK(p.coefficient(5) == 0);
  CHECK((p - p).is_zero());
  CHECK(Laurent::monomial(rat(2, 3), 4).inverse() == Laurent::monomial(rat(3, 2), -4));
  CHECK_THROWS_AS((void)p.inverse(), Error);
  // (1 + z)(1 - z) = 1 - z^2
  CHECK((Laurent(Rational(1)) + z) * (Laurent(Rational(1)) - z) == Laurent(Rational(1)) - Laurent::z(2));
}

TEST_CASE("exact inverse, rank and nullspace") {
  RationalSampler rs(11);
  for (int trial = 0; trial < 10; ++trial) {
    QMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = rs.next();
    try {
      const QMatrix inv = inverse(m);
      CHECK(m * inv == QMatrix::identity(4));
      CHECK(inv * m == QMatrix::identity(4));
      CHECK(rank(m) == 4);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Singular);
      CHECK(rank(m) < 4);
    }
  }
  // Rank 2 by construction: third row = first + second.
  QMatrix s(3, 3, {rat(1), rat(2), rat(3), rat(0), rat(1), rat(-1), rat(1), rat(3), rat(2)});
  CHECK(rank(s) == 2);
  const auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  for (const auto& x : s.apply(ns[0])) CHECK(x == 0);
  CHECK_THROWS_AS((void)inverse(s), Error);
}

TEST_CASE("nilpotent exponential equals the truncated series") {
  // Strictly upper triangular N: exp(N) = 1 + N + N^2/2.
  QMatrix n(3, 3, {rat(0), rat(2), rat(5), rat(0), rat(0), rat(-3), rat(0), rat(0), rat(0)});
  QMatrix expected = QMatrix::identity(3) + n;
  expected.add_scaled(rat(1, 2), n * n);
  CHECK(nilpotent_exp(n) == expected);
  // exp(N) exp(-N) = 1
  CHECK(nilpotent_exp(n) * nilpotent_exp(-n) == QMatrix::identity(3));
  CHECK_THROWS_AS((void)nilpotent_exp(QMatrix::identity(2)), Error);
}

TEST_CASE("Kronecker products and commutators") {
  const QMatrix a(2, 2, {rat(1), rat(2), rat(3), rat(4)});
  const QMatrix b(2, 2, {rat(0), rat(1), rat(1), rat(0)});
  const QMatrix k = kron(a, b);
  // (a x b)_{(i,k),(j,l)} = a_ij b_kl
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t p = 0; p < 2; ++p)
        for (std::size_t q = 0; q < 2; ++q) CHECK(k(2 * i + p, 2 * j + q) == a(i, j) * b(p, q));
  CHECK(commutator(a, a).is_zero());
  CHECK(commutator(a, b) == a * b - b * a);
  CHECK(max_abs(a - b) == 4);
}

TEST_CASE("loop matrices: determinant and inverse") {
  const Laurent z = Laurent::z();
  LoopMatrix r0(2, 2);
  r0(0, 1) = -Laurent::z(-1);
  r0(1, 0) = z;
  CHECK(loop_determinant(r0) == Laurent(Rational(1)));
  CHECK(r0 * loop_inverse(r0) == LoopMatrix::identity(2));
}

TEST_CASE("complex eigenvalues of a rotation") {
  CMatrix rot(2, 2);
  rot(0, 1) = 1.0;
  rot(1, 0) = -1.0;
  auto ev = complex_eigenvalues(rot);
  REQUIRE(ev.size() == 2);
  for (const auto& e : ev) {
    CHECK(std::abs(e.real()) < 1e-14);
    CHECK(std::abs(std::abs(e.imag()) - 1.0) < 1e-14);
  }
  const CMatrix inv = complex_inverse(rot);
  const CMatrix prod = rot * inv;
  CHECK(std::abs(prod(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(prod(0, 1)) < 1e-14);
}

TEST_CASE("sampler is determined by its seed") {
  RationalSampler a(42), b(42), c(43);
  bool differs = false;
  for (int k = 0; k < 50; ++k) {
    const Rational x = a.next(), y = b.next(), w = c.next();
    CHECK(x == y);
    if (x != w) differs = true;
    CHECK(abs(x) <= 9);
  }
  CHECK(differs);
  for (int k = 0; k < 50; ++k) CHECK(a.next_nonzero() != 0);
}
