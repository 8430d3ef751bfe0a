#include "trigcas/daha.hpp"

#include <doctest.h>

using namespace trigcas;

TEST_CASE("induced modules satisfy the dAHA relations") {
  RationalSampler rs(79);
  for (const std::string label : {"A2", "B2", "G2", "A3", "B3"}) {
    CAPTURE(label);
    const RootSystem phi = RootSystem::build(label);
    RatVec lambda;
    for (int j = 0; j < phi.rank(); ++j) lambda.push_back(rs.next());
    const auto k = k_by_length(phi, rs.next_nonzero(), rs.next_nonzero());
    const DahaModule mod = induced_module(phi, k, lambda);
    CHECK(mod.dim() == phi.weyl_order());
    CHECK(daha_relations(mod).ok());
    const auto w = equivalence_witness(mod);
    CHECK(w.link == 0);
    CHECK(w.daha == 0);
    CHECK(w.equiv2 == 0);
    CHECK(generic_relation_suite(mod.connection_data()).ok());
    // k is constant on W-orbits.
    for (const auto& a : phi.positive_roots())
      for (int i = 0; i < phi.rank(); ++i) {
        const IntVec b = phi.simple_reflect(i, a);
        if (RootSystem::is_positive(b)) CHECK(mod.k_alpha(a) == mod.k_alpha(b));
      }
  }
}

TEST_CASE("a perturbed x breaks both the dAHA relation and equiv2") {
  const RootSystem phi = RootSystem::build("B2");
  const DahaModule mod = perturbed(induced_module(phi, k_by_length(phi, rat(1), rat(2)), {rat(1, 2), rat(1, 3)}));
  const auto w = equivalence_witness(mod);
  CHECK(w.link == 0);
  CHECK(w.daha > 0);
  CHECK(w.equiv2 > 0);
  CHECK_FALSE(generic_relation_suite(mod.connection_data()).ok());
}

TEST_CASE("left multiplication is a representation of W") {
  const RootSystem phi = RootSystem::build("G2");
  for (const auto& g : phi.weyl_group())
    for (const auto& h : phi.weyl_group())
      CHECK(left_multiplication(phi, g) * left_multiplication(phi, h) == left_multiplication(phi, phi.multiply(g, h)));
}

TEST_CASE("zero weight spaces of (C^n)^n") {
  RationalSampler rs(83);
  for (int n : {2, 3}) {
    CAPTURE(n);
    const RootSystem phi = RootSystem::build("A" + std::to_string(n - 1));
    auto V = std::make_shared<const GlModule>(n, n);
    std::vector<Rational> a;
    while (static_cast<int>(a.size()) < n) {
      const Rational x = rs.next(9, 2);
      if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
    }
    const ZeroWeightDaha zd(phi, V, a);
    CHECK(daha_relations(zd.module()).ok());
    CHECK(zd.y_match_residual() == 0);
    CHECK(zd.lemma_residual() == 0);
    for (int s = 0; s < 3; ++s) {
      std::vector<Rational> z;
      while (static_cast<int>(z.size()) < n) {
        const Rational x = rs.next_nonzero(9, 4);
        if (std::find(z.begin(), z.end(), x) == z.end()) z.push_back(x);
      }
      RatVec c;
      for (int j = 0; j + 1 < n; ++j) c.push_back(rs.next());
      CHECK(zd.akz_equality_residual(z, ZeroWeightDaha::diagonal_of(c, n)).is_zero());
    }
    const auto ind = induced_module(phi, std::vector<Rational>(phi.positive_roots().size(), rat(-2)), induced_weight(a));
    const auto inter = find_intertwiner(ind, zd.module());
    REQUIRE(inter.exists);
    // Independent verification of the intertwining property.
    const QMatrix& P = inter.intertwiner;
    for (int i = 0; i < phi.rank(); ++i) {
      CHECK(P * ind.s[static_cast<std::size_t>(i)] == zd.module().s[static_cast<std::size_t>(i)] * P);
      CHECK(P * ind.x_basis[static_cast<std::size_t>(i)] == zd.module().x_basis[static_cast<std::size_t>(i)] * P);
    }
    CHECK(rank(P) == P.rows());
  }
}

TEST_CASE("coweight coordinates round trip") {
  const RatVec c{rat(1, 2), rat(-3)};
  CHECK(ZeroWeightDaha::coweight_of(ZeroWeightDaha::diagonal_of(c, 3)) == c);
}

TEST_CASE("the kappa lemma needs a small module") {
  const GlModule big(2, 4);
  CHECK_THROWS_AS(big.lemma_V0_residual(0, 1), Error);
  CHECK_FALSE(big.lemma_V0_residual(0, 1, false).is_zero());
  CHECK(GlModule(2, 2).lemma_V0_residual(0, 1).is_zero());
}
