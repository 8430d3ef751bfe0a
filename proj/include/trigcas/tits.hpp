// Tits extensions of Weyl groups in explicit matrix models.
//
// Finite models: sl_n, n in {2,3}, on the sum of fundamental representations
// (C^2, resp. C^3 + Lambda^2 C^3).  Affine models: untwisted A_{n-1}^(1) in the
// vector representation over Laurent polynomials in z.  Group elements are
// matrices; equality is exact matrix equality.
#pragma once

#include "trigcas/algebra.hpp"

#include <string>
#include <vector>

namespace trigcas {

struct TitsModel {
  int n = 0;                              // sl_n
  bool affine = false;
  std::vector<int> labels;                // node labels: 1..n-1, or 0..n-1 if affine
  std::vector<std::vector<int>> cartan;   // indexed by position in labels
  std::vector<LoopMatrix> r;              // r[p] is the generator for labels[p]
  std::vector<int> marks;                 // theta^vee = sum m_i alpha_i^vee; affine only, indexed like labels

  std::size_t rank() const { return static_cast<std::size_t>(n - 1); }
  std::size_t dim() const { return r.front().rows(); }
  // Position of node label i in labels.
  std::size_t pos(int label) const;
  const LoopMatrix& gen(int label) const { return r[pos(label)]; }
  LoopMatrix gen_inverse(int label) const;
  // r_i^2
  LoopMatrix square(int label) const;
  // m_ij from a_ij a_ji; 0 stands for infinity.
  int braid_order(int i, int j) const;
};

// exp(e_i) exp(-f_i) exp(e_i) with e_i = E_{i,i+1}, f_i = E_{i+1,i}.
TitsModel finite_tits_model(int n);
// r_1..r_{n-1} as above; r_0 = exp(f_theta z) exp(-e_theta z^{-1}) exp(f_theta z)
// with e_theta = E_{1n}, f_theta = E_{n1}.
TitsModel affine_tits_model(int n);

// Lambda^2 of a gl_n matrix acting as a derivation, basis e_a ^ e_b (a < b) in
// lexicographic order.
QMatrix exterior_square_action(const QMatrix& x);

// Max |coefficient| of a - b.
Rational loop_residual(const LoopMatrix& a, const LoopMatrix& b);
LoopMatrix to_loop(const QMatrix& m);
LoopMatrix power(const LoopMatrix& m, int k);

struct TitsCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TitsReport {
  std::vector<TitsCheck> checks;
  bool ok() const;
  const TitsCheck* find(const std::string& name) const;
  void add(std::string name, bool pass, std::string detail = {});
  void append(const TitsReport& other);
};

// Relations braid1..braid4 for every admissible pair, and braid5 in affine models.
TitsReport tits_relations(const TitsModel& model);

// Order of the group generated by the given matrices; throws Precondition if it
// exceeds bound.
std::size_t generated_group_order(const std::vector<LoopMatrix>& gens, std::size_t bound);

// Z = <r_i^2>: order, injectivity and W-equivariance of Q^vee/2Q^vee -> Z,
// plus the highest weight sign characters in the finite models.
struct ZStructure {
  std::size_t order = 0;
  std::size_t expected = 0;         // 2^rank
  std::size_t group_order = 0;      // |<r_i>|, finite models only
  std::size_t group_expected = 0;   // |W| 2^rank, finite models only
  TitsReport report;
};
ZStructure z_structure(const TitsModel& model);

// Coroot section of the reduced affine Tits extension (affine models only).
// Coroots are given in simple coroot coordinates.
class CorootSection {
 public:
  explicit CorootSection(const TitsModel& affine);

  // tau^{theta^vee} = r_0 w r_i w^{-1}, where w alpha_i^vee = theta^vee.
  const LoopMatrix& tau() const { return tau_; }
  // Unit t with tau = diag((t z)^{-<eps_k, theta^vee>}).
  const Rational& unit() const { return t_; }
  bool tau_is_diagonal_monomial() const;
  // s(alpha_i^vee), i = 1..n-1, from conjugates of tau.
  const LoopMatrix& simple(int i) const { return simple_[static_cast<std::size_t>(i - 1)]; }
  // s(lambda) = prod_i s(alpha_i^vee)^{lambda_i}.
  LoopMatrix section(const std::vector<int>& lambda) const;
  // exp(x lambda) z^lambda = diag((t z)^{-<eps_k, lambda>}) with x = -ln t.
  LoopMatrix closed_form(const std::vector<int>& lambda) const;
  // s_j lambda in simple coroot coordinates.
  std::vector<int> reflect(int j, const std::vector<int>& lambda) const;

  // s(0) = I, closed form, multiplicativity and r_j s(lambda) r_j^{-1} = s(s_j lambda)
  // on the given lattice vectors.
  TitsReport checks(const std::vector<std::vector<int>>& lattice) const;

 private:
  const TitsModel* model_;
  LoopMatrix tau_;
  Rational t_{1};
  std::vector<LoopMatrix> simple_;
};

// Closing remarks.  sl_3: the canonical lift r_0 r_1 r_2 r_1 is not equivariant
// while the section is.  sl_2: r_0^2 r_1^2 = I in the reduced model, and a
// non-reduced model with an adjoined central sign satisfies braid2-braid4 but has
// r_0^2 r_1^2 != I and no equivariant lift of the coroot generator.
TitsReport remark_checks(const TitsModel& affine);

// Affine sl_2 with an adjoined sign: r_hat_0 = r_0 (+) [[0,1],[-1,0]], r_hat_1 = r_1 (+) I_2.
TitsModel nonreduced_sl2_model();

// All checks of the module for n in {2, 3}.
TitsReport tits_suite(int n);

}  // namespace trigcas
