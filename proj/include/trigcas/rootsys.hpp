// Root systems, Weyl groups, inversion sets and rank-2 root subsystems.
//
// Roots are stored as integer coordinate vectors in the basis of simple roots.
// Elements of the Cartan subalgebra (coweights) are stored by their values on
// the simple roots, c_j = alpha_j(v), so that fundamental coweights are the
// standard basis vectors.  Long roots have squared length 2.
#pragma once

#include "trigcas/algebra.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace trigcas {

using IntVec = std::vector<int>;
using RatVec = std::vector<Rational>;

struct WeylElement {
  std::vector<int> word;                 // reduced: w = s_word[0] s_word[1] ...
  std::vector<int> matrix;               // rank x rank, row-major; column j is w(alpha_j)
  std::vector<std::size_t> inversion_set;  // indices into positive_roots(): N(w)
  std::size_t length() const { return word.size(); }
};

class RootSystem {
 public:
  // "A1".."A4", "B2", "B3", "C3", "D4", "G2" (an optional underscore is accepted).
  static RootSystem build(const std::string& label);

  const std::string& label() const { return label_; }
  char family() const { return family_; }
  int rank() const { return rank_; }
  // a_ij = <alpha_i^vee, alpha_j>
  int cartan(int i, int j) const { return cartan_[static_cast<std::size_t>(i * rank_ + j)]; }
  const Rational& gram(int i, int j) const { return gram_[static_cast<std::size_t>(i * rank_ + j)]; }

  const std::vector<IntVec>& roots() const { return roots_; }
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  IntVec simple_root(int i) const;
  // Index into positive_roots(), or -1.
  int positive_index(const IntVec& root) const;
  bool is_root(const IntVec& v) const;
  static bool is_positive(const IntVec& v);
  static int height(const IntVec& v);
  static IntVec negate(const IntVec& v);
  static IntVec add(const IntVec& a, const IntVec& b);

  Rational inner(const IntVec& a, const IntVec& b) const;
  Rational inner(const RatVec& a, const RatVec& b) const;
  // <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)
  int pairing(const IntVec& beta, const IntVec& alpha) const;
  IntVec reflect(const IntVec& beta, const IntVec& alpha) const;
  IntVec simple_reflect(int i, const IntVec& beta) const;
  bool is_long(const IntVec& root) const;

  // Coweights.
  static Rational evaluate(const IntVec& weight, const RatVec& coweight);
  static Rational evaluate(const RatVec& weight, const RatVec& coweight);
  RatVec coroot(const IntVec& alpha) const;          // alpha^vee as coweight
  RatVec fundamental_coweight(int i) const;          // t^i
  RatVec fundamental_weight(int i) const;            // lambda_i in simple-root coordinates
  RatVec simple_reflect_coweight(int i, const RatVec& v) const;
  RatVec act_coweight(const WeylElement& w, const RatVec& v) const;
  // Basis of {v : alpha(v) = 0}.
  std::vector<RatVec> kernel_basis(const IntVec& alpha) const;

  // Weyl group.
  static std::size_t weyl_order_of(const std::string& label);
  std::size_t weyl_order() const;
  bool weyl_materialized() const { return !weyl_.empty(); }
  const std::vector<WeylElement>& weyl_group() const;
  WeylElement identity() const;
  WeylElement from_word(const std::vector<int>& word) const;
  WeylElement multiply(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  WeylElement longest_element() const;
  IntVec act(const WeylElement& w, const IntVec& v) const;
  // Index of w in weyl_group().
  std::size_t weyl_index(const WeylElement& w) const;

  std::string serialize() const;

 private:
  WeylElement make_element(std::vector<int> word, std::vector<int> matrix) const;
  void enumerate_weyl();

  std::string label_;
  char family_ = 'A';
  int rank_ = 0;
  std::vector<int> cartan_;
  std::vector<Rational> gram_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> positive_;
  std::map<IntVec, int> positive_lookup_;
  std::vector<WeylElement> weyl_;
  std::map<std::vector<int>, std::size_t> weyl_lookup_;
};

struct RankTwoSubsystem {
  std::vector<IntVec> roots;     // all of Psi
  std::vector<IntVec> positive;  // Psi_+
  IntVec simple1, simple2;       // simple roots of Psi_+
  std::string type_tag;          // "A1xA1", "A2", "B2", "G2"
  bool complete = false;
  bool contains(const IntVec& r) const;
};

std::vector<RankTwoSubsystem> enumerate_rank2_subsystems(const RootSystem& phi);

// Structure of the saturation quotient of the Z-span of Psi: invariant factors
// and the characters with trivial kernel (empty unless the group is cyclic).
struct ComponentGroup {
  std::vector<long> invariant_factors;
  long order = 1;
  std::vector<long> faithful_characters;  // j such that z -> exp(2 pi i j / order) is faithful
};
ComponentGroup component_group(const RankTwoSubsystem& psi);

// Complete rank-2 subsystems in which alpha is not simple.
std::vector<RankTwoSubsystem> r2_of(const RootSystem& phi, const IntVec& alpha);

struct InversionPart {
  RankTwoSubsystem subsystem;
  bool alpha_non_simple = false;            // subsystem belongs to R_2(alpha)
  std::vector<IntVec> intersection;         // N(w^{-1}) cap Psi
  std::vector<std::vector<int>> w_psi;      // matrix of w_Psi on the full root lattice, row-major rows
  std::vector<IntVec> w_psi_word;           // w_Psi as a word in reflections of Psi
};

// Parts are taken over every complete rank-2 subsystem containing alpha.
// The literal statement uses only those in R_2(alpha); it fails whenever
// N(w^{-1}) meets a complete subsystem in which alpha is simple.
struct InversionDecomposition {
  std::vector<IntVec> inversion_set;  // N(w^{-1})
  std::vector<InversionPart> parts;
  bool disjoint_union = false;        // R_2(alpha) parts partition N(w^{-1})
  bool all_nonempty = false;          // every R_2(alpha) part is nonempty
  bool witnesses_unique = false;      // each part is N_Psi(w_Psi^{-1}) for exactly one w_Psi
  bool full_disjoint_union = false;   // parts over all complete Psi containing alpha partition N(w^{-1})
  bool holds() const { return disjoint_union && all_nonempty && witnesses_unique; }
  bool holds_corrected() const { return full_disjoint_union && all_nonempty && witnesses_unique; }
};

// Throws Precondition unless w^{-1} alpha is simple.
InversionDecomposition decompose_inversion_set(const RootSystem& phi, const IntVec& alpha, const WeylElement& w);

// sum over alpha in Phi_+ cap w Phi_- of alpha(v) t_alpha, as (root, coefficient).
std::vector<std::pair<IntVec, Rational>> chamber_shift(const RootSystem& phi, const WeylElement& w, const RatVec& v);

// Two-form identity for eta_a = da/(e^a - 1), eta_{a,b} = da^db/(e^{a+b} - 1),
// evaluated on the direction pair (x, y).  Torus point given by the values
// u_k = alpha_k(u) of a complex log-coordinate.
Complex eta_identity_value(const RatVec& a, const RatVec& b, const std::vector<Complex>& u, const RatVec& x,
                           const RatVec& y);
// eta_{a,b} - eta_{a+b} ^ db at the same data.
Complex eta_eta_value(const RatVec& a, const RatVec& b, const std::vector<Complex>& u, const RatVec& x, const RatVec& y);
// Exact variant: the torus point is given by e^{alpha_k} = q_k, and a, b are integral.
Rational eta_identity_exact(const IntVec& a, const IntVec& b, const RatVec& q, const RatVec& x, const RatVec& y);

}  // namespace trigcas
