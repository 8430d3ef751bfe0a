// gl_n Yangian elements realized on tensor products of evaluation modules.
//
// hbar = 1.  Indices are 0-based: t(i, j, r) is t_{i+1, j+1}^{(r)}.  The
// realization is ev_{a_1} (x) ... (x) ev_{a_m} composed with the iterated
// coproduct, with ev_a(t_ij^{(r)}) = delta_{r0} delta_ij + E_ij a^{r-1}.
#pragma once

#include "trigcas/glrep.hpp"

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <tuple>

namespace trigcas {

enum class SymbolKind { T, H2, D, Delta, Dtilde, T0, T1, BoldD, Casimir, DMutant };

struct YangianSymbol {
  SymbolKind kind = SymbolKind::T;
  int i = 0, j = 0, r = 0;
  friend bool operator<(const YangianSymbol& x, const YangianSymbol& y) {
    return std::tie(x.kind, x.i, x.j, x.r) < std::tie(y.kind, y.i, y.j, y.r);
  }
};

std::string to_string(const YangianSymbol& s);

class YangianRealizer {
 public:
  YangianRealizer(std::shared_ptr<const GlModule> module, std::vector<Rational> a);

  const GlModule& module() const { return *module_; }
  const std::vector<Rational>& params() const { return a_; }
  int n() const { return module_->n(); }

  // Memoized; safe for concurrent callers.
  QMatrix realize(const YangianSymbol& s) const;

  QMatrix t(int i, int j, int r) const { return realize({SymbolKind::T, i, j, r}); }
  // h_i^{(2)} = t_ii^{(2)} - sum_{j<i} E_ij E_ji
  QMatrix h2(int i) const { return realize({SymbolKind::H2, i, 0, 0}); }
  // D_i = 2 t_ii^{(2)} - sum_{j<i} kappa_{ji} - E_ii^2
  QMatrix D(int i) const { return realize({SymbolKind::D, i, 0, 0}); }
  // Delta_i = 2 t_ii^{(2)} - (1/2) sum_{j != i} kappa_{ij} - E_ii^2
  QMatrix Delta(int i) const { return realize({SymbolKind::Delta, i, 0, 0}); }
  // Dtilde_i = 2 t_ii^{(2)} - sum_{j != i} kappa_{ij} - E_ii^2
  QMatrix Dtilde(int i) const { return realize({SymbolKind::Dtilde, i, 0, 0}); }
  // sl_n generators, 0 <= i <= n-2.
  QMatrix T0(int i) const { return realize({SymbolKind::T0, i, 0, 0}); }
  QMatrix T1(int i) const { return realize({SymbolKind::T1, i, 0, 0}); }
  QMatrix bold_D() const { return realize({SymbolKind::BoldD, 0, 0, 0}); }
  // C_{gl_n} = sum_{i<j} kappa_{ij} + sum_i E_ii^2
  QMatrix casimir() const { return realize({SymbolKind::Casimir, 0, 0, 0}); }
  // Negative control: D_i with every kappa-sum dropped, 2 t_ii^{(2)} - E_ii^2.
  QMatrix D_mutant(int i) const { return realize({SymbolKind::DMutant, i, 0, 0}); }

  // T(u)_1 = sum_i lambda_i(u) T_{i,1} for a trace-free diagonal u (length n).
  QMatrix T_of(const std::vector<Rational>& u) const;
  // J(u) = T(u)_1 + (1/4) sum_{beta > 0} beta(u) kappa_beta - (1/2) sum_i lambda_i(u) t_i^2.
  QMatrix J_of(const std::vector<Rational>& u) const;
  // D(u) = sum_k u_k D_k.
  QMatrix D_of(const std::vector<Rational>& u) const;

 private:
  QMatrix compute(const YangianSymbol& s) const;
  void ensure_t(int r) const;
  void check(int i) const;

  std::shared_ptr<const GlModule> module_;
  std::vector<Rational> a_;
  mutable std::shared_mutex mutex_;
  mutable std::map<YangianSymbol, QMatrix> cache_;
  // t_table_[r][i*n+j], filled up to t_max_.
  mutable std::vector<std::vector<QMatrix>> t_table_;
};

// Fundamental weight lambda_i(u) = u_0 + ... + u_i of a diagonal u (0-based i <= n-2).
Rational fundamental_weight_value(const std::vector<Rational>& u, int i);
// Check that sum_k u_k = 0; throws Precondition otherwise.
void require_trace_free(const std::vector<Rational>& u);

struct RttReport {
  Rational max_residual{0};
  std::string first_failure;  // empty when every residual vanishes
  std::size_t checks = 0;
};
// RTT relation for all index quadruples and r, s in [0, max_rs].
RttReport rtt_suite(const YangianRealizer& y, int max_rs = 2);

struct DiReport {
  Rational commute{0};          // max |[D_i, D_j]|
  Rational fixed{0};            // max |Ad(r_i) D_j - D_j|, j not in {i, i+1}
  Rational shift{0};            // max |Ad(r_i) D_i - D_{i+1} - kappa_{i,i+1}|
  Rational bold{0};             // |bold D - (2 sum t_ii^{(2)} - C)|
  Rational bold_second{0};      // |bold D - (2 sum h_i^{(2)} - 2 rho - sum E_ii^2)|
  Rational bold_invariant{0};   // max |Ad(r_i) bold D - bold D|
  std::string first_failure;
  bool ok() const { return first_failure.empty(); }
};
DiReport di_identity_suite(const YangianRealizer& y);

// max |[h_i^{(2)}, h_j^{(2)}]|
Rational gz_commutativity(const YangianRealizer& y);
// max |[T_{i,1}, T_{j,1}]|
Rational t1_commutativity(const YangianRealizer& y);
// Shifting every a_p by v: t^{(2)} gains v t^{(1)}, t^{(3)} gains 2v t^{(2)} + v^2 t^{(1)}.
Rational translation_shift_residual(const YangianRealizer& y, const Rational& v);
// D_i - D_{i+1} - (-2 T_{i,1} + t_i^2 + t_i), max over i.
Rational sl_difference_residual(const YangianRealizer& y);

}  // namespace trigcas
