#include "trigcas/yangian.hpp"

#include <mutex>
#include <sstream>

namespace trigcas {

std::string to_string(const YangianSymbol& s) {
  std::ostringstream os;
  switch (s.kind) {
    case SymbolKind::T: os << "t(" << s.i + 1 << "," << s.j + 1 << "," << s.r << ")"; break;
    case SymbolKind::H2: os << "h2(" << s.i + 1 << ")"; break;
    case SymbolKind::D: os << "D(" << s.i + 1 << ")"; break;
    case SymbolKind::Delta: os << "Delta(" << s.i + 1 << ")"; break;
    case SymbolKind::Dtilde: os << "Dtilde(" << s.i + 1 << ")"; break;
    case SymbolKind::T0: os << "T0(" << s.i + 1 << ")"; break;
    case SymbolKind::T1: os << "T1(" << s.i + 1 << ")"; break;
    case SymbolKind::BoldD: os << "bfD"; break;
    case SymbolKind::Casimir: os << "C_gl"; break;
    case SymbolKind::DMutant: os << "D_mutant(" << s.i + 1 << ")"; break;
  }
  return os.str();
}

Rational fundamental_weight_value(const std::vector<Rational>& u, int i) {
  Rational s(0);
  for (int k = 0; k <= i; ++k) s += u[static_cast<std::size_t>(k)];
  return s;
}

void require_trace_free(const std::vector<Rational>& u) {
  Rational s(0);
  for (const auto& x : u) s += x;
  if (sgn(s) != 0) throw Error(ErrorKind::Precondition, "direction is not trace-free");
}

YangianRealizer::YangianRealizer(std::shared_ptr<const GlModule> module, std::vector<Rational> a)
    : module_(std::move(module)), a_(std::move(a)) {
  if (static_cast<int>(a_.size()) != module_->m())
    throw Error(ErrorKind::DimensionMismatch, "evaluation parameter count does not match the number of factors");
}

void YangianRealizer::check(int i) const {
  if (i < 0 || i >= n()) throw Error(ErrorKind::Precondition, "Yangian symbol index out of range");
}

void YangianRealizer::ensure_t(int rmax) const {
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(t_table_.size()) > rmax) return;
  }
  const int nn = n();
  const std::size_t dim = module_->dim();
  const auto nsq = static_cast<std::size_t>(nn * nn);
  const auto R = static_cast<std::size_t>(rmax + 1);
  // S[r][i*n+j] after absorbing slots 0..p-1.
  std::vector<std::vector<QMatrix>> S(R, std::vector<QMatrix>(nsq, QMatrix(dim, dim)));
  for (int i = 0; i < nn; ++i) S[0][static_cast<std::size_t>(i * nn + i)] = QMatrix::identity(dim);
  for (int p = 0; p < module_->m(); ++p) {
    const Rational& ap = a_[static_cast<std::size_t>(p)];
    std::vector<Rational> apow(R, Rational(1));
    for (std::size_t q = 1; q < R; ++q) apow[q] = apow[q - 1] * ap;
    std::vector<std::vector<QMatrix>> next = S;  // L^{(0)} = identity term
    for (std::size_t r = 1; r < R; ++r)
      for (std::size_t s = 0; s < r; ++s) {
        const Rational& coeff = apow[r - s - 1];  // L^{(q)} = a^{q-1} E, q = r - s >= 1
        if (sgn(coeff) == 0) continue;
        for (int i = 0; i < nn; ++i)
          for (int j = 0; j < nn; ++j)
            for (int k = 0; k < nn; ++k) {
              const QMatrix& left = S[s][static_cast<std::size_t>(i * nn + k)];
              if (left.is_zero()) continue;
              next[r][static_cast<std::size_t>(i * nn + j)].add_scaled(coeff, left * module_->E_slot(k, j, p));
            }
      }
    S = std::move(next);
  }
  std::unique_lock lock(mutex_);
  if (t_table_.size() < R) t_table_ = std::move(S);
}

QMatrix YangianRealizer::realize(const YangianSymbol& s) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(s);
    if (it != cache_.end()) return it->second;
  }
  QMatrix value = compute(s);
  std::unique_lock lock(mutex_);
  cache_.emplace(s, value);
  return value;
}

QMatrix YangianRealizer::compute(const YangianSymbol& s) const {
  const GlModule& V = *module_;
  const int nn = n();
  switch (s.kind) {
    case SymbolKind::T: {
      check(s.i);
      check(s.j);
      if (s.r < 0) throw Error(ErrorKind::Precondition, "negative Yangian mode");
      ensure_t(s.r);
      std::shared_lock lock(mutex_);
      return t_table_[static_cast<std::size_t>(s.r)][static_cast<std::size_t>(s.i * nn + s.j)];
    }
    case SymbolKind::H2: {
      check(s.i);
      QMatrix h = t(s.i, s.i, 2);
      for (int j = 0; j < s.i; ++j) h -= V.E(s.i, j) * V.E(j, s.i);
      return h;
    }
    case SymbolKind::D: {
      check(s.i);
      QMatrix d = Rational(2) * t(s.i, s.i, 2);
      for (int j = 0; j < s.i; ++j) d -= V.kappa(j, s.i);
      d -= V.E(s.i, s.i) * V.E(s.i, s.i);
      return d;
    }
    case SymbolKind::DMutant: {
      check(s.i);
      QMatrix d = Rational(2) * t(s.i, s.i, 2);
      d -= V.E(s.i, s.i) * V.E(s.i, s.i);
      return d;
    }
    case SymbolKind::Delta: {
      check(s.i);
      QMatrix d = Rational(2) * t(s.i, s.i, 2);
      for (int j = 0; j < nn; ++j)
        if (j != s.i) d.add_scaled(rat(-1, 2), V.kappa(s.i, j));
      d -= V.E(s.i, s.i) * V.E(s.i, s.i);
      return d;
    }
    case SymbolKind::Dtilde: {
      check(s.i);
      QMatrix d = Rational(2) * t(s.i, s.i, 2);
      for (int j = 0; j < nn; ++j)
        if (j != s.i) d -= V.kappa(s.i, j);
      d -= V.E(s.i, s.i) * V.E(s.i, s.i);
      return d;
    }
    case SymbolKind::T0: {
      if (s.i < 0 || s.i + 1 >= nn) throw Error(ErrorKind::Precondition, "sl_n index out of range");
      return -(V.E(s.i, s.i) - V.E(s.i + 1, s.i + 1));
    }
    case SymbolKind::T1: {
      if (s.i < 0 || s.i + 1 >= nn) throw Error(ErrorKind::Precondition, "sl_n index out of range");
      const QMatrix& Ei = V.E(s.i, s.i);
      const QMatrix& Ej = V.E(s.i + 1, s.i + 1);
      // 1-based index i = s.i + 1, so (i-1)/2 = s.i/2.
      QMatrix x = -(h2(s.i) - h2(s.i + 1));
      x.add_scaled(-rat(s.i, 2), Ei - Ej);
      x += Ei * Ei - Ei * Ej;
      return x;
    }
    case SymbolKind::BoldD: {
      QMatrix d(V.dim(), V.dim());
      for (int i = 0; i < nn; ++i) d += D(i);
      return d;
    }
    case SymbolKind::Casimir: {
      QMatrix c(V.dim(), V.dim());
      for (int i = 0; i < nn; ++i)
        for (int j = i + 1; j < nn; ++j) c += V.kappa(i, j);
      for (int i = 0; i < nn; ++i) c += V.E(i, i) * V.E(i, i);
      return c;
    }
  }
  throw Error(ErrorKind::Precondition, "unknown Yangian symbol");
}

QMatrix YangianRealizer::T_of(const std::vector<Rational>& u) const {
  require_trace_free(u);
  QMatrix x(module_->dim(), module_->dim());
  for (int i = 0; i + 1 < n(); ++i) x.add_scaled(fundamental_weight_value(u, i), T1(i));
  return x;
}

QMatrix YangianRealizer::J_of(const std::vector<Rational>& u) const {
  const GlModule& V = *module_;
  QMatrix x = T_of(u);
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b)
      x.add_scaled(rat(1, 4) * (u[static_cast<std::size_t>(a)] - u[static_cast<std::size_t>(b)]), V.kappa(a, b));
  for (int i = 0; i + 1 < n(); ++i) {
    const QMatrix ti = V.E(i, i) - V.E(i + 1, i + 1);
    x.add_scaled(rat(-1, 2) * fundamental_weight_value(u, i), ti * ti);
  }
  return x;
}

QMatrix YangianRealizer::D_of(const std::vector<Rational>& u) const {
  QMatrix x(module_->dim(), module_->dim());
  for (int k = 0; k < n(); ++k) x.add_scaled(u[static_cast<std::size_t>(k)], D(k));
  return x;
}

namespace {

void note(Rational& slot, const QMatrix& residual, std::string& first, const std::string& label) {
  const Rational v = max_abs(residual);
  if (v > slot) slot = v;
  if (sgn(v) != 0 && first.empty()) first = label;
}

QMatrix ad(const QMatrix& r, const QMatrix& r_inv, const QMatrix& x) { return r * x * r_inv; }

}  // namespace

RttReport rtt_suite(const YangianRealizer& y, int max_rs) {
  RttReport rep;
  const int nn = y.n();
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < nn; ++j)
      for (int k = 0; k < nn; ++k)
        for (int l = 0; l < nn; ++l)
          for (int r = 0; r <= max_rs; ++r)
            for (int s = 0; s <= max_rs; ++s) {
              QMatrix lhs = commutator(y.t(i, j, r + 1), y.t(k, l, s)) - commutator(y.t(i, j, r), y.t(k, l, s + 1));
              QMatrix rhs = y.t(k, j, r) * y.t(i, l, s) - y.t(k, j, s) * y.t(i, l, r);
              std::ostringstream label;
              label << "rtt i=" << i + 1 << " j=" << j + 1 << " k=" << k + 1 << " l=" << l + 1 << " r=" << r << " s=" << s;
              note(rep.max_residual, lhs - rhs, rep.first_failure, label.str());
              ++rep.checks;
            }
  return rep;
}

DiReport di_identity_suite(const YangianRealizer& y) {
  DiReport rep;
  const GlModule& V = y.module();
  const int nn = y.n();
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j)
      note(rep.commute, commutator(y.D(i), y.D(j)), rep.first_failure,
           "[D_" + std::to_string(i + 1) + ", D_" + std::to_string(j + 1) + "]");
  for (int i = 0; i + 1 < nn; ++i) {
    const QMatrix r = V.tits_operator(i), ri = V.tits_operator_inverse(i);
    for (int j = 0; j < nn; ++j)
      if (j != i && j != i + 1)
        note(rep.fixed, ad(r, ri, y.D(j)) - y.D(j), rep.first_failure,
             "Ad(r_" + std::to_string(i + 1) + ") D_" + std::to_string(j + 1));
    note(rep.shift, ad(r, ri, y.D(i)) - y.D(i + 1) - V.kappa(i, i + 1), rep.first_failure,
         "Ad(r_" + std::to_string(i + 1) + ") D_i - D_{i+1} - kappa");
    note(rep.bold_invariant, ad(r, ri, y.bold_D()) - y.bold_D(), rep.first_failure,
         "Ad(r_" + std::to_string(i + 1) + ") bfD");
  }
  QMatrix expected(V.dim(), V.dim());
  for (int i = 0; i < nn; ++i) expected += Rational(2) * y.t(i, i, 2);
  expected -= y.casimir();
  note(rep.bold, y.bold_D() - expected, rep.first_failure, "bfD = 2 sum t_ii^(2) - C");
  QMatrix second(V.dim(), V.dim());
  for (int i = 0; i < nn; ++i) {
    second += Rational(2) * y.h2(i);
    second -= V.E(i, i) * V.E(i, i);
    for (int j = i + 1; j < nn; ++j) second -= V.E(i, i) - V.E(j, j);
  }
  note(rep.bold_second, y.bold_D() - second, rep.first_failure, "bfD = 2 sum h_i^(2) - 2 rho - sum E_ii^2");
  return rep;
}

Rational gz_commutativity(const YangianRealizer& y) {
  Rational worst(0);
  for (int i = 0; i < y.n(); ++i)
    for (int j = i + 1; j < y.n(); ++j) {
      Rational v = max_abs(commutator(y.h2(i), y.h2(j)));
      if (v > worst) worst = v;
    }
  return worst;
}

Rational t1_commutativity(const YangianRealizer& y) {
  Rational worst(0);
  for (int i = 0; i + 1 < y.n(); ++i)
    for (int j = i + 1; j + 1 < y.n(); ++j) {
      Rational v = max_abs(commutator(y.T1(i), y.T1(j)));
      if (v > worst) worst = v;
    }
  return worst;
}

Rational translation_shift_residual(const YangianRealizer& y, const Rational& v) {
  std::vector<Rational> shifted = y.params();
  for (auto& x : shifted) x += v;
  auto module = std::make_shared<const GlModule>(y.module().n(), y.module().m());
  YangianRealizer ys(module, shifted);
  Rational worst(0);
  for (int i = 0; i < y.n(); ++i)
    for (int j = 0; j < y.n(); ++j) {
      QMatrix r2 = ys.t(i, j, 2) - y.t(i, j, 2);
      r2.add_scaled(-v, y.t(i, j, 1));
      QMatrix r3 = ys.t(i, j, 3) - y.t(i, j, 3);
      r3.add_scaled(-2 * v, y.t(i, j, 2));
      r3.add_scaled(-v * v, y.t(i, j, 1));
      for (const auto* m : {&r2, &r3}) {
        Rational x = max_abs(*m);
        if (x > worst) worst = x;
      }
    }
  return worst;
}

Rational sl_difference_residual(const YangianRealizer& y) {
  const GlModule& V = y.module();
  Rational worst(0);
  for (int i = 0; i + 1 < y.n(); ++i) {
    const QMatrix ti = V.E(i, i) - V.E(i + 1, i + 1);
    QMatrix res = y.D(i) - y.D(i + 1);
    res += Rational(2) * y.T1(i);
    res -= ti * ti;
    res -= ti;
    Rational x = max_abs(res);
    if (x > worst) worst = x;
  }
  return worst;
}

}  // namespace trigcas
