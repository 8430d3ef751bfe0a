#include "trigcas/connection.hpp"

#include <sstream>

namespace trigcas {

namespace {

std::size_t pair_index(int n, int i, int j) {
  // Position of (i, j), i < j, in row-major order over upper-triangular pairs.
  std::size_t idx = 0;
  for (int a = 0; a < i; ++a) idx += static_cast<std::size_t>(n - a - 1);
  return idx + static_cast<std::size_t>(j - i - 1);
}

// 1 / (e - 1)
Rational inv_minus_one(const Rational& e) {
  if (e == 1) throw Error(ErrorKind::Singular, "point lies on a root hypertorus");
  return Rational(1) / (e - 1);
}

RatVec coweight_of_direction(const std::vector<Rational>& X) {
  RatVec c(X.size() - 1);
  for (std::size_t j = 0; j + 1 < X.size(); ++j) c[j] = X[j] - X[j + 1];
  return c;
}

}  // namespace

std::pair<int, int> type_a_root_pair(const IntVec& root) {
  if (!RootSystem::is_positive(root)) {
    auto [a, b] = type_a_root_pair(RootSystem::negate(root));
    return {b, a};
  }
  int first = -1, last = -1;
  for (std::size_t k = 0; k < root.size(); ++k)
    if (root[k] != 0) {
      if (root[k] != 1) throw Error(ErrorKind::Precondition, "not a type A root");
      if (first < 0) first = static_cast<int>(k);
      last = static_cast<int>(k);
    }
  return {first, last + 1};
}

GlConnection::GlConnection(std::shared_ptr<const GlModule> module, std::vector<Rational> a)
    : y_(std::move(module), std::move(a)) {}

void GlConnection::require_regular(const std::vector<Rational>& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (sgn(z[i]) == 0) throw Error(ErrorKind::Singular, "torus coordinate is zero");
    for (std::size_t j = i + 1; j < z.size(); ++j)
      if (z[i] == z[j]) throw Error(ErrorKind::Singular, "point is not regular: z_i = z_j");
  }
}

QMatrix GlConnection::coefficient(FormStyle style, const std::vector<Rational>& z, const std::vector<Rational>& X) const {
  const int nn = n();
  if (static_cast<int>(z.size()) != nn || static_cast<int>(X.size()) != nn)
    throw Error(ErrorKind::DimensionMismatch, "point or direction has wrong length");
  require_regular(z);
  const GlModule& V = module();
  QMatrix A(V.dim(), V.dim());
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      Rational c;
      switch (style) {
        case FormStyle::Tau: c = (X[ui] - X[uj]) * inv_minus_one(z[ui] / z[uj]); break;
        case FormStyle::Delta: {
          const Rational e = z[ui] / z[uj];
          c = rat(1, 2) * (e + 1) * inv_minus_one(e) * (X[ui] - X[uj]);
          break;
        }
        case FormStyle::RationalZ: c = (z[ui] * X[ui] - z[uj] * X[uj]) / (z[ui] - z[uj]); break;
      }
      A.add_scaled(c, V.kappa(i, j));
    }
  for (int k = 0; k < nn; ++k) {
    const Rational& xk = X[static_cast<std::size_t>(k)];
    if (sgn(xk) == 0) continue;
    QMatrix tail = D_used(k);
    if (style == FormStyle::Delta) {
      // Delta_k = D_k - (1/2) sum_{a<b} (theta_a - theta_b)(E_kk) kappa_ab
      for (int j = 0; j < nn; ++j)
        if (j != k) tail.add_scaled(j < k ? rat(1, 2) : rat(-1, 2), V.kappa(std::min(j, k), std::max(j, k)));
    } else if (style == FormStyle::RationalZ) {
      for (int j = k + 1; j < nn; ++j) tail -= V.kappa(k, j);
    }
    A.add_scaled(xk, tail);
  }
  if (scale_ != 1) A.scale(scale_);
  return A;
}

QMatrix GlConnection::coefficient_chamber(const RootSystem& phi, const WeylElement& w, const std::vector<Rational>& z,
                                          const std::vector<Rational>& X) const {
  const int nn = n();
  if (phi.family() != 'A' || phi.rank() != nn - 1) throw Error(ErrorKind::Precondition, "chamber change needs A_{n-1}");
  require_regular(z);
  const GlModule& V = module();
  QMatrix A(V.dim(), V.dim());
  for (const auto& beta : phi.positive_roots()) {
    auto [a, b] = type_a_root_pair(phi.act(w, beta));  // root theta_a - theta_b of w Phi_+
    const auto ua = static_cast<std::size_t>(a), ub = static_cast<std::size_t>(b);
    A.add_scaled((X[ua] - X[ub]) * inv_minus_one(z[ua] / z[ub]), V.kappa(std::min(a, b), std::max(a, b)));
  }
  for (int k = 0; k < nn; ++k) A.add_scaled(X[static_cast<std::size_t>(k)], D_used(k));
  for (const auto& [alpha, c] : chamber_shift(phi, w, coweight_of_direction(X))) {
    auto [a, b] = type_a_root_pair(alpha);
    A.add_scaled(-c, V.kappa(a, b));
  }
  if (scale_ != 1) A.scale(scale_);
  return A;
}

CMatrix GlConnection::coefficient_complex(const std::vector<Complex>& z, const std::vector<Complex>& X) const {
  const int nn = n();
  auto* self = const_cast<GlConnection*>(this);
  if (kappa_c_.empty()) {
    for (int i = 0; i < nn; ++i)
      for (int j = i + 1; j < nn; ++j) self->kappa_c_.push_back(to_complex(module().kappa(i, j)));
    for (int k = 0; k < nn; ++k) {
      self->D_c_.push_back(to_complex(y_.D(k)));
      self->D_mut_c_.push_back(to_complex(y_.D_mutant(k)));
    }
  }
  const std::size_t d = module().dim();
  CMatrix A(d, d);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      const Complex e = z[static_cast<std::size_t>(i)] / z[static_cast<std::size_t>(j)];
      if (std::abs(e - 1.0) < 1e-8) throw Error(ErrorKind::NumericalBreakdown, "point within 1e-8 of a root hypertorus");
      A.add_scaled((X[static_cast<std::size_t>(i)] - X[static_cast<std::size_t>(j)]) / (e - 1.0),
                   kappa_c_[pair_index(nn, i, j)]);
    }
  for (int k = 0; k < nn; ++k)
    A.add_scaled(X[static_cast<std::size_t>(k)], mutant_ ? D_mut_c_[static_cast<std::size_t>(k)] : D_c_[static_cast<std::size_t>(k)]);
  if (scale_ != 1) A.scale(Complex(scale_.get_d(), 0.0));
  return A;
}

Rational GlConnection::flatness_residual(FormStyle style, const std::vector<Rational>& z) const {
  const int nn = n();
  std::vector<QMatrix> coeffs;
  for (int k = 0; k < nn; ++k) {
    std::vector<Rational> X(static_cast<std::size_t>(nn), Rational(0));
    X[static_cast<std::size_t>(k)] = 1;
    coeffs.push_back(coefficient(style, z, X));
  }
  Rational worst(0);
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      Rational v = max_abs(commutator(coeffs[static_cast<std::size_t>(i)], coeffs[static_cast<std::size_t>(j)]));
      if (v > worst) worst = v;
    }
  return worst;
}

GlConnection::EquivarianceReport GlConnection::equivariance_residual(int i, const std::vector<Rational>& z) const {
  const int nn = n();
  if (i < 0 || i + 1 >= nn) throw Error(ErrorKind::Precondition, "transposition index out of range");
  const GlModule& V = module();
  const QMatrix r = V.tits_operator(i), ri = V.tits_operator_inverse(i);
  auto sigma = [&](int a) { return a == i ? i + 1 : (a == i + 1 ? i : a); };
  auto ad = [&](const QMatrix& x) { return r * x * ri; };
  EquivarianceReport rep;
  auto bump = [](Rational& slot, const QMatrix& m) {
    Rational v = max_abs(m);
    if (v > slot) slot = v;
  };
  for (int a = 0; a < nn; ++a)
    for (int b = a + 1; b < nn; ++b) {
      const int sa = sigma(a), sb = sigma(b);
      bump(rep.kappa, ad(V.kappa(a, b)) - V.kappa(std::min(sa, sb), std::max(sa, sb)));
    }
  for (int k = 0; k < nn; ++k) {
    // u = e_k; s_i u = e_{sigma(k)}; alpha_i(u) = u_i - u_{i+1}.
    QMatrix res = ad(D_used(k)) - D_used(sigma(k));
    const int alpha_u = (k == i ? 1 : 0) - (k == i + 1 ? 1 : 0);
    if (alpha_u != 0) res.add_scaled(Rational(-alpha_u), V.kappa(i, i + 1));
    bump(rep.tail, res);
  }
  std::vector<Rational> sz = z;
  std::swap(sz[static_cast<std::size_t>(i)], sz[static_cast<std::size_t>(i + 1)]);
  for (int k = 0; k < nn; ++k) {
    std::vector<Rational> X(static_cast<std::size_t>(nn), Rational(0)), sX(static_cast<std::size_t>(nn), Rational(0));
    X[static_cast<std::size_t>(k)] = 1;
    sX[static_cast<std::size_t>(sigma(k))] = 1;
    bump(rep.pointwise, ad(coefficient(FormStyle::Tau, z, X)) - coefficient(FormStyle::Tau, sz, sX));
  }
  return rep;
}

QMatrix GlConnection::sl_restriction_residual(const std::vector<Rational>& z, const std::vector<Rational>& X) const {
  require_trace_free(X);
  const int nn = n();
  const GlModule& V = module();
  const QMatrix A_gl = coefficient(FormStyle::Tau, z, X);
  // sl_n tau form: sum kappa alpha(X)/(e^alpha - 1) - 2 T(X)_1 + sum_j lambda_j(X) t_j^2.
  QMatrix A_sl(V.dim(), V.dim());
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      A_sl.add_scaled((X[ui] - X[uj]) * inv_minus_one(z[ui] / z[uj]), V.kappa(i, j));
    }
  A_sl.add_scaled(Rational(-2), y_.T_of(X));
  QMatrix closed(V.dim(), V.dim());
  for (int j = 0; j + 1 < nn; ++j) {
    const QMatrix tj = V.E(j, j) - V.E(j + 1, j + 1);
    const Rational lam = fundamental_weight_value(X, j);
    A_sl.add_scaled(lam, tj * tj);
    closed.add_scaled(-lam, tj);
  }
  if (scale_ != 1) {
    A_sl.scale(scale_);
    closed.scale(scale_);
  }
  // (-A_gl) - (-A_sl) - closed
  return A_sl - A_gl - closed;
}

QMatrix GlConnection::tv_L(int i, const std::vector<Rational>& z) const {
  const int nn = n();
  const GlModule& V = module();
  const auto& a = y_.params();
  QMatrix L = rat(1, 2) * (V.E(i, i) * V.E(i, i));
  for (int p = 0; p < V.m(); ++p) L.add_scaled(-a[static_cast<std::size_t>(p)], V.E_slot(i, i, p));
  for (int j = 0; j < nn; ++j)
    for (int p = 0; p < V.m(); ++p)
      for (int q = p + 1; q < V.m(); ++q) L -= V.E_slot(i, j, p) * V.E_slot(j, i, q);
  for (int j = 0; j < nn; ++j) {
    if (j == i) continue;
    const Rational c = z[static_cast<std::size_t>(j)] / (z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)]);
    L.add_scaled(-c, V.E(i, j) * V.E(j, i) - V.E(i, i));
  }
  return L;
}

QMatrix GlConnection::tv_residual(const std::vector<Rational>& z, const std::vector<Rational>& X,
                                  const Rational& lambda) const {
  const int nn = n();
  require_regular(z);
  const GlModule& V = module();
  QMatrix omega_prime(V.dim(), V.dim());
  for (int i = 0; i < nn; ++i)
    if (sgn(X[static_cast<std::size_t>(i)]) != 0) omega_prime.add_scaled(lambda * X[static_cast<std::size_t>(i)], tv_L(i, z));
  GlConnection unscaled(std::make_shared<const GlModule>(V.n(), V.m()), y_.params());
  unscaled.set_mutant(mutant_);
  QMatrix omega_img = (-lambda / 2) * unscaled.coefficient(FormStyle::Tau, z, X);
  QMatrix closed(V.dim(), V.dim());
  for (int i = 0; i < nn; ++i)
    for (int j = i + 1; j < nn; ++j) {
      const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
      closed.add_scaled((X[ui] - X[uj]) * inv_minus_one(z[ui] / z[uj]), V.E(i, i) + V.E(j, j));
    }
  for (int i = 0; i < nn; ++i)
    for (int j = 0; j < i; ++j) closed.add_scaled(-X[static_cast<std::size_t>(i)], V.E(i, i) + V.E(j, j));
  closed.scale(lambda / 2);
  return omega_prime - omega_img - closed;
}

// ---------------------------------------------------------------------------

bool RelationReport::ok() const {
  for (const auto& e : entries)
    if (!e.ok()) return false;
  return true;
}

const RelationEntry* RelationReport::find(const std::string& relation) const {
  for (const auto& e : entries)
    if (e.relation == relation) return &e;
  return nullptr;
}

const QMatrix& ConnectionData::t_of(const IntVec& root) const {
  const int idx = RootSystem::is_positive(root) ? phi->positive_index(root) : phi->positive_index(RootSystem::negate(root));
  if (idx < 0) throw Error(ErrorKind::Precondition, "t_of: not a root");
  return t[static_cast<std::size_t>(idx)];
}

QMatrix ConnectionData::tau(const RatVec& v) const {
  QMatrix x(tau_basis.front().rows(), tau_basis.front().cols());
  for (std::size_t i = 0; i < v.size(); ++i) x.add_scaled(v[i], tau_basis[i]);
  return x;
}

QMatrix ConnectionData::tau_w(const WeylElement& w, const RatVec& v) const {
  QMatrix x = tau(v);
  for (const auto& [alpha, c] : chamber_shift(*phi, w, v)) x.add_scaled(-c, t_of(alpha));
  return x;
}

QMatrix ConnectionData::delta(const RatVec& v) const {
  QMatrix x = tau(v);
  for (const auto& alpha : phi->positive_roots()) x.add_scaled(rat(-1, 2) * RootSystem::evaluate(alpha, v), t_of(alpha));
  return x;
}

namespace {

std::string root_str(const IntVec& r) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << r[k];
  os << ")";
  return os.str();
}

std::string word_str(const WeylElement& w) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < w.word.size(); ++k) os << (k ? "," : "") << w.word[k] + 1;
  os << "]";
  return os.str();
}

RelationEntry entry(std::string name) {
  RelationEntry e;
  e.relation = std::move(name);
  return e;
}

void record(RelationEntry& e, const QMatrix& residual, const std::string& label) {
  ++e.checks;
  const Rational v = max_abs(residual);
  if (v > e.max_residual) e.max_residual = v;
  if (sgn(v) != 0 && e.first_failure.empty()) e.first_failure = label;
}

}  // namespace

RelationReport generic_relation_suite(const ConnectionData& data) {
  const RootSystem& phi = *data.phi;
  const int r = phi.rank();
  RelationReport rep;

  RelationEntry tt = entry("tt");
  for (const auto& psi : enumerate_rank2_subsystems(phi)) {
    QMatrix sum(data.t.front().rows(), data.t.front().cols());
    for (const auto& b : psi.positive) sum += data.t_of(b);
    for (const auto& a : psi.positive)
      record(tt, commutator(data.t_of(a), sum),
             "subsystem " + psi.type_tag + (psi.complete ? "" : " (non-complete)") + " alpha=" + root_str(a));
  }
  rep.entries.push_back(std::move(tt));

  RelationEntry tautau = entry("tau tau");
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      record(tautau, commutator(data.tau_basis[static_cast<std::size_t>(i)], data.tau_basis[static_cast<std::size_t>(j)]),
             "i=" + std::to_string(i + 1) + " j=" + std::to_string(j + 1));
  rep.entries.push_back(std::move(tautau));

  RelationEntry ttau = entry("t tau"), twt = entry("t^w t"), tdelta = entry("t delta");
  for (const auto& alpha : phi.positive_roots()) {
    const auto kernel = phi.kernel_basis(alpha);
    for (const auto& u : kernel)
      record(tdelta, commutator(data.t_of(alpha), data.delta(u)), "alpha=" + root_str(alpha));
    for (const auto& w : phi.weyl_group()) {
      const IntVec pre = phi.act(phi.inverse(w), alpha);
      bool simple = false;
      for (int i = 0; i < r; ++i)
        if (pre == phi.simple_root(i)) simple = true;
      if (!simple) continue;
      const WeylElement winv = phi.inverse(w);
      for (const auto& u : kernel) {
        const std::string label = "alpha=" + root_str(alpha) + " w=" + word_str(w);
        record(ttau, commutator(data.t_of(alpha), data.tau_w(w, u)), label);
        QMatrix signed_sum(data.t.front().rows(), data.t.front().cols());
        for (const auto& beta : phi.positive_roots()) {
          const int sign = RootSystem::is_positive(phi.act(winv, beta)) ? 1 : -1;
          signed_sum.add_scaled(Rational(sign) * RootSystem::evaluate(beta, u), data.t_of(beta));
        }
        record(twt, commutator(data.t_of(alpha), signed_sum), label);
      }
    }
  }
  rep.entries.push_back(std::move(ttau));
  rep.entries.push_back(std::move(tdelta));
  rep.entries.push_back(std::move(twt));

  if (!data.reflections.empty()) {
    RelationEntry eq1 = entry("equiv1"), eq2 = entry("equiv2");
    for (int i = 0; i < r; ++i) {
      const QMatrix& s = data.reflections[static_cast<std::size_t>(i)];
      const QMatrix& si = data.reflections_inv[static_cast<std::size_t>(i)];
      for (const auto& alpha : phi.positive_roots())
        record(eq1, s * data.t_of(alpha) * si - data.t_of(phi.simple_reflect(i, alpha)),
               "i=" + std::to_string(i + 1) + " alpha=" + root_str(alpha));
      for (int j = 0; j < r; ++j) {
        const RatVec x = phi.fundamental_coweight(j);
        QMatrix res = s * data.tau(x) * si - data.tau(phi.simple_reflect_coweight(i, x));
        res.add_scaled(-RootSystem::evaluate(phi.simple_root(i), x), data.t_of(phi.simple_root(i)));
        record(eq2, res, "i=" + std::to_string(i + 1) + " x=t^" + std::to_string(j + 1));
      }
    }
    rep.entries.push_back(std::move(eq1));
    rep.entries.push_back(std::move(eq2));
  }
  return rep;
}

ConnectionData sl_connection_data(const RootSystem& phi, const GlConnection& conn) {
  const int nn = conn.n();
  if (phi.family() != 'A' || phi.rank() != nn - 1) throw Error(ErrorKind::Precondition, "sl_n data needs A_{n-1}");
  const GlModule& V = conn.module();
  ConnectionData d;
  d.phi = &phi;
  for (const auto& alpha : phi.positive_roots()) {
    auto [a, b] = type_a_root_pair(alpha);
    d.t.push_back(V.kappa(a, b));
  }
  for (int i = 0; i + 1 < nn; ++i) {
    // Fundamental coweight t^i as a trace-free diagonal matrix.
    std::vector<Rational> u(static_cast<std::size_t>(nn));
    for (int k = 0; k < nn; ++k) u[static_cast<std::size_t>(k)] = (k <= i ? Rational(1) : Rational(0)) - rat(i + 1, nn);
    QMatrix x(V.dim(), V.dim());
    for (int k = 0; k < nn; ++k) x.add_scaled(u[static_cast<std::size_t>(k)], conn.D_used(k));
    d.tau_basis.push_back(std::move(x));
    d.reflections.push_back(V.tits_operator(i));
    d.reflections_inv.push_back(V.tits_operator_inverse(i));
  }
  return d;
}

}  // namespace trigcas
