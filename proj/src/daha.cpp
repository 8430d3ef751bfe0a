#include "trigcas/daha.hpp"

#include <functional>
#include <map>

namespace trigcas {

QMatrix DahaModule::x(const RatVec& u) const {
  QMatrix out(dim(), dim());
  for (std::size_t j = 0; j < u.size(); ++j) out.add_scaled(u[j], x_basis[j]);
  return out;
}

QMatrix DahaModule::y(const RatVec& u) const {
  QMatrix out = x(u);
  const auto& pos = phi->positive_roots();
  for (std::size_t a = 0; a < pos.size(); ++a)
    out.add_scaled(rat(-1, 2) * RootSystem::evaluate(pos[a], u) * k[a], s_positive[a]);
  return out;
}

const QMatrix& DahaModule::s_alpha(const IntVec& root) const {
  const int idx = phi->positive_index(RootSystem::is_positive(root) ? root : RootSystem::negate(root));
  if (idx < 0) throw Error(ErrorKind::Precondition, "s_alpha: not a root");
  return s_positive[static_cast<std::size_t>(idx)];
}

Rational DahaModule::k_alpha(const IntVec& root) const {
  const int idx = phi->positive_index(RootSystem::is_positive(root) ? root : RootSystem::negate(root));
  if (idx < 0) throw Error(ErrorKind::Precondition, "k_alpha: not a root");
  return k[static_cast<std::size_t>(idx)];
}

ConnectionData DahaModule::connection_data() const {
  ConnectionData d;
  d.phi = phi;
  for (std::size_t a = 0; a < s_positive.size(); ++a) d.t.push_back(k[a] * s_positive[a]);
  d.tau_basis = x_basis;
  d.reflections = s;
  d.reflections_inv = s;
  return d;
}

std::vector<Rational> k_by_length(const RootSystem& phi, const Rational& k_long, const Rational& k_short) {
  std::vector<Rational> k;
  for (const auto& alpha : phi.positive_roots()) k.push_back(phi.is_long(alpha) ? k_long : k_short);
  return k;
}

const WeylElement& reflection_element(const RootSystem& phi, const IntVec& alpha) {
  for (const auto& w : phi.weyl_group()) {
    bool match = true;
    for (int j = 0; j < phi.rank() && match; ++j)
      if (phi.act(w, phi.simple_root(j)) != phi.reflect(phi.simple_root(j), alpha)) match = false;
    if (match) return w;
  }
  throw Error(ErrorKind::Precondition, "reflection_element: not a root");
}

QMatrix left_multiplication(const RootSystem& phi, const WeylElement& g) {
  const auto& W = phi.weyl_group();
  QMatrix out(W.size(), W.size());
  for (std::size_t c = 0; c < W.size(); ++c) out(phi.weyl_index(phi.multiply(g, W[c])), c) = 1;
  return out;
}

DahaModule induced_module(const RootSystem& phi, const std::vector<Rational>& k, const RatVec& lambda) {
  const int r = phi.rank();
  if (static_cast<int>(lambda.size()) != r) throw Error(ErrorKind::DimensionMismatch, "lambda needs one value per fundamental coweight");
  if (k.size() != phi.positive_roots().size()) throw Error(ErrorKind::DimensionMismatch, "k needs one value per positive root");
  const auto& W = phi.weyl_group();
  const std::size_t N = W.size();
  DahaModule mod;
  mod.phi = &phi;
  mod.k = k;
  // left_index[i][v] = index of s_i v.
  std::vector<std::vector<std::size_t>> left_index(static_cast<std::size_t>(r), std::vector<std::size_t>(N));
  for (int i = 0; i < r; ++i) {
    const WeylElement si = phi.from_word({i});
    for (std::size_t v = 0; v < N; ++v) left_index[static_cast<std::size_t>(i)][v] = phi.weyl_index(phi.multiply(si, W[v]));
    mod.s.push_back(left_multiplication(phi, si));
  }
  for (const auto& alpha : phi.positive_roots()) mod.s_positive.push_back(left_multiplication(phi, reflection_element(phi, alpha)));

  std::vector<Rational> k_simple;
  for (int i = 0; i < r; ++i) k_simple.push_back(k[static_cast<std::size_t>(phi.positive_index(phi.simple_root(i)))]);

  // x_u [s_i w'] = s_i x_{s_i u}[w'] + k_i alpha_i(u) [w'] with w = s_i w', l(w') < l(w).
  std::map<std::pair<RatVec, std::size_t>, std::vector<Rational>> memo;
  std::function<const std::vector<Rational>&(const RatVec&, std::size_t)> column =
      [&](const RatVec& u, std::size_t w) -> const std::vector<Rational>& {
    auto key = std::make_pair(u, w);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<Rational> out(N, Rational(0));
    const WeylElement& we = W[w];
    if (we.word.empty()) {
      for (int j = 0; j < r; ++j) out[w] += u[static_cast<std::size_t>(j)] * lambda[static_cast<std::size_t>(j)];
    } else {
      const int i = we.word.front();
      const std::size_t rest = phi.weyl_index(phi.from_word(std::vector<int>(we.word.begin() + 1, we.word.end())));
      const std::vector<Rational> inner = column(phi.simple_reflect_coweight(i, u), rest);
      for (std::size_t v = 0; v < N; ++v)
        if (sgn(inner[v]) != 0) out[left_index[static_cast<std::size_t>(i)][v]] += inner[v];
      out[rest] += k_simple[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
    }
    return memo.emplace(std::move(key), std::move(out)).first->second;
  };
  for (int j = 0; j < r; ++j) {
    const RatVec u = phi.fundamental_coweight(j);
    QMatrix xj(N, N);
    for (std::size_t w = 0; w < N; ++w) {
      const auto& col = column(u, w);
      for (std::size_t v = 0; v < N; ++v) xj(v, w) = col[v];
    }
    mod.x_basis.push_back(std::move(xj));
  }
  return mod;
}

bool DahaReport::ok() const {
  return sgn(involution) == 0 && sgn(braid) == 0 && sgn(daha) == 0 && sgn(x_commute) == 0 && sgn(y_equivariant) == 0;
}

QMatrix daha_residual(const DahaModule& mod, int i, int j) {
  const RootSystem& phi = *mod.phi;
  const RatVec u = phi.fundamental_coweight(j);
  const QMatrix& si = mod.s[static_cast<std::size_t>(i)];
  QMatrix res = si * mod.x(u) - mod.x(phi.simple_reflect_coweight(i, u)) * si;
  const Rational c = mod.k_alpha(phi.simple_root(i)) * u[static_cast<std::size_t>(i)];
  res.add_scaled(-c, QMatrix::identity(mod.dim()));
  return res;
}

QMatrix equiv2_residual(const DahaModule& mod, int i, int j) {
  const RootSystem& phi = *mod.phi;
  const RatVec u = phi.fundamental_coweight(j);
  const QMatrix& si = mod.s[static_cast<std::size_t>(i)];
  QMatrix res = si * mod.x(u) * si - mod.x(phi.simple_reflect_coweight(i, u));
  res.add_scaled(-mod.k_alpha(phi.simple_root(i)) * u[static_cast<std::size_t>(i)], si);
  return res;
}

DahaReport daha_relations(const DahaModule& mod) {
  const RootSystem& phi = *mod.phi;
  const int r = phi.rank();
  const QMatrix one = QMatrix::identity(mod.dim());
  DahaReport rep;
  auto bump = [](Rational& slot, const Rational& v) {
    if (v > slot) slot = v;
  };
  for (int i = 0; i < r; ++i) {
    const QMatrix& si = mod.s[static_cast<std::size_t>(i)];
    bump(rep.involution, max_abs(si * si - one));
    for (int j = i + 1; j < r; ++j) {
      const int prod = phi.cartan(i, j) * phi.cartan(j, i);
      const int mij = prod == 0 ? 2 : prod == 1 ? 3 : prod == 2 ? 4 : 6;
      QMatrix left = one, right = one;
      for (int t = 0; t < mij; ++t) {
        left = left * mod.s[static_cast<std::size_t>(t % 2 == 0 ? i : j)];
        right = right * mod.s[static_cast<std::size_t>(t % 2 == 0 ? j : i)];
      }
      bump(rep.braid, max_abs(left - right));
    }
    for (int j = 0; j < r; ++j) {
      bump(rep.daha, max_abs(daha_residual(mod, i, j)));
      const RatVec u = phi.fundamental_coweight(j);
      bump(rep.y_equivariant, max_abs(si * mod.y(u) * si - mod.y(phi.simple_reflect_coweight(i, u))));
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      bump(rep.x_commute, max_abs(commutator(mod.x_basis[static_cast<std::size_t>(i)], mod.x_basis[static_cast<std::size_t>(j)])));
  return rep;
}

EquivalenceWitness equivalence_witness(const DahaModule& mod) {
  EquivalenceWitness out;
  const int r = mod.phi->rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const QMatrix e = equiv2_residual(mod, i, j);
      const QMatrix d = daha_residual(mod, i, j);
      const Rational link = max_abs(e * mod.s[static_cast<std::size_t>(i)] - d);
      const Rational dv = max_abs(d), ev = max_abs(e);
      if (link > out.link) out.link = link;
      if (dv > out.daha) out.daha = dv;
      if (ev > out.equiv2) out.equiv2 = ev;
    }
  return out;
}

DahaModule perturbed(const DahaModule& mod) {
  DahaModule p = mod;
  p.x_basis.front()(0, 0) += 1;
  return p;
}

// ---------------------------------------------------------------------------

RatVec ZeroWeightDaha::coweight_of(const std::vector<Rational>& X) {
  RatVec c(X.size() - 1);
  for (std::size_t j = 0; j + 1 < X.size(); ++j) c[j] = X[j] - X[j + 1];
  return c;
}

std::vector<Rational> ZeroWeightDaha::diagonal_of(const RatVec& c, int n) {
  std::vector<Rational> u(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j + 1 < n; ++j) {
    const Rational& cj = c[static_cast<std::size_t>(j)];
    if (sgn(cj) == 0) continue;
    for (int k = 0; k < n; ++k) u[static_cast<std::size_t>(k)] += cj * ((k <= j ? Rational(1) : Rational(0)) - rat(j + 1, n));
  }
  return u;
}

ZeroWeightDaha::ZeroWeightDaha(const RootSystem& phi, std::shared_ptr<const GlModule> module, std::vector<Rational> a)
    : phi_(&phi), conn_(module, std::move(a)) {
  const GlModule& V = *module;
  if (phi.family() != 'A' || phi.rank() != V.n() - 1) throw Error(ErrorKind::Precondition, "zero weight dAHA needs A_{n-1}");
  const auto small = V.is_small();
  if (!small.small) throw Error(ErrorKind::Precondition, "module is not small");
  basis_ = V.zero_weight_basis();
  if (basis_.empty()) throw Error(ErrorKind::Precondition, "zero weight space is trivial");
  const int n = V.n();
  const std::size_t d = basis_.size();
  daha_.phi = &phi;
  for (int i = 0; i + 1 < n; ++i) daha_.s.push_back(GlModule::restrict_to(V.tits_operator(i), basis_));
  for (const auto& alpha : phi.positive_roots()) {
    auto [a0, b0] = type_a_root_pair(alpha);
    daha_.s_positive.push_back(GlModule::restrict_to(V.tits_root(a0, b0), basis_));
    daha_.k.push_back(Rational(-2));  // k_alpha = -(alpha, alpha), hbar = 1
  }
  for (int j = 0; j + 1 < n; ++j) {
    const RatVec c = phi.fundamental_coweight(j);
    QMatrix xj = Rational(-2) * GlModule::restrict_to(conn_.yangian().T_of(diagonal_of(c, n)), basis_);
    Rational scalar(0);
    for (std::size_t p = 0; p < phi.positive_roots().size(); ++p)
      scalar += daha_.k[p] * RootSystem::evaluate(phi.positive_roots()[p], c);
    xj.add_scaled(scalar / 2, QMatrix::identity(d));
    daha_.x_basis.push_back(std::move(xj));
  }
}

Rational ZeroWeightDaha::y_match_residual() const {
  Rational worst(0);
  const int n = conn_.n();
  for (int j = 0; j + 1 < n; ++j) {
    const RatVec c = phi_->fundamental_coweight(j);
    const QMatrix target = Rational(-2) * GlModule::restrict_to(conn_.yangian().J_of(diagonal_of(c, n)), basis_);
    const Rational v = max_abs(daha_.y(c) - target);
    if (v > worst) worst = v;
  }
  return worst;
}

Rational ZeroWeightDaha::lemma_residual() const {
  Rational worst(0);
  const QMatrix one = QMatrix::identity(basis_.size());
  for (std::size_t p = 0; p < phi_->positive_roots().size(); ++p) {
    auto [a0, b0] = type_a_root_pair(phi_->positive_roots()[p]);
    const QMatrix k = GlModule::restrict_to(conn_.module().kappa(a0, b0), basis_);
    const Rational v = max_abs(k - Rational(2) * (one - daha_.s_positive[p]));
    if (v > worst) worst = v;
  }
  return worst;
}

Rational ZeroWeightDaha::akz_scalar(const std::vector<Rational>& z, const std::vector<Rational>& X) const {
  Rational total(0);
  for (std::size_t p = 0; p < phi_->positive_roots().size(); ++p) {
    auto [a0, b0] = type_a_root_pair(phi_->positive_roots()[p]);
    const auto ua = static_cast<std::size_t>(a0), ub = static_cast<std::size_t>(b0);
    const Rational ax = X[ua] - X[ub];
    const Rational e = z[ua] / z[ub];
    // alpha and -alpha
    total += daha_.k[p] * (ax / (e - 1) + (-ax) / (Rational(1) / e - 1));
  }
  return total / 2;
}

QMatrix ZeroWeightDaha::akz_equality_residual(const std::vector<Rational>& z, const std::vector<Rational>& X) const {
  require_trace_free(X);
  const QMatrix omega_trig = -GlModule::restrict_to(conn_.coefficient(FormStyle::Tau, z, X), basis_);
  QMatrix a_akz = daha_.x(coweight_of(X));
  for (std::size_t p = 0; p < phi_->positive_roots().size(); ++p) {
    auto [a0, b0] = type_a_root_pair(phi_->positive_roots()[p]);
    const auto ua = static_cast<std::size_t>(a0), ub = static_cast<std::size_t>(b0);
    a_akz.add_scaled((X[ua] - X[ub]) / (z[ua] / z[ub] - 1) * daha_.k[p], daha_.s_positive[p]);
  }
  QMatrix res = omega_trig + a_akz;
  res.add_scaled(-akz_scalar(z, X), QMatrix::identity(basis_.size()));
  return res;
}

IntertwinerResult find_intertwiner(const DahaModule& induced, const DahaModule& target) {
  const std::size_t d = induced.dim();
  IntertwinerResult out;
  if (target.dim() != d) return out;
  std::vector<std::pair<const QMatrix*, const QMatrix*>> gens;
  for (std::size_t i = 0; i < induced.s.size(); ++i) gens.push_back({&induced.s[i], &target.s[i]});
  for (std::size_t i = 0; i < induced.x_basis.size(); ++i) gens.push_back({&induced.x_basis[i], &target.x_basis[i]});
  // Unknown Phi(r, c) at position r*d + c; equations (Phi G - H Phi)(r, c) = 0.
  QMatrix system(gens.size() * d * d, d * d);
  std::size_t row = 0;
  for (const auto& [G, H] : gens)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c, ++row) {
        for (std::size_t k = 0; k < d; ++k) {
          if (sgn((*G)(k, c)) != 0) system(row, r * d + k) += (*G)(k, c);
          if (sgn((*H)(r, k)) != 0) system(row, k * d + c) -= (*H)(r, k);
        }
      }
  const auto null = nullspace(system);
  out.solution_dim = null.size();
  for (int attempt = 0; attempt < 4 && !out.exists && !null.empty(); ++attempt) {
    QMatrix phi(d, d);
    for (std::size_t b = 0; b < null.size(); ++b) {
      const Rational coef(static_cast<long>(1 + b * (attempt + 2) + attempt * attempt));
      for (std::size_t q = 0; q < d * d; ++q)
        if (sgn(null[b][q]) != 0) phi(q / d, q % d) += coef * null[b][q];
    }
    if (rank(phi) == d) {
      out.exists = true;
      out.intertwiner = std::move(phi);
    }
  }
  return out;
}

RatVec induced_weight(const std::vector<Rational>& a) {
  const int n = static_cast<int>(a.size());
  Rational total(0);
  for (const auto& x : a) total += x;
  RatVec lambda;
  Rational partial(0);
  for (int j = 0; j + 1 < n; ++j) {
    partial += a[static_cast<std::size_t>(j)];
    lambda.push_back(2 * (partial - rat(j + 1, n) * total));
  }
  return lambda;
}

}  // namespace trigcas
