#include "trigcas/suites.hpp"

#include "trigcas/connection.hpp"
#include "trigcas/daha.hpp"
#include "trigcas/monodromy.hpp"
#include "trigcas/qkz.hpp"
#include "trigcas/rootsys.hpp"
#include "trigcas/tits.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <map>
#include <numeric>

namespace trigcas {

namespace {

using json = nlohmann::json;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Per-suite streams keep suites independent of execution order.
RationalSampler sampler(const RunConfig& c, unsigned long long salt) { return RationalSampler(c.seed * 1000003ULL + salt); }

json rat_list(const std::vector<Rational>& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Rational max_of(const Rational& a, const Rational& b) { return a > b ? a : b; }

const std::vector<std::string> kDefaultTypes = {"A2", "B2", "G2", "A3", "B3"};

std::vector<std::string> types_for(const RunConfig& c) {
  if (!c.type.empty()) return {RootSystem::build(c.type).label()};
  return kDefaultTypes;
}

std::vector<std::pair<int, int>> grid(const RunConfig& c, std::vector<std::pair<int, int>> defaults) {
  if (c.n == 0 && c.m == 0) return defaults;
  std::vector<std::pair<int, int>> out;
  for (auto [n, m] : defaults)
    if ((c.n == 0 || c.n == n) && (c.m == 0 || c.m == m)) out.emplace_back(n, m);
  if (out.empty()) out.emplace_back(c.n == 0 ? defaults.front().first : c.n, c.m == 0 ? defaults.front().second : c.m);
  return out;
}

std::vector<Rational> eval_points(const RunConfig& c, int m, RationalSampler& rs) {
  if (!c.a.empty()) {
    if (static_cast<int>(c.a.size()) != m) throw Error(ErrorKind::Precondition, "--a needs one value per tensor factor");
    return c.a;
  }
  std::vector<Rational> a;
  for (int p = 0; p < m; ++p) a.push_back(rs.next(9, 4));
  return a;
}

// Distinct nonzero rationals.
std::vector<Rational> regular_point(int n, RationalSampler& rs) {
  for (;;) {
    std::vector<Rational> z;
    for (int i = 0; i < n; ++i) z.push_back(rs.next_nonzero(9, 4));
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if (z[static_cast<std::size_t>(i)] == z[static_cast<std::size_t>(j)]) ok = false;
    if (ok) return z;
  }
}

std::string nm(int n, int m) { return "n=" + std::to_string(n) + " m=" + std::to_string(m); }

// ----------------------------------------------------------------------------

std::size_t expected_positive_roots(const std::string& l) {
  static const std::map<std::string, std::size_t> t = {{"A1", 1}, {"A2", 3}, {"A3", 6}, {"A4", 10}, {"B2", 4},
                                                       {"B3", 9}, {"C3", 9}, {"D4", 12}, {"G2", 6}};
  return t.at(l);
}

std::size_t expected_weyl_order(const std::string& l) {
  static const std::map<std::string, std::size_t> t = {{"A1", 2}, {"A2", 6}, {"A3", 24}, {"A4", 120}, {"B2", 8},
                                                       {"B3", 48}, {"C3", 48}, {"D4", 192}, {"G2", 12}};
  return t.at(l);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"roots", "relations", "flatness", "yangian", "qkz", "daha", "monodromy", "tits"};
  return names;
}

bool is_suite_name(const std::string& s) {
  if (s == "all") return true;
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), s) != n.end();
}

void validate(const RunConfig& c) {
  if (!is_suite_name(c.suite)) throw Error(ErrorKind::Precondition, "unknown suite '" + c.suite + "'");
  if (!c.type.empty()) {
    try {
      (void)RootSystem::build(c.type);
    } catch (const Error&) {
      throw Error(ErrorKind::Precondition, "unknown root system type '" + c.type + "'");
    }
  }
  if (c.n != 0 && (c.n < 2 || c.n > 4)) throw Error(ErrorKind::Precondition, "--n must be between 2 and 4");
  if (c.m != 0 && (c.m < 1 || c.m > 4)) throw Error(ErrorKind::Precondition, "--m must be between 1 and 4");
  if (!c.a.empty() && c.m != 0 && static_cast<int>(c.a.size()) != c.m)
    throw Error(ErrorKind::Precondition, "--a must list exactly m values");
  if (!c.a.empty() && c.a.size() > 4) throw Error(ErrorKind::Precondition, "--a lists more than 4 values");
  if (sgn(c.lambda) <= 0) throw Error(ErrorKind::Precondition, "--lambda must be positive");
  if (!(c.tol > 0.0) || !(c.tol < 1e-2)) throw Error(ErrorKind::Precondition, "--tol must lie in (0, 1e-2)");
}

// ----------------------------------------------------------------------------
// roots: Weyl groups, inversion-set decomposition, eta identity.

void run_roots(const RunConfig& c, Report& r) {
  const std::string S = "roots";
  RationalSampler rs = sampler(c, 11);
  for (const auto& label : types_for(c)) {
    Stopwatch sw;
    const RootSystem phi = RootSystem::build(label);
    const std::size_t npos = phi.positive_roots().size(), nw = phi.weyl_group().size();
    auto rec = exact_check(S, label + " positive roots", "number of positive roots",
                           {{"type", label}, {"count", npos}, {"expected", expected_positive_roots(label)}},
                           Rational(static_cast<long>(npos) - static_cast<long>(expected_positive_roots(label))));
    rec.wall_time = sw.seconds();
    r.checks.push_back(rec);
    rec = exact_check(S, label + " Weyl group order", "order of the Weyl group",
                      {{"type", label}, {"order", nw}, {"expected", expected_weyl_order(label)}},
                      Rational(static_cast<long>(nw) - static_cast<long>(expected_weyl_order(label))));
    rec.wall_time = sw.seconds();
    r.checks.push_back(rec);

    // Inversion-set decomposition: exhaustive in rank 2, 50 seeded pairs otherwise.
    Stopwatch si;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;  // (positive root, Weyl element)
    for (std::size_t k = 0; k < npos; ++k)
      for (std::size_t w = 0; w < nw; ++w) {
        const WeylElement& el = phi.weyl_group()[w];
        const IntVec v = phi.act(phi.inverse(el), phi.positive_roots()[k]);
        if (RootSystem::height(v) == 1) pairs.emplace_back(k, w);
      }
    const bool exhaustive = phi.rank() == 2 || pairs.size() <= 50;
    if (!exhaustive) {
      std::vector<std::pair<std::size_t, std::size_t>> chosen;
      std::vector<std::size_t> idx(pairs.size());
      std::iota(idx.begin(), idx.end(), 0);
      for (std::size_t s = 0; s < 50; ++s) {
        const auto j = static_cast<std::size_t>(rs.next_int(static_cast<long>(s), static_cast<long>(idx.size() - 1)));
        std::swap(idx[s], idx[j]);
        chosen.push_back(pairs[idx[s]]);
      }
      pairs = chosen;
    }
    long literal_fail = 0, corrected_fail = 0;
    std::string first_literal;
    for (auto [k, w] : pairs) {
      const auto d = decompose_inversion_set(phi, phi.positive_roots()[k], phi.weyl_group()[w]);
      if (!d.holds()) {
        if (literal_fail++ == 0) {
          first_literal = "alpha index " + std::to_string(k) + ", w word length " + std::to_string(phi.weyl_group()[w].length());
        }
      }
      if (!d.holds_corrected()) ++corrected_fail;
    }
    const json ip = {{"type", label}, {"pairs", pairs.size()}, {"exhaustive", exhaustive}};
    json lp = ip;
    lp["failing_pairs"] = literal_fail;
    if (!first_literal.empty()) lp["first_failure"] = first_literal;
    rec = exact_check(S, label + " inversion decomposition (literal)",
                      "N(w^-1) is the disjoint union of nonempty N(w^-1) cap Psi over Psi in R_2(alpha)", lp, Rational(literal_fail));
    rec.wall_time = si.seconds();
    r.checks.push_back(rec);
    json cp = ip;
    cp["failing_pairs"] = corrected_fail;
    rec = exact_check(S, label + " inversion decomposition (corrected)",
                      "N(w^-1) is the disjoint union over all complete rank-2 Psi containing alpha", cp, Rational(corrected_fail));
    rec.wall_time = si.seconds();
    r.checks.push_back(rec);

    // eta identity at 100 complex regular points and at exact rational points.
    Stopwatch se;
    const auto& pr = phi.positive_roots();
    double worst = 0.0;
    int done = 0;
    while (done < 100) {
      const IntVec& ai = pr[static_cast<std::size_t>(rs.next_int(0, static_cast<long>(pr.size()) - 1))];
      const IntVec& bi = pr[static_cast<std::size_t>(rs.next_int(0, static_cast<long>(pr.size()) - 1))];
      RatVec a(ai.begin(), ai.end()), b(bi.begin(), bi.end()), x, y;
      std::vector<Complex> u;
      for (int k = 0; k < phi.rank(); ++k) {
        u.emplace_back(rs.next_double(-1.0, 1.0), rs.next_double(-3.0, 3.0));
        x.push_back(rs.next());
        y.push_back(rs.next());
      }
      auto far = [&](const RatVec& v) {
        Complex s(0.0, 0.0);
        for (std::size_t k = 0; k < v.size(); ++k) s += v[k].get_d() * u[k];
        return std::abs(std::exp(s) - 1.0) > 0.1;
      };
      RatVec ab = a;
      for (std::size_t k = 0; k < ab.size(); ++k) ab[k] += b[k];
      if (!far(a) || !far(b) || !far(ab)) continue;
      worst = std::max(worst, std::abs(eta_identity_value(a, b, u, x, y)));
      ++done;
    }
    rec = float_check(S, label + " eta identity (float)", "eta_a ^ eta_b identity for da/(e^a - 1)",
                      {{"type", label}, {"points", 100}}, worst, 1e-12);
    rec.wall_time = se.seconds();
    r.checks.push_back(rec);

    Rational exact_worst(0);
    done = 0;
    while (done < 25) {
      const IntVec& ai = pr[static_cast<std::size_t>(rs.next_int(0, static_cast<long>(pr.size()) - 1))];
      const IntVec& bi = pr[static_cast<std::size_t>(rs.next_int(0, static_cast<long>(pr.size()) - 1))];
      RatVec q, x, y;
      for (int k = 0; k < phi.rank(); ++k) {
        q.push_back(rs.next_nonzero(7, 3));
        x.push_back(rs.next());
        y.push_back(rs.next());
      }
      try {
        exact_worst = max_of(exact_worst, abs(eta_identity_exact(ai, bi, q, x, y)));
        ++done;
      } catch (const Error&) {
      }
    }
    rec = exact_check(S, label + " eta identity (exact)", "eta_a ^ eta_b identity for da/(e^a - 1)",
                      {{"type", label}, {"points", 25}}, exact_worst);
    rec.wall_time = se.seconds();
    r.checks.push_back(rec);
  }
}

// ----------------------------------------------------------------------------
// flatness: gl_n connection on tensor products of evaluation modules.

void run_flatness(const RunConfig& c, Report& r) {
  const std::string S = "flatness";
  RationalSampler rs = sampler(c, 23);
  for (auto [n, m] : grid(c, {{2, 2}, {2, 3}, {3, 2}, {3, 3}})) {
    Stopwatch sw;
    auto V = std::make_shared<const GlModule>(n, m);
    const std::vector<Rational> a = eval_points(c, m, rs);
    GlConnection conn(V, a);
    conn.set_scale(Rational(1) / c.lambda);
    conn.set_mutant(c.negative_control);
    GlConnection mutant(V, a);
    mutant.set_scale(Rational(1) / c.lambda);
    mutant.set_mutant(true);

    Rational flat_tau(0), flat_delta(0), flat_rat(0), eq_kappa(0), eq_tail(0), eq_point(0), mut(0);
    const int points = 25;
    for (int p = 0; p < points; ++p) {
      const auto z = regular_point(n, rs);
      flat_tau = max_of(flat_tau, conn.flatness_residual(FormStyle::Tau, z));
      flat_delta = max_of(flat_delta, conn.flatness_residual(FormStyle::Delta, z));
      flat_rat = max_of(flat_rat, conn.flatness_residual(FormStyle::RationalZ, z));
      for (int i = 0; i + 1 < n; ++i) {
        const auto e = conn.equivariance_residual(i, z);
        eq_kappa = max_of(eq_kappa, e.kappa);
        eq_tail = max_of(eq_tail, e.tail);
        eq_point = max_of(eq_point, e.pointwise);
      }
      if (!c.negative_control) mut = max_of(mut, mutant.flatness_residual(FormStyle::Tau, z));
    }
    const json params = {{"n", n}, {"m", m}, {"a", rat_list(a)}, {"points", points}, {"lambda", to_string(c.lambda)},
                         {"mutant", c.negative_control}};
    const double t = sw.seconds();
    auto push = [&](CheckRecord rec) {
      rec.wall_time = t;
      r.checks.push_back(std::move(rec));
    };
    const std::string flat_anchor = "flatness of the trigonometric Casimir connection: [A(e_i), A(e_j)] = 0";
    push(exact_check(S, "flatness " + nm(n, m) + " tau form", flat_anchor, params, flat_tau));
    push(exact_check(S, "flatness " + nm(n, m) + " delta form", flat_anchor, params, flat_delta));
    push(exact_check(S, "flatness " + nm(n, m) + " z form", flat_anchor, params, flat_rat));
    push(exact_check(S, "equivariance " + nm(n, m) + " kappa", "Ad(r_i) kappa_alpha = kappa_{s_i alpha}", params, eq_kappa));
    push(exact_check(S, "equivariance " + nm(n, m) + " tail", "Ad(r_i) D(u) - D(s_i u) = alpha_i(u) kappa_{alpha_i}", params, eq_tail));
    push(exact_check(S, "equivariance " + nm(n, m) + " connection", "Ad(r_i) A(z)(X) = A(s_i z)(s_i X)", params, eq_point));
    if (!c.negative_control)
      push(exact_check(S, "negative control " + nm(n, m) + " mutant", "connection with the kappa-sums removed from D_i is not flat",
                       params, mut, false));
    if (!c.negative_control) {
      // Curvature of scale * A is scale^2 times the curvature of A.
      const auto z = regular_point(n, rs);
      GlConnection m1(V, a), m2(V, a);
      m1.set_mutant(true);
      m2.set_mutant(true);
      m2.set_scale(2);
      const Rational r1 = m1.flatness_residual(FormStyle::Tau, z), r2 = m2.flatness_residual(FormStyle::Tau, z);
      json hp = params;
      hp["z"] = rat_list(z);
      hp["residual_scale_1"] = to_string(r1);
      hp["residual_scale_2"] = to_string(r2);
      push(exact_check(S, "scaling homogeneity " + nm(n, m) + " mutant", "flatness residual is homogeneous of degree 2 in the scale",
                       hp, abs(r2 - 4 * r1) + (sgn(r1) == 0 ? Rational(1) : Rational(0))));
    }
  }
}

// ----------------------------------------------------------------------------
// relations: generic relation suites for t = kappa and for t = k s in C W.

void run_relations(const RunConfig& c, Report& r) {
  const std::string S = "relations";
  RationalSampler rs = sampler(c, 37);
  const std::string anchor_prefix = "relations of the generic W-equivariant flat connection: ";
  auto push_report = [&](const std::string& prefix, const RelationReport& rep, const json& params, double t) {
    for (const auto& e : rep.entries) {
      json p = params;
      p["checks"] = e.checks;
      if (!e.first_failure.empty()) p["first_failure"] = e.first_failure;
      auto rec = exact_check(S, prefix + " " + e.relation, anchor_prefix + e.relation, p, e.max_residual);
      rec.wall_time = t;
      r.checks.push_back(std::move(rec));
    }
  };

  // t_alpha = kappa_alpha on sl_n tensor modules.
  for (auto [n, m] : grid(c, {{3, 2}, {4, 2}})) {
    Stopwatch sw;
    const RootSystem phi = RootSystem::build("A" + std::to_string(n - 1));
    auto V = std::make_shared<const GlModule>(n, m);
    const std::vector<Rational> a = eval_points(c, m, rs);
    GlConnection conn(V, a);
    conn.set_mutant(c.negative_control);
    const auto rep = generic_relation_suite(sl_connection_data(phi, conn));
    push_report("sl_" + std::to_string(n) + " " + nm(n, m), rep,
                {{"n", n}, {"m", m}, {"a", rat_list(a)}, {"t", "kappa"}, {"mutant", c.negative_control}}, sw.seconds());
  }

  // t_alpha = k_alpha s_alpha in the group algebra.
  for (const auto& label : types_for(c)) {
    const RootSystem phi = RootSystem::build(label);
    for (int sample = 0; sample < 3; ++sample) {
      Stopwatch sw;
      const Rational kl = rs.next_nonzero(), ks = rs.next_nonzero();
      RatVec lambda;
      for (int j = 0; j < phi.rank(); ++j) lambda.push_back(rs.next());
      DahaModule mod = induced_module(phi, k_by_length(phi, kl, ks), lambda);
      if (c.negative_control) mod = perturbed(mod);
      const auto rep = generic_relation_suite(mod.connection_data());
      push_report("C W " + label + " sample " + std::to_string(sample + 1), rep,
                  {{"type", label}, {"k_long", to_string(kl)}, {"k_short", to_string(ks)}, {"lambda", rat_list(lambda)},
                   {"t", "k s"}, {"perturbed", c.negative_control}},
                  sw.seconds());
    }
  }
  if (!c.negative_control) {
    Stopwatch sw;
    const RootSystem phi = RootSystem::build("A2");
    const DahaModule mod = perturbed(induced_module(phi, k_by_length(phi, rat(1), rat(1)), RatVec{rat(1, 2), rat(-1, 3)}));
    const auto rep = generic_relation_suite(mod.connection_data());
    const auto* e = rep.find("equiv2");
    auto rec = exact_check(S, "negative control C W A2 perturbed x", anchor_prefix + "equiv2 fails once x no longer satisfies the dAHA relation",
                           {{"type", "A2"}}, e ? e->max_residual : Rational(0), false);
    rec.wall_time = sw.seconds();
    r.checks.push_back(std::move(rec));
  }
}

// ----------------------------------------------------------------------------
// yangian: RTT, Gelfand-Zetlin and the D_i identities.

void run_yangian(const RunConfig& c, Report& r) {
  const std::string S = "yangian";
  RationalSampler rs = sampler(c, 41);
  for (auto [n, m] : grid(c, {{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}})) {
    Stopwatch sw;
    auto V = std::make_shared<const GlModule>(n, m);
    const std::vector<Rational> a = eval_points(c, m, rs);
    const YangianRealizer y(V, a);
    const json params = {{"n", n}, {"m", m}, {"a", rat_list(a)}};
    const RttReport rtt = rtt_suite(y, 2);
    const DiReport di = di_identity_suite(y);
    const Rational v = rs.next_nonzero();
    const double t = sw.seconds();
    auto push = [&](CheckRecord rec) {
      rec.wall_time = t;
      r.checks.push_back(std::move(rec));
    };
    json rp = params;
    rp["checks"] = rtt.checks;
    if (!rtt.first_failure.empty()) rp["first_failure"] = rtt.first_failure;
    const std::string p = nm(n, m);
    push(exact_check(S, "RTT " + p, "R(u-v) T_1(u) T_2(v) = T_2(v) T_1(u) R(u-v)", rp, rtt.max_residual));
    push(exact_check(S, "Gelfand-Zetlin " + p, "[h_i^(2), h_j^(2)] = 0", params, gz_commutativity(y)));
    push(exact_check(S, "T_1 commute " + p, "[T_{i,1}, T_{j,1}] = 0", params, t1_commutativity(y)));
    push(exact_check(S, "D commute " + p, "[D_i, D_j] = 0", params, di.commute));
    push(exact_check(S, "D fixed " + p, "Ad(r_i) D_j = D_j for j not in {i, i+1}", params, di.fixed));
    push(exact_check(S, "D shift " + p, "Ad(r_i) D_i - D_{i+1} = kappa_{i,i+1}", params, di.shift));
    push(exact_check(S, "bold D " + p, "bold D = 2 sum t_ii^(2) - C_gl", params, di.bold));
    push(exact_check(S, "bold D second form " + p, "bold D = 2 sum h_i^(2) - 2 rho - sum E_ii^2", params, di.bold_second));
    push(exact_check(S, "bold D invariant " + p, "Ad(r_i) bold D = bold D", params, di.bold_invariant));
    json tp = params;
    tp["shift"] = to_string(v);
    push(exact_check(S, "translation " + p, "shift automorphism of the Yangian on t^(2), t^(3)", tp, translation_shift_residual(y, v)));
    push(exact_check(S, "sl difference " + p, "D_i - D_{i+1} = -2 T_{i,1} + t_i^2 + t_i", params, sl_difference_residual(y)));
  }
}

// ----------------------------------------------------------------------------
// qkz: rational qKZ operators and the bispectral identity.

void run_qkz(const RunConfig& c, Report& r) {
  const std::string S = "qkz";
  RationalSampler rs = sampler(c, 53);
  const QkzConvention conv = c.negative_control ? QkzConvention::Literal : QkzConvention::Matched;
  for (int n : {2, 3}) {
    Stopwatch sw;
    const Rational u = rs.next_nonzero(), v = rs.next_nonzero();
    const Rational uv = u + v == 0 ? Rational(1) : u + v;
    auto rec = exact_check(S, "QYBE n=" + std::to_string(n), "R12(u) R13(u+v) R23(v) = R23(v) R13(u+v) R12(u)",
                           {{"n", n}, {"u", to_string(u)}, {"v", to_string(uv - u)}}, qybe_residual(n, u, uv - u));
    rec.wall_time = sw.seconds();
    r.checks.push_back(rec);
    rec = exact_check(S, "unitarity n=" + std::to_string(n), "R(u) R21(-u) = 1 - u^-2", {{"n", n}, {"u", to_string(u)}},
                      unitarity_residual(n, u));
    rec.wall_time = sw.seconds();
    r.checks.push_back(rec);
  }
  const int n = c.n == 0 ? 2 : c.n;
  std::vector<int> ms = {2, 3};
  if (c.m != 0) ms = {c.m};
  for (int m : ms) {
    if (m < 2) throw Error(ErrorKind::Precondition, "qkz needs m >= 2");
    auto V = std::make_shared<const GlModule>(n, m);
    Rational cons(0), prod(0), cross(0), comm(0), bisp(0), literal_comm(0);
    json samples = json::array();
    Stopwatch sw;
    for (int s = 0; s < 5; ++s) {
      Rational kappa = sgn(c.kappa_step) != 0 ? c.kappa_step : rs.next_nonzero(9, 4);
      std::vector<Rational> a;
      for (int attempt = 0;; ++attempt) {
        a = (!c.a.empty() && attempt == 0) ? eval_points(c, m, rs) : std::vector<Rational>{};
        if (a.empty())
          for (int p = 0; p < m; ++p) a.push_back(rs.next(20, 3));
        try {
          QkzSystem(V, kappa).require_nonsingular(a);
          break;
        } catch (const Error&) {
          if (!c.a.empty() && attempt == 0 && sgn(c.kappa_step) != 0) throw;
          if (sgn(c.kappa_step) == 0) kappa = rs.next_nonzero(9, 4);
        }
      }
      const QkzSystem q(V, kappa, conv);
      const QkzSystem lit(V, kappa, QkzConvention::Literal);
      const auto z = regular_point(n, rs);
      std::vector<Rational> X;
      for (int k = 0; k < n; ++k) X.push_back(rs.next());
      samples.push_back({{"kappa", to_string(kappa)}, {"a", rat_list(a)}, {"z", rat_list(z)}, {"X", rat_list(X)}});
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) cons = max_of(cons, q.consistency_residual(i, j, z, a));
        prod = max_of(prod, q.product_lemma_residual(i, z, a));
        cross = max_of(cross, q.cross_diff_residual(i, z, X, a));
        comm = max_of(comm, q.commutation_lemma_residual(i, z, X, a));
        bisp = max_of(bisp, q.bispectral_residual(i, z, X, a));
        if (!c.negative_control) literal_comm = max_of(literal_comm, lit.commutation_lemma_residual(i, z, X, a));
      }
    }
    const json params = {{"n", n}, {"m", m}, {"samples", samples},
                         {"convention", c.negative_control ? "literal" : "matched"}};
    const double t = sw.seconds();
    auto push = [&](CheckRecord rec) {
      rec.wall_time = t;
      r.checks.push_back(std::move(rec));
    };
    const std::string p = nm(n, m);
    push(exact_check(S, "consistency " + p, "A_j(a + kappa e_i) A_i(a) = A_i(a + kappa e_j) A_j(a)", params, cons));
    push(exact_check(S, "product lemma " + p, "ordered product of shifted A_j equals Atilde_i", params, prod));
    push(exact_check(S, "difference lemma " + p, "(d Atilde_i) Atilde_i^-1 = (2 kappa)^-1 (B(a + kappa e_{<=i}) - B(a))", params, cross));
    push(exact_check(S, "commutation lemma " + p, "[Atilde_i, Delta_a(B)] = 0", params, comm));
    push(exact_check(S, "bispectral " + p, "qKZ operators commute with the trigonometric Casimir connection", params, bisp));
    if (!c.negative_control)
      push(exact_check(S, "negative control " + p + " literal convention",
                       "unmatched Yangian conventions break the commutation lemma", params, literal_comm, false));
  }
}

// ----------------------------------------------------------------------------
// daha: degenerate affine Hecke algebra actions and the AKZ comparison.

void run_daha(const RunConfig& c, Report& r) {
  const std::string S = "daha";
  RationalSampler rs = sampler(c, 67);
  for (const auto& label : types_for(c)) {
    Stopwatch sw;
    const RootSystem phi = RootSystem::build(label);
    const Rational kl = rs.next_nonzero(), ks = rs.next_nonzero();
    RatVec lambda;
    for (int j = 0; j < phi.rank(); ++j) lambda.push_back(rs.next());
    DahaModule mod = induced_module(phi, k_by_length(phi, kl, ks), lambda);
    if (c.negative_control) mod = perturbed(mod);
    const DahaReport rep = daha_relations(mod);
    const EquivalenceWitness w = equivalence_witness(mod);
    const json params = {{"type", label}, {"k_long", to_string(kl)}, {"k_short", to_string(ks)}, {"lambda", rat_list(lambda)},
                         {"perturbed", c.negative_control}};
    const double t = sw.seconds();
    auto push = [&](CheckRecord rec) {
      rec.wall_time = t;
      r.checks.push_back(std::move(rec));
    };
    push(exact_check(S, "C W " + label + " involution", "s_i^2 = 1", params, rep.involution));
    push(exact_check(S, "C W " + label + " braid", "braid relations of W", params, rep.braid));
    push(exact_check(S, "C W " + label + " dAHA", "s_i x_u - x_{s_i u} s_i = k_i alpha_i(u)", params, rep.daha));
    push(exact_check(S, "C W " + label + " x commute", "[x_u, x_v] = 0", params, rep.x_commute));
    push(exact_check(S, "C W " + label + " y equivariant", "s_i y_u s_i = y_{s_i u}", params, rep.y_equivariant));
    push(exact_check(S, "C W " + label + " equivalence link", "equiv2 residual times s_i equals the dAHA residual", params, w.link));
    if (!c.negative_control) {
      const EquivalenceWitness wp = equivalence_witness(perturbed(mod));
      push(exact_check(S, "negative control C W " + label + " perturbed dAHA", "perturbed x breaks the dAHA relation", params, wp.daha, false));
      push(exact_check(S, "negative control C W " + label + " perturbed equiv2", "perturbed x breaks equiv2", params, wp.equiv2, false));
    }
  }

  // Zero weight spaces of (C^n)^{otimes n}.
  std::vector<int> ns = {2, 3};
  if (c.n != 0) ns = {c.n};
  for (int n : ns) {
    Stopwatch sw;
    const RootSystem phi = RootSystem::build("A" + std::to_string(n - 1));
    auto V = std::make_shared<const GlModule>(n, n);
    std::vector<Rational> a;
    if (!c.a.empty() && static_cast<int>(c.a.size()) == n) {
      a = c.a;
    } else {
      // Distinct parameters.
      while (static_cast<int>(a.size()) < n) {
        const Rational x = rs.next(9, 2);
        if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
      }
    }
    const ZeroWeightDaha zd(phi, V, a);
    const DahaReport rep = daha_relations(zd.module());
    Rational akz(0);
    for (int s = 0; s < 3; ++s) {
      const auto z = regular_point(n, rs);
      for (int j = 0; j + 1 < n; ++j) {
        RatVec cw(static_cast<std::size_t>(n - 1), Rational(0));
        cw[static_cast<std::size_t>(j)] = 1;
        akz = max_of(akz, max_abs(zd.akz_equality_residual(z, ZeroWeightDaha::diagonal_of(cw, n))));
      }
    }
    const auto ind = induced_module(phi, std::vector<Rational>(phi.positive_roots().size(), Rational(-2)), induced_weight(a));
    const auto inter = find_intertwiner(ind, zd.module());
    const json params = {{"n", n}, {"m", n}, {"a", rat_list(a)}};
    const double t = sw.seconds();
    auto push = [&](CheckRecord rec) {
      rec.wall_time = t;
      r.checks.push_back(std::move(rec));
    };
    const std::string p = "V[0] " + nm(n, n);
    const Rational rel = max_of(max_of(max_of(rep.involution, rep.braid), max_of(rep.daha, rep.x_commute)), rep.y_equivariant);
    push(exact_check(S, p + " dAHA relations", "Yangian-realized dAHA action on the zero weight space", params, rel));
    push(exact_check(S, p + " y matches J", "y_u acts as -2 J(u)", params, zd.y_match_residual()));
    push(exact_check(S, p + " kappa lemma", "kappa_alpha = (alpha, alpha)(1 - s_alpha) on V[0] of a small module", params, zd.lemma_residual()));
    push(exact_check(S, p + " AKZ equality", "trigonometric connection on V[0] equals the AKZ connection up to a scalar form", params, akz));
    json ip = params;
    ip["solution_dim"] = inter.solution_dim;
    push(bool_check(S, p + " intertwiner", "V[0] is isomorphic to the induced module for distinct a", ip, inter.exists));
  }

  Stopwatch sw;
  GlModule big(2, 4);
  auto rec = exact_check(S, "negative control non-small (C^2)^4 kappa lemma",
                         "kappa_alpha = (alpha, alpha)(1 - s_alpha) needs a small module", {{"n", 2}, {"m", 4}},
                         max_abs(big.lemma_V0_residual(0, 1, false)), false);
  rec.wall_time = sw.seconds();
  r.checks.push_back(rec);
}

// ----------------------------------------------------------------------------
// monodromy: affine braid group action by parallel transport.

void run_monodromy(const RunConfig& c, Report& r) {
  const std::string S = "monodromy";
  RationalSampler rs = sampler(c, 79);
  const int n = c.n == 0 ? 3 : c.n;
  const int m = c.m == 0 ? 2 : c.m;
  auto V = std::make_shared<const GlModule>(n, m);
  std::vector<Rational> a;
  if (!c.a.empty()) a = eval_points(c, m, rs);
  else
    for (int p = 0; p < m; ++p) a.push_back(Rational(p) / 3);
  MonodromyConfig mc;
  mc.lambda = c.lambda;
  mc.tol = c.tol;
  const AffineMonodromy mono(V, a, mc);
  const json params = {{"n", n}, {"m", m}, {"a", rat_list(a)}, {"lambda", to_string(c.lambda)}, {"tol", c.tol}};
  const double tol10 = 10.0 * c.tol;

  Stopwatch sw;
  const auto gens = mono.generators();
  const double t_gen = sw.seconds();
  for (int i = 0; i < n; ++i) {
    MonodromyRecord rec;
    rec.generator = i;
    rec.lambda = to_string(c.lambda);
    rec.tolerance = c.tol;
    rec.matrix = gens[static_cast<std::size_t>(i)];
    rec.eigenvalues = complex_eigenvalues(rec.matrix);
    r.monodromy.push_back(std::move(rec));
  }
  auto push = [&](CheckRecord rec, double t) {
    rec.wall_time = t;
    r.checks.push_back(std::move(rec));
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (mono.braid_order(i, j) == 0) continue;
      json p = params;
      p["i"] = i;
      p["j"] = j;
      p["m_ij"] = mono.braid_order(i, j);
      push(float_check(S, "braid " + std::to_string(i) + "," + std::to_string(j), "affine braid relation for the monodromy generators",
                       p, mono.braid_residual(i, j, gens), 1e-6),
           t_gen);
    }
  for (int i = 0; i < n; ++i) {
    Stopwatch s;
    json p = params;
    p["generator"] = i;
    push(float_check(S, "inverse path " + std::to_string(i), "transport along a path and back is the identity", p,
                     mono.inverse_path_residual(i), tol10),
         s.seconds());
    push(float_check(S, "homotopy " + std::to_string(i), "homotopic paths give the same transport", p, mono.homotopy_residual(i), tol10),
         s.seconds());
  }
  {
    Stopwatch s;
    push(float_check(S, "contractible loop", "flatness: transport around a contractible loop is the identity", params,
                     mono.contractible_loop_residual(), tol10),
         s.seconds());
    push(float_check(S, "abelian loop", "d - c dtheta around theta: 0 -> 2 pi i gives exp(2 pi i c)", {{"c", "0.37+0.1i"}, {"tol", c.tol}},
                     abelian_loop_residual(Complex(0.37, 0.1), c.tol), tol10),
         s.seconds());
  }
  // Liouville: det M = exp(integral of tr A) along each generator path.
  for (int i = 0; i < n; ++i) {
    Stopwatch s;
    const PathSpec path = mono.generator_path(i, mc.offset);
    const CMatrix M = mono.transport(path).matrix;
    auto tr = [&](double t) {
      const CVec pt = path.point(t), v = path.velocity(t);
      std::vector<Complex> z(pt.size()), X(pt.size());
      for (std::size_t k = 0; k < pt.size(); ++k) {
        z[k] = std::exp(Complex(0.0, 2.0 * M_PI) * pt[k]);
        X[k] = Complex(0.0, 2.0 * M_PI) * v[k];
      }
      const CMatrix A = mono.connection().coefficient_complex(z, X);
      CMatrix out(1, 1);
      for (std::size_t k = 0; k < A.rows(); ++k) out(0, 0) += A(k, k);
      return out;
    };
    const Complex expected = integrate_linear(tr, 1, c.tol).matrix(0, 0);
    // det via eigenvalues keeps Eigen out of this file.
    Complex det(1.0, 0.0);
    for (const auto& e : complex_eigenvalues(M)) det *= e;
    json p = params;
    p["generator"] = i;
    push(float_check(S, "determinant " + std::to_string(i), "monodromy matrices are invertible: det M = exp(integral of tr A)", p,
                     std::abs(det - expected) / std::abs(expected), 1e3 * c.tol),
         s.seconds());
  }
  // lambda -> infinity: G_i tends to the inverse Tits lift.
  {
    Stopwatch s;
    MonodromyConfig big = mc;
    big.lambda = 10000;
    const AffineMonodromy far(V, a, big);
    for (int i = 0; i < n; ++i) {
      json p = params;
      p["lambda"] = "10000/1";
      p["generator"] = i;
      push(float_check(S, "scaling limit " + std::to_string(i), "G_i tends to the inverse Tits lift as lambda grows", p,
                       far.scaling_residual(i), 1e-3),
           s.seconds());
    }
  }
  // Non-integral scaling: local monodromies are no longer involutive.
  if (n >= 3) {
    Stopwatch s;
    MonodromyConfig third = mc;
    third.lambda = 3;
    const AffineMonodromy m3(V, a, third);
    auto g3 = m3.generators();
    json p = params;
    p["lambda"] = "3/1";
    push(float_check(S, "braid 0,1 at lambda 3", "affine braid relation for the monodromy generators", p, m3.braid_residual(0, 1, g3), 1e-6),
         s.seconds());
    g3[0] = m3.generator(0, -mc.offset);
    const double wrong = m3.braid_residual(0, 1, g3);
    push(bool_check(S, "negative control wrong-side push-off at lambda 3",
                    "crossing s_0 on the other side of the wall breaks the braid relation", [&] {
                      json q = p;
                      q["residual"] = wrong;
                      return q;
                    }(),
                    wrong > 1e-3),
         s.seconds());
  }
}

// ----------------------------------------------------------------------------
// tits: Tits extensions in matrix models.

void run_tits(const RunConfig& c, Report& r) {
  const std::string S = "tits";
  std::vector<int> ns = {2, 3};
  if (c.n != 0) ns = {c.n};
  for (int n : ns) {
    Stopwatch sw;
    const TitsReport rep = tits_suite(n);
    const double t = sw.seconds();
    for (const auto& chk : rep.checks) {
      auto rec = bool_check(S, chk.name, "Tits extension: " + chk.name, {{"n", n}, {"detail", chk.detail}}, chk.pass);
      rec.wall_time = t;
      r.checks.push_back(std::move(rec));
    }
    const CorootSection sec(affine_tits_model(n));
    auto rec = bool_check(S, "affine sl_" + std::to_string(n) + ": unit t", "tau^{theta^vee} = exp(x theta^vee) z^{theta^vee} with x = -ln t",
                          {{"n", n}, {"t", to_string(sec.unit())}}, sec.tau_is_diagonal_monomial());
    rec.wall_time = t;
    r.checks.push_back(std::move(rec));
  }
}

// ----------------------------------------------------------------------------

Report run(const RunConfig& config) {
  validate(config);
  Report report;
  report.config = config;
  using Fn = void (*)(const RunConfig&, Report&);
  static const std::map<std::string, Fn> table = {{"roots", run_roots},   {"relations", run_relations}, {"flatness", run_flatness},
                                                  {"yangian", run_yangian}, {"qkz", run_qkz},           {"daha", run_daha},
                                                  {"monodromy", run_monodromy}, {"tits", run_tits}};
  std::vector<std::string> names;
  if (config.suite == "all") names = suite_names();
  else names = {config.suite};
  report.suites = names;

  // Suites run concurrently; their reports are assembled in the fixed order.
  std::vector<std::future<Report>> jobs;
  for (const auto& name : names) {
    jobs.push_back(std::async(std::launch::async, [&config, fn = table.at(name)] {
      Report part;
      part.config = config;
      try {
        fn(config, part);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NumericalBreakdown) throw;
        part.breakdown = e.what();
      }
      return part;
    }));
  }
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    Report part = jobs[k].get();
    for (auto& c : part.checks) report.checks.push_back(std::move(c));
    for (auto& m : part.monodromy) report.monodromy.push_back(std::move(m));
    if (!part.breakdown.empty() && report.breakdown.empty()) report.breakdown = names[k] + ": " + part.breakdown;
  }
  return report;
}

}  // namespace trigcas
