// Acceptance criteria 1-10: one PASS/FAIL line each.  Exit status is 0 iff
// every criterion passes.
#include "trigcas/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace trigcas;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }
bool contains(const std::string& s, const std::string& p) { return s.find(p) != std::string::npos; }

// Counts records selected by `pick`; all of them must pass and at least `min` must exist.
Outcome require_all(const Report& r, const std::function<bool(const CheckRecord&)>& pick, std::size_t min) {
  Outcome o;
  std::size_t n = 0, bad = 0;
  std::string first;
  for (const auto& c : r.checks) {
    if (!pick(c)) continue;
    ++n;
    if (!c.pass) {
      if (bad++ == 0) first = c.name;
    }
  }
  o.pass = bad == 0 && n >= min && r.breakdown.empty();
  o.detail = std::to_string(n - bad) + "/" + std::to_string(n) + " checks";
  if (!first.empty()) o.detail += ", first failure: " + first;
  if (n < min) o.detail += ", expected at least " + std::to_string(min);
  if (!r.breakdown.empty()) o.detail += ", breakdown: " + r.breakdown;
  return o;
}

Outcome merge(Outcome a, const Outcome& b) {
  a.pass = a.pass && b.pass;
  a.detail += "; " + b.detail;
  return a;
}

template <class F>
Report timed(F&& fn, const char* suite, double& seconds) {
  RunConfig c;
  c.suite = suite;
  Report r;
  r.config = c;
  const auto t0 = std::chrono::steady_clock::now();
  fn(c, r);
  seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

Outcome within(Outcome o, double seconds, double limit) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "; %.2f s (limit %.0f s)", seconds, limit);
  o.detail += buf;
  o.pass = o.pass && seconds < limit;
  return o;
}

}  // namespace

int main() {
  int failed = 0;
  auto report = [&](int k, const char* title, const Outcome& o) {
    std::printf("criterion %d %s: %s (%s)\n", k, o.pass ? "PASS" : "FAIL", title, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  };

  double t_flat = 0;
  const Report flat = timed(run_flatness, "flatness", t_flat);
  {
    Outcome o = require_all(flat, [](const CheckRecord& c) { return starts_with(c.name, "flatness "); }, 12);
    o = merge(o, require_all(flat, [](const CheckRecord& c) { return contains(c.name, " mutant"); }, 4));
    report(1, "flatness on the (n,m) grid, 25 points each, mutant control fails", within(o, t_flat, 60));
  }
  report(2, "equivariance for all simple transpositions",
         require_all(flat, [](const CheckRecord& c) { return starts_with(c.name, "equivariance "); }, 12));

  double t_rel = 0;
  const Report rel = timed(run_relations, "relations", t_rel);
  {
    Outcome o = require_all(rel, [](const CheckRecord& c) { return starts_with(c.name, "sl_"); }, 14);
    o = merge(o, require_all(rel, [](const CheckRecord& c) { return starts_with(c.name, "C W "); }, 5 * 3 * 7));
    report(3, "generic relation suites for t = kappa (sl_3, sl_4) and t = k s (A2 B2 G2 A3 B3)", o);
  }

  double t_roots = 0;
  const Report roots = timed(run_roots, "roots", t_roots);
  {
    Outcome o = require_all(roots, [](const CheckRecord& c) { return contains(c.name, "eta identity (float)"); }, 5);
    o = merge(o, require_all(roots, [](const CheckRecord& c) { return contains(c.name, "eta identity (exact)"); }, 5));
    report(4, "eta identity: <= 1e-12 at 100 complex points, exact zero at rational points", o);
  }
  {
    Outcome o = require_all(roots, [](const CheckRecord& c) { return contains(c.name, "inversion decomposition (literal)"); }, 5);
    const Outcome corrected =
        require_all(roots, [](const CheckRecord& c) { return contains(c.name, "inversion decomposition (corrected)"); }, 5);
    o.detail += "; corrected statement over all complete rank-2 subsystems containing alpha: " +
                std::string(corrected.pass ? "holds" : "fails") + " (" + corrected.detail + ")";
    report(5, "inversion-set decomposition, exhaustive in A2 B2 G2 and 50 pairs in A3 B3", o);
  }

  double t_yang = 0;
  const Report yang = timed(run_yangian, "yangian", t_yang);
  report(6, "RTT, Gelfand-Zetlin and D_i identities for n <= 3, m <= 3",
         require_all(yang, [](const CheckRecord&) { return true; }, 6 * 11));

  double t_qkz = 0;
  const Report qkz = timed(run_qkz, "qkz", t_qkz);
  report(7, "qKZ consistency, lemmas, bispectral identity, QYBE",
         within(require_all(qkz, [](const CheckRecord& c) { return !starts_with(c.name, "negative control"); }, 4 + 2 * 5), t_qkz, 120));

  double t_daha = 0;
  const Report daha = timed(run_daha, "daha", t_daha);
  {
    Outcome o = require_all(daha, [](const CheckRecord& c) { return starts_with(c.name, "V[0] "); }, 10);
    o = merge(o, require_all(daha, [](const CheckRecord& c) { return contains(c.name, "non-small"); }, 1));
    o = merge(o, require_all(daha, [](const CheckRecord& c) { return starts_with(c.name, "C W "); }, 5 * 6));
    report(8, "dAHA on (C^2)^2 and (C^3)^3, AKZ equality, intertwiner, non-small control", o);
  }

  double t_mono = 0;
  const Report mono = timed(run_monodromy, "monodromy", t_mono);
  {
    Outcome o = require_all(
        mono,
        [](const CheckRecord& c) {
          return (starts_with(c.name, "braid ") && !contains(c.name, "lambda")) || starts_with(c.name, "inverse path") ||
                 c.name == "contractible loop";
        },
        3 + 3 + 1);
    report(9, "affine A2 monodromy on (C^3)^2: braid <= 1e-6, loops <= 10 tol", within(o, t_mono, 300));
  }

  double t_tits = 0;
  const Report tits = timed(run_tits, "tits", t_tits);
  {
    Outcome o = require_all(tits, [](const CheckRecord& c) { return contains(c.name, "braid"); }, 10);
    o = merge(o, require_all(tits, [](const CheckRecord& c) { return contains(c.name, "Z order"); }, 4));
    o = merge(o, require_all(tits, [](const CheckRecord& c) { return contains(c.name, "tau diagonal monomial"); }, 2));
    o = merge(o, require_all(tits, [](const CheckRecord& c) { return contains(c.name, "canonical lift not equivariant"); }, 1));
    o = merge(o, require_all(tits, [](const CheckRecord&) { return true; }, 1));
    report(10, "Tits extensions: braid1-braid5, |Z| = 2^rank, tau monomial, sl_3 remark", o);
  }

  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
