#include "trigcas/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace trigcas {

namespace {

const char* kind_name(CheckKind k) {
  switch (k) {
    case CheckKind::Exact: return "exact";
    case CheckKind::Float: return "float";
    case CheckKind::Boolean: return "boolean";
  }
  return "exact";
}

nlohmann::json complex_json(const Complex& c) { return nlohmann::json::array({c.real(), c.imag()}); }

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& x : c.a) a.push_back(to_string(x));
  return {
      {"suite", c.suite},
      {"type", c.type},
      {"n", c.n},
      {"m", c.m},
      {"a", a},
      {"kappa_step", to_string(c.kappa_step)},
      {"lambda", to_string(c.lambda)},
      {"tol", c.tol},
      {"seed", c.seed},
      {"negative_control", c.negative_control},
      {"omit_timing", c.omit_timing},
  };
}

Rational parse_rational(const std::string& s) {
  const std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    std::size_t k = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) k = 1;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw Error(ErrorKind::Precondition, "not a rational number: '" + s + "'");
  mpz_class p(num[0] == '+' ? num.substr(1) : num, 10), q(den, 10);
  if (q == 0) throw Error(ErrorKind::Precondition, "zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error(ErrorKind::Precondition, "empty rational list");
  return out;
}

CheckRecord exact_check(std::string suite, std::string name, std::string anchor, nlohmann::json params,
                        const Rational& residual, bool expect_zero) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.parameters = std::move(params);
  r.kind = CheckKind::Exact;
  r.expect_zero = expect_zero;
  r.exact_residual = residual;
  r.pass = (sgn(residual) == 0) == expect_zero;
  return r;
}

CheckRecord float_check(std::string suite, std::string name, std::string anchor, nlohmann::json params,
                        double residual, double tolerance) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.parameters = std::move(params);
  r.kind = CheckKind::Float;
  r.float_residual = residual;
  r.tolerance = tolerance;
  r.pass = std::isfinite(residual) && residual <= tolerance;
  return r;
}

CheckRecord bool_check(std::string suite, std::string name, std::string anchor, nlohmann::json params, bool pass) {
  CheckRecord r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.parameters = std::move(params);
  r.kind = CheckKind::Boolean;
  r.exact_residual = pass ? 0 : 1;
  r.pass = pass;
  return r;
}

bool Report::pass() const { return breakdown.empty() && failures() == 0; }

std::size_t Report::failures() const {
  std::size_t k = 0;
  for (const auto& c : checks)
    if (!c.pass) ++k;
  return k;
}

int Report::exit_code() const {
  if (!breakdown.empty()) return 3;
  return failures() == 0 ? 0 : 1;
}

nlohmann::json Report::to_json() const {
  nlohmann::json checks_json = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json j = {
        {"suite", c.suite},
        {"name", c.name},
        {"anchor", c.anchor},
        {"parameters", c.parameters},
        {"kind", kind_name(c.kind)},
        {"expect_zero", c.expect_zero},
        {"pass", c.pass},
    };
    if (c.kind == CheckKind::Float) {
      j["residual"] = c.float_residual;
      j["tolerance"] = c.tolerance;
    } else {
      // Exact zero prints as "0"; other residuals as "p/q".
      j["residual"] = sgn(c.exact_residual) == 0 ? std::string("0") : to_string(c.exact_residual);
    }
    if (!config.omit_timing) j["wall_time"] = c.wall_time;
    checks_json.push_back(std::move(j));
  }
  nlohmann::json mono = nlohmann::json::array();
  for (const auto& m : monodromy) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.matrix.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.matrix.cols(); ++j) row.push_back(complex_json(m.matrix(i, j)));
      rows.push_back(std::move(row));
    }
    nlohmann::json ev = nlohmann::json::array();
    for (const auto& e : m.eigenvalues) ev.push_back(complex_json(e));
    mono.push_back({{"generator", m.generator}, {"lambda", m.lambda}, {"tolerance", m.tolerance}, {"matrix", rows}, {"eigenvalues", ev}});
  }
  nlohmann::json out = {
      {"tool", "trigcas"},
      {"version", kToolVersion},
      {"config", trigcas::to_json(config)},
      {"suites", suites},
      {"checks", checks_json},
      {"monodromy", mono},
      {"summary", {{"checks", checks.size()}, {"failures", failures()}, {"pass", pass()}, {"exit_code", exit_code()}}},
  };
  if (!breakdown.empty()) out["breakdown"] = breakdown;
  return out;
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorKind::Precondition, "cannot open '" + tmp + "' for writing");
    f << content;
    f.flush();
    if (!f) throw Error(ErrorKind::Precondition, "write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw Error(ErrorKind::Precondition, "cannot move report into '" + path + "'");
  }
}

}  // namespace trigcas
