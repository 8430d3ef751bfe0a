// Run configuration, check records and JSON reports.
//
// Rationals serialize as "p/q" strings (a zero residual as "0").  Floating residuals serialize as JSON
// numbers.  With omit_timing the report depends only on the configuration.
#pragma once

#include "trigcas/algebra.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace trigcas {

inline constexpr const char* kToolVersion = "1.0.0";

struct RunConfig {
  std::string suite = "all";
  std::string type;             // root system label; empty selects the suite's default list
  int n = 0;                    // 0 selects the suite's default grid
  int m = 0;
  std::vector<Rational> a;      // evaluation points; empty means seeded
  Rational kappa_step{0};       // qKZ step; 0 means seeded
  Rational lambda{1};           // connection scaled by 1/lambda
  double tol = 1e-10;           // ODE tolerance (floating suites only)
  unsigned long long seed = 1;
  bool negative_control = false;
  bool omit_timing = false;
  std::string out;
};

nlohmann::json to_json(const RunConfig& c);
// "p/q", "p" or "-p/q"; throws Precondition otherwise.
Rational parse_rational(const std::string& s);
// Comma separated list of rationals.
std::vector<Rational> parse_rational_list(const std::string& s);

enum class CheckKind { Exact, Float, Boolean };

struct CheckRecord {
  std::string suite;
  std::string name;
  std::string anchor;       // the statement being checked
  nlohmann::json parameters = nlohmann::json::object();
  CheckKind kind = CheckKind::Exact;
  bool expect_zero = true;  // false for negative controls, which must not vanish
  Rational exact_residual{0};
  double float_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double wall_time = 0.0;
};

// pass iff (residual == 0) == expect_zero.
CheckRecord exact_check(std::string suite, std::string name, std::string anchor, nlohmann::json params,
                        const Rational& residual, bool expect_zero = true);
// pass iff residual is finite and <= tolerance.
CheckRecord float_check(std::string suite, std::string name, std::string anchor, nlohmann::json params,
                        double residual, double tolerance);
CheckRecord bool_check(std::string suite, std::string name, std::string anchor, nlohmann::json params, bool pass);

struct MonodromyRecord {
  int generator = 0;
  std::string lambda;
  double tolerance = 0.0;
  CMatrix matrix;
  std::vector<Complex> eigenvalues;
};

struct Report {
  RunConfig config;
  std::vector<std::string> suites;
  std::vector<CheckRecord> checks;
  std::vector<MonodromyRecord> monodromy;
  std::string breakdown;  // set when a numerical breakdown aborted a suite

  bool pass() const;
  std::size_t failures() const;
  // 0 pass, 1 check failure, 3 numerical breakdown.
  int exit_code() const;
  nlohmann::json to_json() const;
  std::string dump() const;
};

// Write to path.tmp then rename over path.
void write_atomic(const std::string& path, const std::string& content);

}  // namespace trigcas
