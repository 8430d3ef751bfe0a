#include "trigcas/report.hpp"
#include "trigcas/suites.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace trigcas;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-6/4") == rat(-3, 2));
  CHECK(parse_rational("+2/3") == rat(2, 3));
  for (const char* bad : {"", "1/0", "a", "1/-2", "1.5", "/3", "-"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK(parse_rational_list("0,1/3,-2") == std::vector<Rational>{rat(0), rat(1, 3), rat(-2)});
  CHECK_THROWS_AS(parse_rational_list("1,,2"), Error);
}

TEST_CASE("check records") {
  CHECK(exact_check("s", "n", "a", {}, rat(0)).pass);
  CHECK_FALSE(exact_check("s", "n", "a", {}, rat(1, 2)).pass);
  CHECK(exact_check("s", "n", "a", {}, rat(1, 2), false).pass);
  CHECK_FALSE(exact_check("s", "n", "a", {}, rat(0), false).pass);
  CHECK(float_check("s", "n", "a", {}, 1e-12, 1e-10).pass);
  CHECK_FALSE(float_check("s", "n", "a", {}, 1e-8, 1e-10).pass);
  CHECK_FALSE(float_check("s", "n", "a", {}, std::nan(""), 1e-10).pass);
}

TEST_CASE("report serialization and exit codes") {
  Report r;
  r.config.omit_timing = true;
  r.checks.push_back(exact_check("s", "exact", "anchor", {{"k", 1}}, rat(3, 4)));
  r.checks.push_back(float_check("s", "float", "anchor", {}, 0.5, 1.0));
  CHECK(r.exit_code() == 1);
  const auto j = nlohmann::json::parse(r.dump());
  CHECK(j["checks"][0]["residual"] == "3/4");
  CHECK(j["checks"][0]["kind"] == "exact");
  CHECK(j["checks"][1]["residual"] == 0.5);
  CHECK(j["checks"][0].count("wall_time") == 0);
  CHECK(j["summary"]["failures"] == 1);
  CHECK(j["tool"] == "trigcas");
  r.breakdown = "step underflow";
  CHECK(r.exit_code() == 3);
}

TEST_CASE("atomic write replaces the target") {
  const std::string path = "trigcas_report_test.json";
  write_atomic(path, "first");
  write_atomic(path, "second");
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == "second");
  std::ifstream tmp(path + ".tmp");
  CHECK_FALSE(tmp.good());
  std::remove(path.c_str());
}

TEST_CASE("configuration validation") {
  RunConfig c;
  c.suite = "nope";
  CHECK_THROWS_AS(validate(c), Error);
  c.suite = "flatness";
  CHECK_NOTHROW(validate(c));
  c.type = "Q7";
  CHECK_THROWS_AS(validate(c), Error);
  c.type.clear();
  c.lambda = 0;
  CHECK_THROWS_AS(validate(c), Error);
  c.lambda = 1;
  c.tol = 0;
  CHECK_THROWS_AS(validate(c), Error);
  c.tol = 1e-10;
  c.m = 2;
  c.a = {rat(1)};
  CHECK_THROWS_AS(validate(c), Error);
  for (const auto& s : suite_names()) CHECK(is_suite_name(s));
  CHECK(is_suite_name("all"));
}

TEST_CASE("flatness suite: pass, negative control and byte identity") {
  RunConfig c;
  c.suite = "flatness";
  c.n = 2;
  c.m = 2;
  c.seed = 7;
  c.omit_timing = true;
  const Report r1 = run(c), r2 = run(c);
  CHECK(r1.exit_code() == 0);
  CHECK(r1.dump() == r2.dump());
  CHECK_FALSE(r1.checks.empty());
  for (const auto& k : r1.checks) CHECK_FALSE(k.anchor.empty());
  c.negative_control = true;
  CHECK(run(c).exit_code() == 1);
  c.negative_control = false;
  c.seed = 8;
  CHECK(run(c).dump() != r1.dump());
}

TEST_CASE("every suite appears in the combined report") {
  RunConfig c;
  c.suite = "all";
  c.omit_timing = true;
  const Report r = run(c);
  CHECK(r.suites == suite_names());
  for (const auto& s : suite_names()) {
    bool seen = false;
    for (const auto& k : r.checks) seen = seen || k.suite == s;
    CAPTURE(s);
    CHECK(seen);
  }
  CHECK(r.monodromy.size() == 3);
  const auto j = r.to_json();
  CHECK(j["monodromy"][0]["matrix"].size() == 9);
  CHECK(j["monodromy"][0]["eigenvalues"].size() == 9);
}
