#include "trigcas/trigcas.h"

#include "trigcas/suites.hpp"

#include <cerrno>
#include <cstdlib>
#include <new>
#include <string>

struct trigcas_config {
  trigcas::RunConfig config;
};

struct trigcas_run {
  trigcas::Report report;
  std::string json;
};

namespace {

thread_local std::string last_error;

trigcas_status fail(trigcas_status s, const std::string& message) {
  last_error = message;
  return s;
}

trigcas_status status_of(const trigcas::Error& e) {
  return e.kind() == trigcas::ErrorKind::NumericalBreakdown ? TRIGCAS_NUMERICAL : TRIGCAS_USAGE;
}

long parse_long(const std::string& v) {
  char* end = nullptr;
  errno = 0;
  const long x = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno != 0) throw trigcas::Error(trigcas::ErrorKind::Precondition, "not an integer: '" + v + "'");
  return x;
}

bool parse_bool(const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw trigcas::Error(trigcas::ErrorKind::Precondition, "not a boolean: '" + v + "'");
}

void set_field(trigcas::RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "suite") c.suite = value;
  else if (key == "type") c.type = value;
  else if (key == "n") c.n = static_cast<int>(parse_long(value));
  else if (key == "m") c.m = static_cast<int>(parse_long(value));
  else if (key == "a") c.a = trigcas::parse_rational_list(value);
  else if (key == "kappa-step") c.kappa_step = trigcas::parse_rational(value);
  else if (key == "lambda") c.lambda = trigcas::parse_rational(value);
  else if (key == "tol") {
    char* end = nullptr;
    const double t = std::strtod(value.c_str(), &end);
    if (value.empty() || *end != '\0') throw trigcas::Error(trigcas::ErrorKind::Precondition, "not a number: '" + value + "'");
    c.tol = t;
  } else if (key == "seed") {
    const long s = parse_long(value);
    if (s < 0) throw trigcas::Error(trigcas::ErrorKind::Precondition, "seed must be nonnegative");
    c.seed = static_cast<unsigned long long>(s);
  } else if (key == "negative-control") c.negative_control = parse_bool(value);
  else if (key == "omit-timing") c.omit_timing = parse_bool(value);
  else if (key == "out") c.out = value;
  else throw trigcas::Error(trigcas::ErrorKind::Precondition, "unknown configuration key '" + key + "'");
}

}  // namespace

extern "C" {

const char* trigcas_version(void) { return trigcas::kToolVersion; }

const char* trigcas_last_error(void) { return last_error.c_str(); }

trigcas_config* trigcas_config_new(void) { return new (std::nothrow) trigcas_config(); }

void trigcas_config_free(trigcas_config* config) { delete config; }

trigcas_status trigcas_config_set(trigcas_config* config, const char* key, const char* value) {
  if (config == nullptr || key == nullptr || value == nullptr) return fail(TRIGCAS_USAGE, "null argument");
  try {
    set_field(config->config, key, value);
    return TRIGCAS_OK;
  } catch (const trigcas::Error& e) {
    return fail(TRIGCAS_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(TRIGCAS_INTERNAL, e.what());
  }
}

trigcas_status trigcas_run_suite(const trigcas_config* config, trigcas_run** out) {
  if (out == nullptr) return fail(TRIGCAS_USAGE, "null output handle");
  *out = nullptr;
  if (config == nullptr) return fail(TRIGCAS_USAGE, "null configuration");
  try {
    auto* run = new trigcas_run();
    try {
      run->report = trigcas::run(config->config);
      run->json = run->report.dump();
    } catch (...) {
      delete run;
      throw;
    }
    *out = run;
    const auto s = static_cast<trigcas_status>(run->report.exit_code());
    if (s == TRIGCAS_NUMERICAL) last_error = run->report.breakdown;
    return s;
  } catch (const trigcas::Error& e) {
    return fail(status_of(e), e.what());
  } catch (const std::exception& e) {
    return fail(TRIGCAS_INTERNAL, e.what());
  }
}

void trigcas_run_free(trigcas_run* run) { delete run; }

trigcas_status trigcas_run_status(const trigcas_run* run) {
  if (run == nullptr) return fail(TRIGCAS_USAGE, "null run");
  return static_cast<trigcas_status>(run->report.exit_code());
}

size_t trigcas_run_check_count(const trigcas_run* run) { return run == nullptr ? 0 : run->report.checks.size(); }

trigcas_status trigcas_run_check(const trigcas_run* run, size_t index, const char** name, int* pass) {
  if (run == nullptr) return fail(TRIGCAS_USAGE, "null run");
  if (index >= run->report.checks.size()) return fail(TRIGCAS_USAGE, "check index out of range");
  const auto& c = run->report.checks[index];
  if (name != nullptr) *name = c.name.c_str();
  if (pass != nullptr) *pass = c.pass ? 1 : 0;
  return TRIGCAS_OK;
}

const char* trigcas_run_json(const trigcas_run* run) { return run == nullptr ? nullptr : run->json.c_str(); }

trigcas_status trigcas_run_write(const trigcas_run* run, const char* path) {
  if (run == nullptr || path == nullptr) return fail(TRIGCAS_USAGE, "null argument");
  try {
    trigcas::write_atomic(path, run->json);
    return TRIGCAS_OK;
  } catch (const std::exception& e) {
    return fail(TRIGCAS_USAGE, e.what());
  }
}

}  // extern "C"
