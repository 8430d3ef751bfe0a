// Command line driver over the C API.  Exit codes: 0 pass, 1 check failure,
// 2 usage, 3 numerical breakdown.
#include "trigcas/trigcas.h"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace {

using ConfigPtr = std::unique_ptr<trigcas_config, decltype(&trigcas_config_free)>;
using RunPtr = std::unique_ptr<trigcas_run, decltype(&trigcas_run_free)>;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for trigonometric Casimir connections"};
  std::string suite = "all", type, n, m, a, kappa_step, lambda, tol, seed, out;
  bool negative_control = false, omit_timing = false;
  app.add_option("--suite", suite, "roots, relations, flatness, yangian, qkz, daha, monodromy, tits or all")->capture_default_str();
  app.add_option("--type", type, "root system label (A1-A4, B2, B3, C3, D4, G2)");
  app.add_option("--n", n, "gl_n rank parameter");
  app.add_option("--m", m, "number of tensor factors");
  app.add_option("--a", a, "evaluation points, comma separated rationals");
  app.add_option("--kappa-step", kappa_step, "qKZ step (rational)");
  app.add_option("--lambda", lambda, "scaling: the connection is multiplied by 1/lambda (rational)");
  app.add_option("--tol", tol, "ODE tolerance for the monodromy suite");
  app.add_option("--seed", seed, "seed for random rational points");
  app.add_option("--out", out, "report path; default $TRIGCAS_OUT_DIR/report_<suite>.json, else stdout");
  app.add_flag("--negative-control", negative_control, "replace the checked objects by mutated ones");
  app.add_flag("--omit-timing", omit_timing, "drop wall times so reports are byte-identical");
  app.add_flag_callback("--version", [] {
    std::cout << "trigcas " << trigcas_version() << "\n";
    std::exit(0);
  }, "print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  ConfigPtr config(trigcas_config_new(), &trigcas_config_free);
  if (!config) {
    std::cerr << "error: out of memory\n";
    return 4;
  }
  std::vector<std::pair<const char*, std::string>> fields = {{"suite", suite}, {"type", type}, {"n", n}, {"m", m},
                                                             {"a", a}, {"kappa-step", kappa_step}, {"lambda", lambda},
                                                             {"tol", tol}, {"seed", seed}};
  if (negative_control) fields.emplace_back("negative-control", "true");
  if (omit_timing) fields.emplace_back("omit-timing", "true");
  for (const auto& [key, value] : fields) {
    if (value.empty()) continue;
    if (trigcas_config_set(config.get(), key, value.c_str()) != TRIGCAS_OK) {
      std::cerr << "error: --" << key << ": " << trigcas_last_error() << "\n";
      return 2;
    }
  }

  trigcas_run* raw = nullptr;
  const trigcas_status status = trigcas_run_suite(config.get(), &raw);
  RunPtr run(raw, &trigcas_run_free);
  if (!run) {
    std::cerr << "error: " << trigcas_last_error() << "\n";
    return status == TRIGCAS_OK ? 4 : static_cast<int>(status);
  }

  std::string path = out;
  if (path.empty()) {
    if (const char* dir = std::getenv("TRIGCAS_OUT_DIR"); dir != nullptr && *dir != '\0')
      path = std::string(dir) + "/report_" + suite + ".json";
  }
  if (path.empty()) {
    std::fputs(trigcas_run_json(run.get()), stdout);
  } else if (trigcas_run_write(run.get(), path.c_str()) != TRIGCAS_OK) {
    std::cerr << "error: " << trigcas_last_error() << "\n";
    return 2;
  }

  const std::size_t count = trigcas_run_check_count(run.get());
  std::size_t failed = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const char* name = nullptr;
    int pass = 0;
    trigcas_run_check(run.get(), k, &name, &pass);
    if (!pass) {
      ++failed;
      std::cerr << "FAIL " << name << "\n";
    }
  }
  std::cerr << suite << ": " << count - failed << "/" << count << " checks passed";
  if (status == TRIGCAS_NUMERICAL) std::cerr << ", numerical breakdown: " << trigcas_last_error();
  std::cerr << "\n";
  return static_cast<int>(status);
}
