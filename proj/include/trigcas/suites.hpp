// Verification suites behind the command line driver and the C API.
#pragma once

#include "trigcas/report.hpp"

#include <string>
#include <vector>

namespace trigcas {

// roots, relations, flatness, yangian, qkz, daha, monodromy, tits (the order of "all").
const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& s);

// Throws Error(Precondition) describing the first invalid field.
void validate(const RunConfig& config);

// Runs one suite (or all of them) into a report.  Numerical breakdowns are
// caught and recorded in Report::breakdown; configuration errors propagate.
Report run(const RunConfig& config);

// Single suites; each appends to report.
void run_roots(const RunConfig& c, Report& r);
void run_flatness(const RunConfig& c, Report& r);
void run_relations(const RunConfig& c, Report& r);
void run_yangian(const RunConfig& c, Report& r);
void run_qkz(const RunConfig& c, Report& r);
void run_daha(const RunConfig& c, Report& r);
void run_monodromy(const RunConfig& c, Report& r);
void run_tits(const RunConfig& c, Report& r);

}  // namespace trigcas
