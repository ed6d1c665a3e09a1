#pragma once

// Invariant suites behind `plumbing-hom verify`.  Each check recomputes a
// quantity along two independent routes and compares them exactly.

#include "plumbing/dynkin.hpp"

#include <string>
#include <vector>

namespace plumbing {

struct CheckResult {
    std::string suite;
    std::string check;
    bool pass = true;
    std::string detail;
};

// duality, gap, ginzburg, closed-form, vanishing, rewrite, pairing, ring,
// uv, cy, localization, e6
const std::vector<std::string>& suite_names();

// Runs one suite (or "all") over the degree window [lo, hi].  Suites that
// do not apply to the quiver report a single skipped (passing) check.
// Throws ParseError for an unknown suite.
std::vector<CheckResult> run_suite(const std::string& suite, const DynkinQuiver& q, int lo, int hi);

} // namespace plumbing
