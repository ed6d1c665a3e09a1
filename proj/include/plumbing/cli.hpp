#pragma once

// plumbing-hom <build|dims|basis|mul|pairing|verify> [flags]
//
// Exit codes: 0 success, 1 a check failed, 2 configuration or parse error
// (a JSON diagnostic goes to stderr), 3 factors that do not compose.

#include <iosfwd>
#include <string>
#include <vector>

namespace plumbing::cli {

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plumbing::cli
