#pragma once

#include <string>
#include <vector>

namespace zetalab::cli {

// Parses argv and executes the mapped library operation. Results go to
// --out when given, standard output otherwise. Returns 0 on success, 1 on
// argument errors, 2 on numeric non-convergence or domain errors.
int run(int argc, const char* const* argv);
int run(const std::vector<std::string>& args);  // without program name

}  // namespace zetalab::cli
