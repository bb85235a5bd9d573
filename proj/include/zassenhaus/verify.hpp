#pragma once

#include <string>
#include <vector>

namespace zassenhaus {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail; // first counterexample when failing
};

/// Runs one of the named identity suites (xmp, resum, duality, bch,
/// classical) or all of them, at the desk-scale bounds the identities are
/// certified for. Throws on an unknown suite name.
std::vector<Check> verify_suite(const std::string &suite);

bool all_passed(const std::vector<Check> &checks);

} // namespace zassenhaus
