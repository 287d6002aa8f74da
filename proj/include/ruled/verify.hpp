#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ruled::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Chart-map identity suite loaded from the fixture file. With `only` set,
/// runs a single identity (its negative control instead when `flip_sign`);
/// otherwise runs every identity and every negative control.
std::vector<Check> run_symbolic_suite(const std::string& fixtures_path,
                                      const std::optional<std::string>& only = std::nullopt,
                                      bool flip_sign = false);

/// Exact checks on the square-torus model: fixed loci, principality of the
/// divisor identities, Jacobian component location, covering genera.
std::vector<Check> run_elliptic_suite();

inline bool all_pass(const std::vector<Check>& checks) {
  for (const Check& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

}  // namespace ruled::verify
