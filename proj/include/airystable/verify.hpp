#ifndef AIRYSTABLE_VERIFY_HPP
#define AIRYSTABLE_VERIFY_HPP

#include <string>
#include <vector>

namespace airystable {

/// One verification check: pass iff actual <= tolerance (targets and
/// tolerances are fixed in code; fixed internal seeds make every suite
/// deterministic).
struct CheckRow {
  std::string id;
  double target;
  double actual;
  double tolerance;
  bool pass;
};

/// Suites: airy, density, bridge, mc, pde, all.
std::vector<std::string> verify_suite_names();
bool is_verify_suite(const std::string& name);

std::vector<CheckRow> verify_suite(const std::string& suite);

}  // namespace airystable

#endif
