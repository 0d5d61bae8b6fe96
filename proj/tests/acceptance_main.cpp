// Acceptance suite: runs every verification check with its pinned tolerance
// and prints one pass/fail line per criterion group.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "airystable/verify.hpp"

namespace {

// Criterion groups in reporting order.
const std::vector<std::vector<std::string>> kGroups = {
    {"airy.oracle."},                                        // 1
    {"airy.anchor.", "airy.triplication."},                  // 2
    {"density.norm."},                                       // 3
    {"density.mellin.", "density.levy."},                    // 4
    {"mc.kanter."},                                          // 5
    {"mc.series."},                                          // 6
    {"bridge.cf.", "bridge.roundtrip", "bridge.frontier", "bridge.reflection",
     "bridge.sigma0", "mc.stable.ks.", "mc.cms."},           // 7
    {"bridge.cauchy."},                                      // 8
    {"pde."},                                                // 9
    {"airy.ode.", "density.sinc.", "density.reduction."},    // 10
};

const char* kGroupNames[] = {
    "series/oracle equivalence",
    "closed-form anchors + triplication",
    "pseudo-density normalization",
    "Wright/Mellin identity + half-stable closed form",
    "subordinator law (Laplace + KS)",
    "MC damped-oscillation representation",
    "stable bridge (cf identity, round trip, KS, reflection)",
    "Cauchy case",
    "Riesz-Feller spectral residual",
    "limits (ODE residual, sinc limit, theta=1 reduction)",
};

bool starts_with(const std::string& s, const std::string& p) {
  return s.rfind(p, 0) == 0;
}

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  std::vector<airystable::CheckRow> rows;
  try {
    rows = airystable::verify_suite("all");
  } catch (const std::exception& e) {
    std::printf("FAIL  acceptance suite aborted: %s\n", e.what());
    return 2;
  }
  const auto t1 = clock::now();
  const double secs =
      std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count() /
      1000.0;

  bool all_pass = true;
  int matched = 0;
  for (size_t g = 0; g < kGroups.size(); ++g) {
    bool pass = true;
    int count = 0;
    double worst_margin = -1e300;
    std::string worst_id;
    for (const auto& r : rows) {
      bool in_group = false;
      for (const auto& p : kGroups[g])
        if (starts_with(r.id, p)) in_group = true;
      if (!in_group) continue;
      ++count;
      ++matched;
      pass = pass && r.pass;
      const double margin = r.actual - r.tolerance;
      if (margin > worst_margin) {
        worst_margin = margin;
        worst_id = r.id;
      }
    }
    all_pass = all_pass && pass && count > 0;
    std::printf("%s  criterion %zu: %s (%d checks, tightest: %s)\n",
                pass && count > 0 ? "PASS" : "FAIL", g + 1, kGroupNames[g],
                count, worst_id.c_str());
  }
  for (const auto& r : rows) {
    if (!r.pass)
      std::printf("      failed check: %s actual=%.6g tolerance=%.6g\n",
                  r.id.c_str(), r.actual, r.tolerance);
  }
  if (matched != static_cast<int>(rows.size())) {
    std::printf("FAIL  %zu checks not mapped to any criterion\n",
                rows.size() - matched);
    all_pass = false;
  }
  std::printf("%s  acceptance suite: %zu checks in %.1f s\n",
              all_pass ? "PASS" : "FAIL", rows.size(), secs);
  if (secs > 600.0) {
    std::printf("FAIL  runtime budget exceeded (600 s)\n");
    all_pass = false;
  }
  return all_pass ? 0 : 1;
}
