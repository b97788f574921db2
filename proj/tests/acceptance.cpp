// Runs every acceptance criterion and prints one PASS/FAIL line per criterion,
// followed by the individual checks. Exit status is nonzero if any blocking
// check fails.

#include <crownvol/acceptance.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>

int main() {
  using namespace crownvol;
  AcceptanceOptions opt;
  bool all_ok = true;
  std::vector<std::string> summary;
  for (const auto& c : acceptance_criteria()) {
    auto t0 = std::chrono::steady_clock::now();
    auto checks = run_criterion(c, opt);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = true;
    bool blocking = false;
    for (const auto& r : checks) {
      ok = ok && r.ok();
      blocking = blocking || r.blocking;
    }
    if (!ok && blocking) all_ok = false;
    char line[256];
    std::snprintf(line, sizeof line, "%s criterion %2d: %s (%zu checks, %.1f s)%s", ok ? "PASS" : "FAIL", c.id,
                  c.title.c_str(), checks.size(), secs, blocking ? "" : " [report only]");
    std::cout << line << "\n";
    summary.emplace_back(line);
    for (const auto& r : checks) {
      std::cout << "    " << r.status << "  " << r.check << " | expected " << r.expected << " | got " << r.got
                << " | tol " << r.tolerance << "\n";
    }
    std::cout.flush();
  }
  std::cout << "\nSummary\n";
  for (const auto& s : summary) std::cout << s << "\n";
  return all_ok ? 0 : 1;
}
