#include <algorithm>
#include <iostream>
#include <map>

#include "criteria.hpp"

using namespace ncfapprox::cli;

int main(int argc, char** argv) {
  const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
  Context ctx;
  std::map<int, std::vector<Check>> results;
  // Criterion 9 comes last in criteria() so it sees every recorded M.
  for (const auto& c : criteria()) {
    try {
      results[c.id] = c.run(ctx);
    } catch (const std::exception& e) {
      results[c.id] = {Check{"criterion raised", false, e.what()}};
    }
  }
  int failed = 0;
  for (const auto& [id, checks] : results) {
    const bool ok = !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& k) { return k.passed; });
    std::cout << "Criterion " << id << ": " << (ok ? "PASS" : "FAIL") << "\n";
    for (const auto& k : checks) {
      if (verbose || !k.passed) {
        std::cout << "    " << (k.passed ? "ok   " : "FAIL ") << k.name << (k.detail.empty() ? "" : "  [" + k.detail + "]")
                  << "\n";
      }
    }
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
