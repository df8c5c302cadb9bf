#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncfapprox/approx.hpp"

namespace ncfapprox::cli {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Every M value produced while checking, with the R of its base.
struct MRecord {
  std::string label;
  std::optional<QuadNum> exact;
  double estimate = 0.0;
  long r = 0;
};

struct Context {
  unsigned seed = 1;
  std::vector<MRecord> produced;

  void record(const std::string& label, const MResult& m, long r);
};

struct Criterion {
  int id;
  std::string_view title;
  std::vector<Check> (*run)(Context&);
};

/// The twelve acceptance criteria in order. Criterion 9 checks ctx.produced,
/// so it belongs after the others.
const std::vector<Criterion>& criteria();

/// Checks every recorded M against 1/4 and (1/4)(1 - 1/R).
std::vector<Check> upper_bound_checks(const Context& ctx);

/// verify suites: identities, thm1, thm2, thm3, table, examples, oracle.
const std::vector<std::string_view>& suite_names();
std::vector<Check> run_suite(std::string_view name, Context& ctx);

}  // namespace ncfapprox::cli
