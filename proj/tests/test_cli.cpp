#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = ncfapprox::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
  std::ifstream in(std::string(GOLDEN_DIR) + "/" + name + ".json");
  REQUIRE(in);
  return json::parse(in);
}

void check_golden(const std::string& name, std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const Result r = run(args);
  INFO(name << ": " << r.err);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out) == golden(name));
}

}  // namespace

TEST_CASE("cli golden json") {
  check_golden("bound_report_3", {"bound", "report", "--r", "3", "--digits", "6"});
  check_golden("bound_report_5", {"bound", "report", "--r", "5"});
  check_golden("bound_table", {"bound", "table", "--digits", "6"});
  check_golden("ncf_value_35", {"ncf", "value", "[0; (3,5)*]-"});
  check_golden("ncf_expand_5_7", {"ncf", "expand", "5/7"});
  check_golden("gamma_expand_half", {"gamma", "expand", "--alpha", "[0;(3)*]-", "1/2"});
  check_golden("gamma_star_35", {"gamma", "star", "--alpha", "[0;(3,5)*]-"});
  check_golden("gamma_reconstruct_t", {"gamma", "reconstruct", "--alpha", "[0;(3)*]-", "--t", "[(1,-1)*]"});
  check_golden("m_exact_3_sqrt5", {"approx", "m", "--alpha", "[0;(3)*]-", "--gamma", "(0+1*sqrt(5))/5", "--exact"});
  check_golden("m_upper_3_half", {"approx", "m", "--alpha", "[0;(3)*]-", "--gamma", "1/2"});
  check_golden("m_estimate_3_sqrt5",
               {"approx", "m", "--alpha", "[0;(3)*]-", "--gamma", "(0+1*sqrt(5))/5", "--estimate", "12", "--digits", "8"});
  check_golden("rho_search_35", {"approx", "rho-search", "--alpha", "[0;(3,5)*]-", "--period-mult", "2"});
  check_golden("verify_table", {"verify", "table"});
}

TEST_CASE("cli text output") {
  const Result r = run({"bound", "report", "--r", "3", "--digits", "6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("C(3) = 0.054371 = 1/18.392305...") == 0);

  const Result m = run({"approx", "m", "--alpha", "[0;(3)*]-", "--gamma", "(0+1*sqrt(5))/5", "--exact"});
  CHECK(m.out.find("M = (0+1*sqrt(5))/25") != std::string::npos);
  CHECK(m.out.find("witness: residue 1, s1") != std::string::npos);

  const Result v = run({"verify", "table"});
  CHECK(v.code == 0);
  CHECK(v.out.find("PASS table: 13/13 assertions") != std::string::npos);

  // global flags may follow the subcommand
  const Result late = run({"ncf", "value", "[0; (3)*]-", "--digits", "4"});
  CHECK(late.out == "(3-1*sqrt(5))/2 = 0.3820\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"ncf", "value"}).code == 1);
  CHECK(run({"ncf", "value", "[0; 3]", "--frobnicate"}).code == 1);
  CHECK(run({"verify", "nosuch"}).code == 1);
  CHECK(run({"gamma", "reconstruct", "--alpha", "[0;(3)*]-"}).code == 1);
  CHECK(run({"--help"}).code == 0);

  const Result p = run({"ncf", "expand", "(3-"});
  CHECK(p.code == 2);
  CHECK(p.err.find("position 3") != std::string::npos);
  CHECK(run({"ncf", "value", "[0; 1, 3]"}).code == 2);

  CHECK(run({"bound", "report", "--r", "2"}).code == 3);
  CHECK(run({"approx", "m", "--alpha", "[0;(3)*]-", "--gamma", "3*(3-sqrt(5))/2-1"}).code == 3);
  CHECK(run({"approx", "m", "--alpha", "[0;(3)*]-", "--gamma", "1/3", "--estimate", "60"}).code == 3);
}

TEST_CASE("verify report log") {
  const std::string path = (std::filesystem::temp_directory_path() / "ncfapprox_verify.log").string();
  const Result r = run({"verify", "thm3", "--report", path});
  // the R = 5 point of the trend check sits just below 3
  CHECK(r.code == 4);
  std::ifstream in(path);
  std::stringstream log;
  log << in.rdbuf();
  CHECK(log.str().find("FAIL r(5) in (3, 5)") == 0);
  std::remove(path.c_str());
}
