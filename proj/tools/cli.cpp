#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "criteria.hpp"
#include "json_io.hpp"
#include "ncfapprox/parse.hpp"

namespace ncfapprox::cli {

namespace {

struct Globals {
  int digits = 12;
  bool json = false;
};

void print_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << "\n"; }

std::string exact_and_decimal(const QuadNum& x, int digits) {
  return x.to_string() + " = " + to_decimal(x, digits);
}

ordered_json witness_json(const LatticeWitness& w) {
  return {{"equivalent", w.equivalent}, {"m", w.m.get_str()}, {"l", w.l.get_str()}};
}

void print_m(std::ostream& out, const MResult& m, int digits) {
  out << "kind: " << to_string(m.kind) << "\n";
  if (m.kind == MKind::Estimate) {
    out << "estimate: " << m.estimate << "\n";
    out << "band minima:";
    for (double v : m.band_profile) out << " " << v;
    out << "\n";
  } else {
    out << "M = " << exact_and_decimal(m.value, digits) << "\n";
  }
  if (m.witness) {
    out << "witness: residue " << m.witness->residue;
    if (m.witness->j > 0) out << ", s" << m.witness->j;
    out << "\n";
  }
  for (const auto& [k, v] : m.params) out << k << ": " << v << "\n";
  for (const auto& f : m.flags) out << "flag: " << f << "\n";
}

DigitSeq digits_from_options(const NcfExpansion& base, const std::string& b, const std::string& t) {
  DigitList list = parse_digit_list(!b.empty() ? b : t);
  if (!t.empty()) list.is_t = true;
  return to_digit_seq(base, list);
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {
    app_.name("ncfapprox");
    app_.description("Inhomogeneous approximation constants over negative continued fractions");
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--digits", g_.digits, "Decimal digits in printed values")->check(CLI::Range(1, 50));
    app_.add_flag("--json", g_.json, "Print JSON");
    add_ncf();
    add_gamma();
    add_approx();
    add_bound();
    add_verify();
  }

  int run(std::vector<std::string> args) {
    std::reverse(args.begin(), args.end());
    try {
      app_.parse(args);
    } catch (const CLI::ParseError& e) {
      const int code = app_.exit(e, out_, err_);
      return code == 0 ? kOk : kUsage;
    }
    try {
      return action_();
    } catch (const CLI::Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const ParseError& e) {
      err_ << "error: " << e.what() << "\n";
      return kParse;
    } catch (const Error& e) {
      err_ << "error: " << e.what() << "\n";
      return kDomain;
    }
  }

 private:
  template <class F>
  void on(CLI::App* sub, F f) {
    sub->callback([this, f] { action_ = f; });
  }

  void add_ncf() {
    auto* ncf = app_.add_subcommand("ncf", "Negative continued fractions");
    ncf->require_subcommand(1);
    auto* ex = ncf->add_subcommand("expand", "Expansion of a number in (0,1)");
    ex->add_option("x", x_, "Number, e.g. (3-sqrt(5))/2 or 5/7")->required();
    ex->add_option("--max-terms", max_terms_, "Give up after this many terms");
    on(ex, [this] {
      const QuadNum x = parse_number(x_);
      const NcfExpansion e = expand(x, max_terms_);
      if (g_.json) {
        ordered_json j = {{"input", value_json(x, g_.digits)}, {"expansion", ncf_json(e)}};
        print_json(out_, j);
      } else {
        out_ << e.to_string() << "\n";
      }
      return kOk;
    });
    auto* val = ncf->add_subcommand("value", "Value of an expansion");
    val->add_option("ncf", x_, "Expansion, e.g. \"[0; (3,5)*]-\"")->required();
    on(val, [this] {
      const NcfExpansion e = parse_ncf(x_);
      const QuadNum v = value_of(e);
      if (g_.json) {
        ordered_json j = {{"expansion", ncf_json(e)}};
        j.update(value_json(v, g_.digits));
        print_json(out_, j);
      } else {
        out_ << exact_and_decimal(v, g_.digits) << "\n";
      }
      return kOk;
    });
  }

  void add_alpha(CLI::App* sub) {
    sub->add_option("--alpha", alpha_, "Base alpha as an expansion or a quadratic irrational")->required();
  }

  void add_gamma() {
    auto* gamma = app_.add_subcommand("gamma", "Alpha-expansions of gamma");
    gamma->require_subcommand(1);
    auto* ex = gamma->add_subcommand("expand", "Digits of gamma over alpha");
    add_alpha(ex);
    ex->add_option("gamma", x_, "Number")->required();
    on(ex, [this] {
      const NcfExpansion base = parse_expansion(alpha_);
      const QuadNum gamma = parse_number(x_);
      const QuadNum alpha = value_of(base);
      const LatticeWitness w = is_lattice_equivalent(gamma, alpha);
      const bool same_field = gamma.is_rational() || gamma.radicand() == alpha.radicand();
      const DigitSeq d = same_field ? alpha_expand(gamma, base) : alpha_expand_truncated(gamma, base);
      if (g_.json) {
        ordered_json j = {{"gamma", value_json(gamma, g_.digits)}, {"digits", digits_json(d)},
                          {"admissible", d.truncated() ? ordered_json(nullptr) : ordered_json(is_admissible(d))},
                          {"lattice", witness_json(w)}};
        print_json(out_, j);
      } else {
        out_ << d.to_string() << "\n";
        if (!d.truncated()) out_ << d.t_string() << "\n";
        if (w.equivalent) out_ << "lattice: gamma = " << w.m.get_str() << " + " << w.l.get_str() << " alpha\n";
      }
      return kOk;
    });
    auto* star = gamma->add_subcommand("star", "The gamma* digits of an alpha");
    add_alpha(star);
    on(star, [this] {
      const NcfExpansion base = parse_expansion(alpha_);
      const DigitSeq d = gamma_star(base);
      const QuadNum v = gamma_from_digits(d);
      if (g_.json) {
        ordered_json j = {{"digits", digits_json(d)}};
        j.update(value_json(v, g_.digits));
        print_json(out_, j);
      } else {
        out_ << d.t_string() << "\n" << "gamma* = " << exact_and_decimal(v, g_.digits) << "\n";
      }
      return kOk;
    });
    auto* rec = gamma->add_subcommand("reconstruct", "gamma from its digits");
    add_alpha(rec);
    auto* b = rec->add_option("--b", b_list_, "b-digits, e.g. \"[1, (0,2,0)*]\"");
    auto* t = rec->add_option("--t", t_list_, "t-digits, e.g. \"[(1,-1)*]\"");
    b->excludes(t);
    on(rec, [this] {
      if (b_list_.empty() && t_list_.empty()) throw CLI::RequiredError("--b or --t");
      const NcfExpansion base = parse_expansion(alpha_);
      const DigitSeq d = digits_from_options(base, b_list_, t_list_);
      const QuadNum v = gamma_from_digits(d);
      if (g_.json) {
        ordered_json j = {{"digits", digits_json(d)}, {"admissible", is_admissible(d)}};
        j.update(value_json(v, g_.digits));
        print_json(out_, j);
      } else {
        out_ << "gamma = " << exact_and_decimal(v, g_.digits) << "\n";
        if (!is_admissible(d)) out_ << "warning: digit sequence is not admissible\n";
      }
      return kOk;
    });
  }

  void add_approx() {
    auto* approx = app_.add_subcommand("approx", "Approximation constants");
    approx->require_subcommand(1);
    auto* m = approx->add_subcommand("m", "M(alpha, gamma)");
    add_alpha(m);
    m->add_option("--gamma", gamma_, "gamma as a number")->required();
    auto* exact = m->add_flag("--exact", exact_, "Exact value from the digit period (default)");
    auto* est = m->add_option("--estimate", bands_, "Band estimate over this many dyadic bands");
    exact->excludes(est);
    on(m, [this] {
      const NcfExpansion base = parse_expansion(alpha_);
      const QuadNum gamma = parse_number(gamma_);
      if (bands_ > 0) {
        const MResult r = m_estimate(value_of(base), gamma, bands_);
        if (g_.json) {
          print_json(out_, mresult_json(r, g_.digits));
        } else {
          print_m(out_, r, g_.digits);
        }
        return kOk;
      }
      const DigitSeq d = alpha_expand(gamma, base);
      const MResult r = m_exact(base, d);
      std::optional<MResult> general;
      if (r.kind == MKind::UpperBoundOnly) general = m_exact_general(base, d);
      if (g_.json) {
        ordered_json j = mresult_json(r, g_.digits);
        j["digits"] = digits_json(d);
        if (general) j["general"] = mresult_json(*general, g_.digits);
        print_json(out_, j);
      } else {
        print_m(out_, r, g_.digits);
        if (general) {
          out_ << "with t = a terms included:\n";
          print_m(out_, *general, g_.digits);
        }
      }
      return kOk;
    });

    auto* rs = approx->add_subcommand("rho-search", "Best periodic gamma for an alpha");
    add_alpha(rs);
    rs->add_option("--period-mult", rho_.period_multiple, "Largest multiple of the base period")
        ->check(CLI::Range(1, 64));
    rs->add_option("--t-cap", rho_.t_cap, "Largest |t_i| tried");
    rs->add_option("--node-budget", rho_.node_budget, "Search node limit");
    rs->add_flag("--no-t-equals-a", no_t_equals_a_, "Skip patterns with t_i = a_i");
    on(rs, [this] {
      const NcfExpansion base = parse_expansion(alpha_);
      RhoSearchOptions o = rho_;
      o.include_t_equals_a = !no_t_equals_a_;
      const RhoSearchResult r = rho_search(base, o);
      const QuadNum gamma = gamma_from_digits(r.digits);
      if (g_.json) {
        ordered_json j = mresult_json(r.m, g_.digits);
        j["digits"] = digits_json(r.digits);
        j["gamma"] = value_json(gamma, g_.digits);
        j["nodes"] = r.nodes;
        print_json(out_, j);
      } else {
        print_m(out_, r.m, g_.digits);
        out_ << r.digits.t_string() << "\n";
        out_ << "gamma = " << exact_and_decimal(gamma, g_.digits) << "\n";
        out_ << "nodes: " << r.nodes << "\n";
      }
      return kOk;
    });
  }

  void add_bound() {
    auto* bound = app_.add_subcommand("bound", "Lower bounds C(R)");
    bound->require_subcommand(1);
    auto* rep = bound->add_subcommand("report", "Constants for one R");
    rep->add_option("--r", r_, "R >= 3")->required();
    on(rep, [this] {
      const BoundReport b = bound_report(r_);
      if (g_.json) {
        print_json(out_, bound_json(b, g_.digits));
        return kOk;
      }
      const std::string rs = std::to_string(b.r);
      out_ << "C(" << rs << ") = " << to_decimal(b.c, g_.digits) << " = 1/" << to_decimal(b.c.reciprocal(), g_.digits)
           << "...\n";
      out_ << "C(" << rs << ") exact: " << b.c.to_string() << "\n";
      out_ << "R* = " << b.r_star << ", R** = " << b.r_star_star << "\n";
      out_ << "beta = " << exact_and_decimal(b.beta, g_.digits) << "\n";
      out_ << "delta = " << exact_and_decimal(b.delta, g_.digits) << "\n";
      if (b.c1) out_ << "C1(" << rs << ") = " << exact_and_decimal(*b.c1, g_.digits) << "\n";
      out_ << "(1/4)(1 - 1/R) = " << exact_and_decimal(b.upper, g_.digits) << "\n";
      out_ << "E" << b.e_index << "(" << rs << ") = " << exact_and_decimal(b.e, g_.digits) << "\n";
      if (b.cstar_inverse) out_ << "C*(" << rs << ")^-1 = " << *b.cstar_inverse << "\n";
      return kOk;
    });
    auto* table = bound->add_subcommand("table", "C(R)^-1 next to C*(R)^-1 for R = 2..8");
    on(table, [this] {
      ordered_json rows = ordered_json::array();
      if (!g_.json) out_ << "R  C(R)^-1       C*(R)^-1\n";
      for (long r = 2; r <= 8; ++r) {
        const std::string cstar(cstar_reference(r));
        std::string cinv = "-";
        if (r >= 3) cinv = to_decimal(bound_report(r).c.reciprocal(), g_.digits);
        if (g_.json) {
          rows.push_back({{"R", r},
                          {"C_inverse", r >= 3 ? ordered_json(cinv) : ordered_json(nullptr)},
                          {"cstar_inverse", cstar}});
        } else {
          out_ << r << "  " << cinv << "  " << cstar << "\n";
        }
      }
      if (g_.json) print_json(out_, rows);
      return kOk;
    });
  }

  void add_verify() {
    auto* v = app_.add_subcommand("verify", "Run a check suite");
    std::string names;
    for (auto n : suite_names()) names += (names.empty() ? "" : ", ") + std::string(n);
    v->add_option("suite", suite_, "One of " + names)->required();
    v->add_option("--seed", seed_, "Seed for the random thm1 suite");
    v->add_option("--report", report_, "Write a plain-text assertion log here");
    on(v, [this] {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite_) == names.end()) {
        err_ << "error: unknown suite '" << suite_ << "'\n";
        return static_cast<int>(kUsage);
      }
      Context ctx;
      ctx.seed = seed_;
      const auto checks = run_suite(suite_, ctx);
      std::size_t failed = 0;
      for (const auto& c : checks) failed += c.passed ? 0 : 1;
      std::ofstream log;
      if (!report_.empty()) {
        log.open(report_);
        if (!log) throw Error(ErrorKind::OutOfRange, "cannot write " + report_);
      }
      const auto line = [](const Check& c) {
        return std::string(c.passed ? "PASS " : "FAIL ") + c.name + (c.detail.empty() ? "" : "  [" + c.detail + "]");
      };
      if (g_.json) {
        ordered_json arr = ordered_json::array();
        for (const auto& c : checks) arr.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        print_json(out_, {{"suite", suite_}, {"passed", failed == 0}, {"failed", failed}, {"checks", arr}});
      } else {
        for (const auto& c : checks) out_ << line(c) << "\n";
        out_ << (failed == 0 ? "PASS" : "FAIL") << " " << suite_ << ": " << checks.size() - failed << "/"
             << checks.size() << " assertions\n";
      }
      if (log) {
        for (const auto& c : checks) log << line(c) << "\n";
        log << (failed == 0 ? "PASS" : "FAIL") << " " << suite_ << "\n";
      }
      return failed == 0 ? static_cast<int>(kOk) : static_cast<int>(kVerifyFailed);
    });
  }

  std::ostream& out_;
  std::ostream& err_;
  CLI::App app_;
  Globals g_;
  std::function<int()> action_;

  std::string x_, alpha_, gamma_, b_list_, t_list_, suite_, report_;
  std::size_t max_terms_ = kDefaultMaxTerms;
  bool exact_ = false;
  int bands_ = 0;
  bool no_t_equals_a_ = false;
  RhoSearchOptions rho_;
  long r_ = 0;
  unsigned seed_ = 1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(args);
}

}  // namespace ncfapprox::cli
