#include "ncfapprox/approx.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace ncfapprox {

namespace {

using u128 = unsigned __int128;

long positive_mod(long i, long m) {
  long r = i % m;
  return r < 0 ? r + m : r;
}

u128 to_u128(const Integer& v) {
  const Integer lo_mask = (Integer(1) << 64) - 1;
  const Integer hi = v >> 64;
  const Integer lo = v & lo_mask;
  return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

// ||x|| for x = v / 2^128 as a double.
double dist_to_int(u128 v) {
  const u128 w = v > (~static_cast<u128>(0) >> 1) ? static_cast<u128>(0) - v : v;
  return std::ldexp(static_cast<double>(static_cast<std::uint64_t>(w >> 64)), -64) +
         std::ldexp(static_cast<double>(static_cast<std::uint64_t>(w)), -128);
}

void check_unit_interval(const QuadNum& x, const char* name) {
  if (x.sign() <= 0 || x >= QuadNum(1)) {
    throw Error(ErrorKind::OutOfRange, std::string(name) + " = " + x.to_string() + " is not in (0,1)");
  }
}

}  // namespace

const QuadNum& SQuadruple::s(int j) const {
  switch (j) {
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    case 4: return s4;
    default: throw Error(ErrorKind::OutOfRange, "s-index " + std::to_string(j));
  }
}

int SQuadruple::argmin() const {
  int best = 1;
  for (int j = 2; j <= 4; ++j) {
    if (s(j) < s(best)) best = j;
  }
  return best;
}

SQuadruple make_squadruple(long k, const QuadNum& alpha_bar, const QuadNum& alpha_fwd,
                           const DCouple& d) {
  SQuadruple q;
  q.k = k;
  q.alpha_bar = alpha_bar;
  q.alpha_fwd = alpha_fwd;
  q.d = d;
  const QuadNum one = 1;
  const QuadNum den = QuadNum(4) * (one - alpha_bar * alpha_fwd);
  const QuadNum& dm = d.d_minus;
  const QuadNum& dp = d.d_plus;
  q.s1 = (one - alpha_bar + dm) * (one - alpha_fwd + dp) / den;
  q.s2 = (one + alpha_bar + dm) * (one + alpha_fwd - dp) / den;
  q.s3 = (one - alpha_bar - dm) * (one - alpha_fwd - dp) / den;
  q.s4 = (one + alpha_bar - dm) * (one + alpha_fwd + dp) / den;
  return q;
}

SQuadruple s_values(const NcfExpansion& base, const DigitSeq& d, long k, SMode mode) {
  if (mode == SMode::Finite) {
    if (k < 1) throw Error(ErrorKind::OutOfRange, "finite s-values need k >= 1");
    return make_squadruple(k, rev_alpha_bar(base, static_cast<std::size_t>(k)),
                           tail_alpha(base, static_cast<std::size_t>(k)), d_values(d, k));
  }
  const DCouple lim = d_limits(d, k);
  return make_squadruple(lim.k, limit_alpha_bar(base, lim.k),
                         tail_alpha(base, static_cast<std::size_t>(lim.k)), lim);
}

std::string_view to_string(MKind kind) {
  switch (kind) {
    case MKind::Exact: return "Exact";
    case MKind::Estimate: return "Estimate";
    case MKind::UpperBoundOnly: return "UpperBoundOnly";
  }
  return "?";
}

MResult m_exact(const NcfExpansion& base, const DigitSeq& d) {
  if (base.is_finite()) throw Error(ErrorKind::FiniteExpansion, "m_exact needs a periodic base");
  if (!(d.base() == base)) throw Error(ErrorKind::OutOfRange, "digit sequence belongs to another base");
  if (d.truncated()) throw Error(ErrorKind::NotPeriodic, "m_exact needs an eventually periodic gamma");
  const QuadNum alpha = value_of(base);
  const QuadNum gamma = gamma_from_digits(d);
  if (const auto w = is_lattice_equivalent(gamma, alpha); w.equivalent) {
    throw Error(ErrorKind::LatticeGamma, "gamma = " + w.m.get_str() + " + " + w.l.get_str() +
                                             " alpha; use the homogeneous constant");
  }

  MResult out;
  out.params["digit_period"] = std::to_string(d.period_length());
  out.params["digit_preperiod"] = std::to_string(d.preperiod_length());
  const long first = static_cast<long>(d.preperiod_length()) + 1;
  const long n = static_cast<long>(d.period_length());

  std::vector<long> t_equals_a;
  for (long k = first; k < first + n; ++k) {
    if (d.t(k) == base.term(k)) t_equals_a.push_back(k);
  }
  if (!t_equals_a.empty()) {
    out.kind = MKind::UpperBoundOnly;
    bool have = false;
    for (long k : t_equals_a) {
      const QuadNum ab = limit_alpha_bar(base, k);
      const QuadNum af = tail_alpha(base, static_cast<std::size_t>(k));
      const QuadNum bound = ab / (QuadNum(4) * (QuadNum(1) - ab * af));
      if (!have || bound < out.value) {
        out.value = bound;
        out.witness = MWitness{k, 0};
        have = true;
      }
    }
    out.estimate = to_double(out.value);
    return out;
  }

  bool have = false;
  for (const DCouple& lim : d_limits_all(d)) {
    const SQuadruple q = make_squadruple(lim.k, limit_alpha_bar(base, lim.k),
                                         tail_alpha(base, static_cast<std::size_t>(lim.k)), lim);
    const int j = q.argmin();
    if (!have || q.s(j) < out.value) {
      out.value = q.s(j);
      out.witness = MWitness{lim.k, j};
      have = true;
    }
  }
  out.kind = MKind::Exact;
  out.estimate = to_double(out.value);
  return out;
}

LatticeOffset offset_box(double alpha_bar, double alpha_fwd) {
  // |n / q_k| < 1 / (4 af) and c0 + c1 af in (-1, 2) whenever the value is below 1/4
  const double u = 1 / (4 * alpha_fwd) + 1;
  LatticeOffset box;
  box.c1 = static_cast<long>((u + 2 * alpha_bar) / (1 - alpha_bar * alpha_fwd)) + 1;
  box.c0 = static_cast<long>(2 + static_cast<double>(box.c1) * alpha_fwd) + 1;
  return box;
}

namespace {

int standard_index(long c1, long c0) {
  if (c1 == 0 && c0 == 0) return 1;
  if (c1 == 0 && c0 == 1) return 2;
  if (c1 == -1 && c0 == 1) return 3;
  if (c1 == -1 && c0 == 0) return 4;
  return 0;
}

}  // namespace

MResult m_exact_general(const NcfExpansion& base, const DigitSeq& d) {
  if (base.is_finite()) throw Error(ErrorKind::FiniteExpansion, "m_exact_general needs a periodic base");
  if (!(d.base() == base)) throw Error(ErrorKind::OutOfRange, "digit sequence belongs to another base");
  if (d.truncated()) throw Error(ErrorKind::NotPeriodic, "m_exact_general needs an eventually periodic gamma");
  const QuadNum alpha = value_of(base);
  if (const auto w = is_lattice_equivalent(gamma_from_digits(d), alpha); w.equivalent) {
    throw Error(ErrorKind::LatticeGamma, "gamma = " + w.m.get_str() + " + " + w.l.get_str() +
                                             " alpha; use the homogeneous constant");
  }
  MResult out;
  out.kind = MKind::Exact;
  out.params["digit_period"] = std::to_string(d.period_length());
  out.params["digit_preperiod"] = std::to_string(d.preperiod_length());
  const QuadNum one = 1, two = 2;
  bool have = false;
  LatticeOffset arg;
  for (const DCouple& lim : d_limits_all(d)) {
    const QuadNum ab = limit_alpha_bar(base, lim.k);
    const QuadNum af = tail_alpha(base, static_cast<std::size_t>(lim.k));
    const QuadNum den = QuadNum(4) * (one - ab * af);
    const QuadNum base1 = one - ab + lim.d_minus;
    const QuadNum base2 = one - af + lim.d_plus;
    const LatticeOffset box = offset_box(to_double(ab), to_double(af));
    for (long c1 = -box.c1; c1 <= box.c1; ++c1) {
      for (long c0 = -box.c0; c0 <= box.c0; ++c0) {
        const QuadNum l1 = base1 + two * (QuadNum(c1) + QuadNum(c0) * ab);
        const QuadNum l2 = base2 - two * (QuadNum(c0) + QuadNum(c1) * af);
        const QuadNum v = (l1 * l2).abs() / den;
        const int j = standard_index(c1, c0);
        // ties go to the standard offsets
        if (!have || v < out.value || (v == out.value && j != 0 && out.witness->j == 0)) {
          out.value = v;
          out.witness = MWitness{lim.k, j};
          arg = {c1, c0};
          have = true;
        }
      }
    }
  }
  out.params["c1"] = std::to_string(arg.c1);
  out.params["c0"] = std::to_string(arg.c0);
  out.estimate = to_double(out.value);
  return out;
}

MResult m_estimate(const QuadNum& alpha, const QuadNum& gamma, int bands, int max_bands) {
  if (alpha.is_rational()) throw Error(ErrorKind::OutOfRange, "alpha must be irrational");
  check_unit_interval(alpha, "alpha");
  check_unit_interval(gamma, "gamma");
  if (bands < 1) throw Error(ErrorKind::OutOfRange, "need at least one band");
  if (bands > max_bands || bands > 43) {
    throw Error(ErrorKind::PrecisionExhausted,
                std::to_string(bands) + " bands exceed the configured maximum of " +
                    std::to_string(std::min(max_bands, 43)));
  }
  const u128 a = to_u128(scaled_floor(alpha, 128));
  const u128 g = to_u128(scaled_floor(gamma, 128));

  MResult out;
  out.kind = MKind::Estimate;
  out.band_profile.assign(static_cast<std::size_t>(bands), std::numeric_limits<double>::infinity());
  u128 na = 0;  // n * alpha mod 1
  const std::uint64_t end = std::uint64_t{1} << bands;
  for (std::uint64_t n = 1; n < end; ++n) {
    na += a;
    const double pos = dist_to_int(na - g);
    const double neg = dist_to_int(static_cast<u128>(0) - na - g);
    const double v = static_cast<double>(n) * std::min(pos, neg);
    const int band = 63 - __builtin_clzll(n);
    auto& slot = out.band_profile[static_cast<std::size_t>(band)];
    slot = std::min(slot, v);
  }
  const int tail = (bands + 1) / 2;
  double best = std::numeric_limits<double>::infinity();
  for (int k = bands - tail; k < bands; ++k) best = std::min(best, out.band_profile[static_cast<std::size_t>(k)]);
  out.estimate = best;
  out.value = 0;
  out.params["bands"] = std::to_string(bands);
  out.params["max_n"] = std::to_string(end - 1);
  out.params["tail_bands"] = std::to_string(tail);
  return out;
}

MResult rho_lower_via_gamma_star(const NcfExpansion& base) {
  if (base.is_finite()) throw Error(ErrorKind::FiniteExpansion, "gamma* needs a periodic base");
  MResult out = m_exact(base, gamma_star(base));
  if (base.liminf_term() < 3) out.flags.emplace_back("RBelow3");
  return out;
}

namespace {

// Branch and bound over t-patterns of one digit period length N. All bounds
// are in doubles; the final candidates are re-evaluated exactly.
class PatternSearch {
 public:
  PatternSearch(const NcfExpansion& base, std::size_t n, const RhoSearchOptions& options,
                std::uint64_t* nodes)
      : n_(n), nodes_(nodes), budget_(options.node_budget), with_a_(options.include_t_equals_a) {
    const long first = static_cast<long>(base.preperiod_length()) + 1;
    ab_.resize(n);
    af_.resize(n);
    a_.resize(n);
    box_.resize(n);
    for (std::size_t r = 0; r < n; ++r) {
      const long k = first + static_cast<long>(r);
      a_[r] = base.term(k);
      ab_[r] = to_double(limit_alpha_bar(base, k));
      af_[r] = to_double(tail_alpha(base, static_cast<std::size_t>(k)));
      box_[r] = offset_box(ab_[r], af_[r]);
    }
    double pb = 1, pf = 1;
    for (std::size_t r = 0; r < n; ++r) {
      pb *= ab_[r];
      pf *= af_[r];
    }
    w_.assign(n * n, 0.0);
    v_.assign(n * n, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      double prod = 1;
      for (std::size_t h = 0; h < n; ++h) {
        const std::size_t i = (r + n - h) % n;
        prod *= ab_[i];
        w_[r * n + i] += prod / (1 - pb);
      }
      prod = 1;
      for (std::size_t h = 1; h <= n; ++h) {
        prod *= af_[(r + h - 1) % n];
        v_[r * n + (r + h) % n] += prod / (1 - pf);
      }
    }
    cands_.resize(n);
    std::vector<double> lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
      const long cap = options.t_cap;
      long top = a_[i] - 2;
      if (cap >= 0) top = std::min(top, cap);
      if (positive_mod(top - a_[i], 2) != 0) --top;
      for (long m = positive_mod(a_[i], 2); m <= top; m += 2) {
        cands_[i].push_back(m);
        if (m != 0) cands_[i].push_back(-m);
      }
      if (with_a_ && (cap < 0 || a_[i] <= cap)) cands_[i].push_back(a_[i]);
      if (!cands_[i].empty()) {
        lo[i] = static_cast<double>(*std::min_element(cands_[i].begin(), cands_[i].end()));
        hi[i] = static_cast<double>(*std::max_element(cands_[i].begin(), cands_[i].end()));
      }
    }
    // weights are positive, so suffix sums of weight * (min t, max t) bound the unassigned part
    const std::size_t stride = n + 1;
    wlo_.assign(n * stride, 0.0);
    whi_.assign(n * stride, 0.0);
    vlo_.assign(n * stride, 0.0);
    vhi_.assign(n * stride, 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t p = n; p-- > 0;) {
        const std::size_t at = r * stride + p;
        wlo_[at] = wlo_[at + 1] + w_[r * n + p] * lo[p];
        whi_[at] = whi_[at + 1] + w_[r * n + p] * hi[p];
        vlo_[at] = vlo_[at + 1] + v_[r * n + p] * lo[p];
        vhi_[at] = vhi_[at + 1] + v_[r * n + p] * hi[p];
      }
    }
    known_minus_.assign((n + 1) * n, 0.0);
    known_plus_.assign((n + 1) * n, 0.0);
    t_.assign(n, 0);
  }

  bool has_candidates() const {
    return std::all_of(cands_.begin(), cands_.end(), [](const auto& c) { return !c.empty(); });
  }

  // Value of a complete pattern without t_i = a_i.
  double evaluate(const std::vector<long>& t) const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < n_; ++r) {
      double dm = 0, dp = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        dm += w_[r * n_ + i] * static_cast<double>(t[i]);
        dp += v_[r * n_ + i] * static_cast<double>(t[i]);
      }
      best = std::min(best, min_s(r, dm, dp));
    }
    return best;
  }

  void seed(double value) { best_ = std::max(best_, value); }

  void run() { descend(0, 0); }

  double best() const { return best_; }
  const std::vector<std::pair<double, std::vector<long>>>& leaves() const { return leaves_; }

  static constexpr double kTie = 1e-10;

 private:
  double min_s(std::size_t r, double dm, double dp) const {
    const double ab = ab_[r], af = af_[r];
    const double den = 4 * (1 - ab * af);
    const double s1 = (1 - ab + dm) * (1 - af + dp);
    const double s2 = (1 + ab + dm) * (1 + af - dp);
    const double s3 = (1 - ab - dm) * (1 - af - dp);
    const double s4 = (1 + ab - dm) * (1 + af + dp);
    return std::min(std::min(s1, s2), std::min(s3, s4)) / den;
  }

  double min_box(std::size_t r, double dm, double dp) const {
    const double ab = ab_[r], af = af_[r];
    const double b1 = 1 - ab + dm, b2 = 1 - af + dp;
    double best = std::numeric_limits<double>::infinity();
    for (long c1 = -box_[r].c1; c1 <= box_[r].c1; ++c1) {
      for (long c0 = -box_[r].c0; c0 <= box_[r].c0; ++c0) {
        const double l1 = b1 + 2 * (static_cast<double>(c1) + static_cast<double>(c0) * ab);
        const double l2 = b2 - 2 * (static_cast<double>(c0) + static_cast<double>(c1) * af);
        best = std::min(best, std::fabs(l1 * l2));
      }
    }
    return best / (4 * (1 - ab * af));
  }

  static double max_abs(double c, double lo, double hi) {
    return std::max(std::fabs(c + lo), std::fabs(c + hi));
  }

  // Upper bound on the pattern value over all completions of depth p. The four
  // standard offsets are among those m_exact_general minimizes over, so the
  // bound holds with t_i = a_i as well.
  bool prunable(std::size_t p) const {
    const double* km = &known_minus_[p * n_];
    const double* kp = &known_plus_[p * n_];
    const double floor_value = best_ - kTie;
    const std::size_t stride = n_ + 1;
    for (std::size_t r = 0; r < n_; ++r) {
      const double ab = ab_[r], af = af_[r];
      const std::size_t at = r * stride + p;
      const double lo_m = km[r] + wlo_[at], hi_m = km[r] + whi_[at];
      const double lo_p = kp[r] + vlo_[at], hi_p = kp[r] + vhi_[at];
      const double den = 4 * (1 - ab * af);
      const double s1 = max_abs(1 - ab, lo_m, hi_m) * max_abs(1 - af, lo_p, hi_p);
      const double s2 = max_abs(1 + ab, lo_m, hi_m) * max_abs(1 + af, -hi_p, -lo_p);
      const double s3 = max_abs(1 - ab, -hi_m, -lo_m) * max_abs(1 - af, -hi_p, -lo_p);
      const double s4 = max_abs(1 + ab, -hi_m, -lo_m) * max_abs(1 + af, lo_p, hi_p);
      const double ub = std::min(std::min(s1, s2), std::min(s3, s4)) / den;
      if (ub < floor_value) return true;
    }
    return false;
  }

  bool lattice_pattern() const {
    bool all_min = true, all_max = true;
    for (std::size_t i = 0; i < n_; ++i) {
      all_min = all_min && t_[i] == 2 - a_[i];
      all_max = all_max && t_[i] == a_[i] - 2;
    }
    return all_min || all_max;
  }

  // Forbidden blocks on the cyclic word: after t_s = a_s the first entry other
  // than a_j - 2 must exist and must not be a_j.
  bool cyclic_admissible() const {
    for (std::size_t s = 0; s < n_; ++s) {
      if (t_[s] != a_[s]) continue;
      for (std::size_t h = 1; h <= n_; ++h) {
        const std::size_t j = (s + h) % n_;
        if (t_[j] == a_[j] - 2) continue;
        if (t_[j] == a_[j]) return false;
        break;
      }
    }
    return true;
  }

  void leaf(int first_sign) {
    if (lattice_pattern()) return;
    bool has_a = false;
    for (std::size_t i = 0; i < n_; ++i) has_a = has_a || t_[i] == a_[i];
    // t -> -t maps patterns without t_i = a_i onto each other with the same value
    if (!has_a && first_sign < 0) return;
    if (has_a && !cyclic_admissible()) return;
    const double* km = &known_minus_[n_ * n_];
    const double* kp = &known_plus_[n_ * n_];
    double value = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < n_; ++r) {
      value = std::min(value, has_a ? min_box(r, km[r], kp[r]) : min_s(r, km[r], kp[r]));
    }
    if (value > best_ + kTie) leaves_.clear();
    if (value >= best_ - kTie) {
      best_ = std::max(best_, value);
      if (leaves_.size() < kMaxLeaves) leaves_.emplace_back(value, t_);
    }
  }

  void descend(std::size_t p, int first_sign) {
    if (++*nodes_ > budget_) {
      throw Error(ErrorKind::SearchSpaceTooLarge,
                  "node budget of " + std::to_string(budget_) + " exhausted");
    }
    if (p == n_) {
      leaf(first_sign);
      return;
    }
    for (long t : cands_[p]) {
      const int sign = first_sign != 0 ? first_sign : (t > 0) - (t < 0);
      if (sign < 0 && !with_a_) continue;
      t_[p] = t;
      const double* km = &known_minus_[p * n_];
      const double* kp = &known_plus_[p * n_];
      double* nm = &known_minus_[(p + 1) * n_];
      double* np = &known_plus_[(p + 1) * n_];
      for (std::size_t r = 0; r < n_; ++r) {
        nm[r] = km[r] + w_[r * n_ + p] * static_cast<double>(t);
        np[r] = kp[r] + v_[r * n_ + p] * static_cast<double>(t);
      }
      if (prunable(p + 1)) continue;
      descend(p + 1, sign);
    }
    t_[p] = 0;
  }

  static constexpr std::size_t kMaxLeaves = 256;

  std::size_t n_;
  std::uint64_t* nodes_;
  std::uint64_t budget_;
  bool with_a_;
  std::vector<long> a_;
  std::vector<double> ab_, af_;
  std::vector<LatticeOffset> box_;
  std::vector<double> w_, v_, wlo_, whi_, vlo_, vhi_;
  std::vector<std::vector<long>> cands_;
  std::vector<double> known_minus_, known_plus_;
  std::vector<long> t_;
  double best_ = -std::numeric_limits<double>::infinity();
  std::vector<std::pair<double, std::vector<long>>> leaves_;
};

}  // namespace

RhoSearchResult rho_search(const NcfExpansion& base, const RhoSearchOptions& options) {
  if (base.is_finite()) throw Error(ErrorKind::FiniteExpansion, "rho_search needs a periodic base");
  if (options.period_multiple < 1) throw Error(ErrorKind::OutOfRange, "period multiple must be >= 1");
  const std::size_t m = base.period_length();
  const std::size_t pre = base.preperiod_length();
  std::vector<long> t_pre;
  for (std::size_t i = 1; i <= pre; ++i) t_pre.push_back(2 - base.term(static_cast<long>(i)));

  std::vector<int> multiples;
  for (int j = options.period_multiple; j >= 1; --j) {
    const bool covered = std::any_of(multiples.begin(), multiples.end(), [j](int big) { return big % j == 0; });
    if (!covered) multiples.push_back(j);
  }

  std::uint64_t nodes = 0;
  std::vector<std::pair<double, std::vector<long>>> pool;
  double best = -std::numeric_limits<double>::infinity();
  const DigitSeq star = gamma_star(base);
  for (int j : multiples) {
    const std::size_t n = m * static_cast<std::size_t>(j);
    PatternSearch search(base, n, options, &nodes);
    if (!search.has_candidates()) continue;
    search.seed(best);
    // gamma* is a good first incumbent whenever it fits this period
    if (star.preperiod_length() == pre && n % star.period_length() == 0) {
      std::vector<long> t(n);
      const auto tp = star.t_period();
      bool fits = true;
      for (std::size_t i = 0; i < n; ++i) {
        t[i] = tp[i % tp.size()];
        fits = fits && (options.t_cap < 0 || std::abs(t[i]) <= options.t_cap) &&
               std::abs(t[i]) <= base.term(static_cast<long>(pre + i + 1)) - 2;
      }
      if (fits) search.seed(search.evaluate(t));
    }
    search.run();
    best = std::max(best, search.best());
    for (const auto& leaf : search.leaves()) pool.push_back(leaf);
  }
  std::sort(pool.begin(), pool.end(), [](const auto& x, const auto& y) { return x.first > y.first; });

  RhoSearchResult out;
  out.nodes = nodes;
  bool have = false;
  const QuadNum alpha = value_of(base);
  for (const auto& [value, t] : pool) {
    if (value < best - PatternSearch::kTie) break;
    DigitSeq d = DigitSeq::from_t(base, t_pre, t);
    if (is_lattice_equivalent(gamma_from_digits(d), alpha).equivalent) continue;
    MResult mr = period_has_t_equal_a(d) ? m_exact_general(base, d) : m_exact(base, d);
    if (!have || mr.value > out.m.value) {
      out.m = std::move(mr);
      out.digits = std::move(d);
      have = true;
    }
  }
  if (!have) throw Error(ErrorKind::OutOfRange, "no admissible non-lattice pattern in the search space");
  out.digit_period = out.digits.period_length();
  out.m.params["period_multiple"] = std::to_string(options.period_multiple);
  out.m.params["t_cap"] = std::to_string(options.t_cap);
  out.m.params["nodes"] = std::to_string(nodes);
  out.m.params["include_t_equals_a"] = options.include_t_equals_a ? "true" : "false";
  return out;
}

}  // namespace ncfapprox
