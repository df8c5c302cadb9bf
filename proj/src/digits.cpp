#include "ncfapprox/digits.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace ncfapprox {

namespace {

long positive_mod(long i, long m) {
  long r = i % m;
  return r < 0 ? r + m : r;
}

std::string join(const std::vector<long>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(terms[i]);
  }
  return out;
}

std::string bracketed(const std::vector<long>& pre, const std::vector<long>& period, bool truncated) {
  std::string out = "[" + join(pre);
  if (!period.empty()) {
    if (!pre.empty()) out += ", ";
    out += "(" + join(period) + ")*";
  }
  if (truncated) out += pre.empty() ? "..." : ", ...";
  return out + "]";
}

void require_periodic_base(const NcfExpansion& base) {
  if (base.is_finite()) {
    throw Error(ErrorKind::FiniteExpansion, "alpha-expansions need a periodic base expansion");
  }
}

// alpha_i for every phase: i < L individually, then one full base period.
class AlphaTable {
 public:
  explicit AlphaTable(const NcfExpansion& base)
      : pre_(base.preperiod_length()), period_(base.period_length()) {
    for (std::size_t i = 0; i < pre_ + period_; ++i) alphas_.push_back(tail_alpha(base, i));
  }

  std::size_t phase(std::size_t i) const { return i < pre_ ? i : pre_ + (i - pre_) % period_; }
  const QuadNum& at(std::size_t i) const { return alphas_[phase(i)]; }

 private:
  std::size_t pre_;
  std::size_t period_;
  std::vector<QuadNum> alphas_;
};

void check_same_field(const QuadNum& gamma, const QuadNum& alpha) {
  if (!gamma.is_rational() && !alpha.is_rational() && gamma.radicand() != alpha.radicand()) {
    throw Error(ErrorKind::FieldMismatch, "gamma in Q(sqrt(" + gamma.radicand().get_str() +
                                              ")) but alpha in Q(sqrt(" +
                                              alpha.radicand().get_str() + "))");
  }
}

}  // namespace

DigitSeq::DigitSeq(NcfExpansion base, std::vector<long> pre_digits,
                   std::vector<long> period_digits, bool truncated)
    : base_(std::move(base)), pre_(std::move(pre_digits)), period_(std::move(period_digits)),
      truncated_(truncated) {
  require_periodic_base(base_);
  if (truncated_ && !period_.empty()) {
    throw Error(ErrorKind::OutOfRange, "a truncated digit sequence has no period");
  }
  const std::size_t m = base_.period_length();
  const std::size_t base_pre = base_.preperiod_length();
  if (!truncated_) {
    if (period_.empty()) period_.assign(m, 0);
    // Align: period length a multiple of m, preperiod covering the base preperiod.
    const std::size_t n = std::lcm(period_.size(), m);
    std::vector<long> extended;
    extended.reserve(n);
    while (extended.size() < n) extended.insert(extended.end(), period_.begin(), period_.end());
    period_ = std::move(extended);
    while (pre_.size() < base_pre) {
      pre_.push_back(period_.front());
      std::rotate(period_.begin(), period_.begin() + 1, period_.end());
    }
  }
  const auto check = [this](long i, long b) {
    const long a = base_.term(i);
    if (b < 0 || b > a - 1) {
      throw Error(ErrorKind::OutOfRange, "digit b_" + std::to_string(i) + " = " +
                                             std::to_string(b) + " outside [0, " +
                                             std::to_string(a - 1) + "]");
    }
  };
  for (std::size_t i = 0; i < pre_.size(); ++i) check(static_cast<long>(i) + 1, pre_[i]);
  for (std::size_t i = 0; i < period_.size(); ++i) {
    check(static_cast<long>(pre_.size() + i) + 1, period_[i]);
  }
  if (truncated_) return;

  // Minimal aligned period.
  const std::size_t n = period_.size();
  for (std::size_t p = m; p < n; p += m) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = period_[i] == period_[i - p];
    if (ok) {
      period_.resize(p);
      break;
    }
  }
  // Minimal preperiod not shorter than the base preperiod.
  while (pre_.size() > base_pre && pre_.back() == period_.back()) {
    pre_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

DigitSeq DigitSeq::from_t(NcfExpansion base, const std::vector<long>& t_pre,
                          const std::vector<long>& t_period) {
  require_periodic_base(base);
  const auto to_b = [&base](long i, long t) {
    const long a = base.term(i);
    if (positive_mod(t - a, 2) != 0) {
      throw Error(ErrorKind::OutOfRange, "t_" + std::to_string(i) + " = " + std::to_string(t) +
                                             " has the wrong parity for a_i = " +
                                             std::to_string(a));
    }
    return (a - 2 + t) / 2;
  };
  std::vector<long> pre, period;
  for (std::size_t i = 0; i < t_pre.size(); ++i) pre.push_back(to_b(static_cast<long>(i) + 1, t_pre[i]));
  // Parity of a periodic t-pattern must hold on every repetition, so align
  // its length with the base period first.
  const std::size_t m = base.period_length();
  const std::size_t n = t_period.empty() ? 0 : std::lcm(t_period.size(), m);
  for (std::size_t i = 0; i < n; ++i) {
    period.push_back(to_b(static_cast<long>(t_pre.size() + i) + 1, t_period[i % t_period.size()]));
  }
  if (t_period.empty()) {
    throw Error(ErrorKind::OutOfRange, "t-pattern needs a period");
  }
  return DigitSeq(std::move(base), std::move(pre), std::move(period));
}

long DigitSeq::digit(long i) const {
  if (i < 1) throw Error(ErrorKind::OutOfRange, "digit index must be >= 1");
  const long pre = static_cast<long>(pre_.size());
  if (i <= pre) return pre_[static_cast<std::size_t>(i - 1)];
  if (truncated_) {
    throw Error(ErrorKind::NotPeriodic, "digit " + std::to_string(i) + " beyond truncated prefix");
  }
  return period_[static_cast<std::size_t>((i - pre - 1) % static_cast<long>(period_.size()))];
}

long DigitSeq::t(long i) const { return 2 * digit(i) - base_.term(i) + 2; }

long DigitSeq::periodic_digit(long i) const {
  if (truncated_) throw Error(ErrorKind::NotPeriodic, "truncated digit sequence");
  const long pre = static_cast<long>(pre_.size());
  return period_[static_cast<std::size_t>(positive_mod(i - pre - 1, static_cast<long>(period_.size())))];
}

long DigitSeq::periodic_t(long i) const {
  return 2 * periodic_digit(i) - base_.periodic_term(i) + 2;
}

std::vector<long> DigitSeq::t_pre() const {
  std::vector<long> out;
  for (std::size_t i = 0; i < pre_.size(); ++i) out.push_back(t(static_cast<long>(i) + 1));
  return out;
}

std::vector<long> DigitSeq::t_period() const {
  std::vector<long> out;
  for (std::size_t i = 0; i < period_.size(); ++i) {
    out.push_back(t(static_cast<long>(pre_.size() + i) + 1));
  }
  return out;
}

std::string DigitSeq::to_string() const {
  return "b: " + bracketed(pre_, period_, truncated_) + " over " + base_.to_string();
}

std::string DigitSeq::t_string() const {
  return "t: " + bracketed(t_pre(), t_period(), truncated_);
}

bool is_admissible(const DigitSeq& d) {
  const NcfExpansion& base = d.base();
  const long pre = static_cast<long>(d.preperiod_length());
  const long n = static_cast<long>(d.period_length());
  const long stored_end = d.truncated() ? pre : pre + n;
  for (long s = 1; s <= stored_end; ++s) {
    if (d.digit(s) != base.term(s) - 1) continue;
    // After b_s = a_s - 1 the first digit differing from a_j - 2 must exist
    // and must not be a_j - 1.
    const long horizon = d.truncated() ? pre : std::max(s, pre) + n;
    bool resolved = false;
    for (long j = s + 1; j <= horizon; ++j) {
      const long b = d.digit(j);
      const long a = base.term(j);
      if (b == a - 2) continue;
      if (b == a - 1) return false;
      resolved = true;
      break;
    }
    if (!resolved && !d.truncated()) return false;
  }
  return true;
}

bool period_has_t_equal_a(const DigitSeq& d) {
  if (d.truncated()) return false;
  const long pre = static_cast<long>(d.preperiod_length());
  for (std::size_t i = 0; i < d.period_length(); ++i) {
    const long k = pre + static_cast<long>(i) + 1;
    if (d.digit(k) == d.base().term(k) - 1) return true;
  }
  return false;
}

DigitSeq alpha_expand(const QuadNum& gamma, const NcfExpansion& base, std::size_t max_terms) {
  require_periodic_base(base);
  if (gamma.sign() <= 0 || gamma >= QuadNum(1)) {
    throw Error(ErrorKind::OutOfRange, gamma.to_string() + " is not in (0,1)");
  }
  const AlphaTable alphas(base);
  check_same_field(gamma, alphas.at(0));

  struct StateLess {
    bool operator()(const std::pair<QuadNum, std::size_t>& x,
                    const std::pair<QuadNum, std::size_t>& y) const {
      if (x.second != y.second) return x.second < y.second;
      return QuadNum::TupleLess{}(x.first, y.first);
    }
  };
  std::map<std::pair<QuadNum, std::size_t>, std::size_t, StateLess> seen;
  std::vector<long> digits;
  QuadNum remainder = gamma;
  for (std::size_t i = 0;; ++i) {
    auto key = std::make_pair(remainder, alphas.phase(i));
    if (auto it = seen.find(key); it != seen.end()) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      return DigitSeq(base, {digits.begin(), digits.begin() + start},
                      {digits.begin() + start, digits.end()});
    }
    if (i >= max_terms) return DigitSeq(base, std::move(digits), {}, true);
    seen.emplace(std::move(key), i);
    const QuadNum ratio = remainder / alphas.at(i);
    const Integer b = ratio.floor();
    digits.push_back(b.get_si());
    remainder = ratio - QuadNum(b);
  }
}

DigitSeq alpha_expand_truncated(const QuadNum& gamma, const NcfExpansion& base,
                                std::size_t max_terms, int bracket_digits) {
  require_periodic_base(base);
  if (gamma.sign() <= 0 || gamma >= QuadNum(1)) {
    throw Error(ErrorKind::OutOfRange, gamma.to_string() + " is not in (0,1)");
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(bracket_digits));
  const Integer lo_num = (gamma * QuadNum(scale)).floor();
  QuadNum lo = QuadNum::rational(lo_num, scale);
  QuadNum hi = QuadNum::rational(lo_num + 1, scale);
  if (lo.sign() <= 0 || hi >= QuadNum(1)) {
    throw Error(ErrorKind::OutOfRange, "gamma too close to 0 or 1 for the bracket width");
  }
  const AlphaTable alphas(base);
  std::vector<long> digits;
  for (std::size_t i = 0; i < max_terms; ++i) {
    const QuadNum rlo = lo / alphas.at(i);
    const QuadNum rhi = hi / alphas.at(i);
    const Integer blo = rlo.floor();
    if (blo != rhi.floor()) break;
    digits.push_back(blo.get_si());
    lo = rlo - QuadNum(blo);
    hi = rhi - QuadNum(blo);
  }
  return DigitSeq(base, std::move(digits), {}, true);
}

QuadNum gamma_from_digits(const DigitSeq& d) {
  if (d.truncated()) {
    throw Error(ErrorKind::NotPeriodic, "truncated digits only bound gamma; use gamma_interval");
  }
  const AlphaTable alphas(d.base());
  const std::size_t pre = d.preperiod_length();
  const std::size_t n = d.period_length();
  QuadNum sum = 0;
  QuadNum scale = 1;  // D_{i-1}
  for (std::size_t i = 0; i < pre; ++i) {
    scale *= alphas.at(i);
    sum += QuadNum(d.pre_digits()[i]) * scale;
  }
  // tail T = S + P T over one aligned period
  QuadNum partial = 0;
  QuadNum product = 1;
  for (std::size_t j = 0; j < n; ++j) {
    product *= alphas.at(pre + j);
    partial += QuadNum(d.period_digits()[j]) * product;
  }
  return sum + scale * partial / (QuadNum(1) - product);
}

GammaInterval gamma_interval(const DigitSeq& d, std::size_t n) {
  if (d.truncated() && n > d.preperiod_length()) {
    throw Error(ErrorKind::OutOfRange, "interval needs n within the stored prefix");
  }
  const AlphaTable alphas(d.base());
  QuadNum sum = 0;
  QuadNum scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    scale *= alphas.at(i);
    sum += QuadNum(d.digit(static_cast<long>(i) + 1)) * scale;
  }
  return {sum, sum + scale};
}

DigitSeq gamma_star(const NcfExpansion& base) {
  require_periodic_base(base);
  const std::size_t pre = base.preperiod_length();
  const std::size_t m = base.period_length();
  const auto odd_in_period =
      std::count_if(base.period().begin(), base.period().end(), [](long a) { return a % 2 != 0; });
  const std::size_t n = odd_in_period % 2 == 0 ? m : 2 * m;
  std::vector<long> t_pre, t_period;
  long sign = 1;
  for (std::size_t i = 1; i <= pre + n; ++i) {
    const long a = base.term(static_cast<long>(i));
    long t = 0;
    if (a % 2 != 0) {
      t = sign;
      sign = -sign;
    }
    (i <= pre ? t_pre : t_period).push_back(t);
  }
  return DigitSeq::from_t(base, t_pre, t_period);
}

DCouple d_values(const DigitSeq& d, long k) {
  if (k < 0) throw Error(ErrorKind::OutOfRange, "d-values need k >= 0");
  if (d.truncated()) throw Error(ErrorKind::NotPeriodic, "d_k^+ needs the periodic tail");
  // d_k^- = sum_{j=1}^{k} t_j q_{j-1} / q_k
  Integer q_prev = 0, q_cur = 1;
  Integer weighted = 0;
  for (long j = 1; j <= k; ++j) {
    weighted += d.t(j) * q_cur;
    Integer q_next = d.base().term(j) * q_cur - q_prev;
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  DCouple out;
  out.k = k;
  out.d_minus = QuadNum::rational(weighted, q_cur);

  // d_k^+ = sum_{j>k} t_j alpha_k ... alpha_{j-1}, closed over an aligned period.
  const AlphaTable alphas(d.base());
  const long start = std::max(k, static_cast<long>(d.preperiod_length()));
  const long n = static_cast<long>(d.period_length());
  QuadNum head = 0, head_product = 1;
  for (long j = k + 1; j <= start; ++j) {
    head_product *= alphas.at(static_cast<std::size_t>(j - 1));
    head += QuadNum(d.t(j)) * head_product;
  }
  QuadNum tail = 0, tail_product = 1;
  for (long j = start + 1; j <= start + n; ++j) {
    tail_product *= alphas.at(static_cast<std::size_t>(j - 1));
    tail += QuadNum(d.t(j)) * tail_product;
  }
  out.d_plus = head + head_product * tail / (QuadNum(1) - tail_product);
  return out;
}

std::vector<DCouple> d_limits_all(const DigitSeq& d) {
  if (d.truncated()) throw Error(ErrorKind::NotPeriodic, "d-limits need a periodic digit tail");
  const NcfExpansion& base = d.base();
  const long n = static_cast<long>(d.period_length());
  const long m = static_cast<long>(base.period_length());
  const long k0 = static_cast<long>(d.preperiod_length()) + 1;

  std::vector<QuadNum> bar_limit(static_cast<std::size_t>(m));  // indexed by k mod m
  for (long r = 0; r < m; ++r) bar_limit[static_cast<std::size_t>(r)] = limit_alpha_bar(base, r);
  const auto bar_at = [&](long k) -> const QuadNum& {
    return bar_limit[static_cast<std::size_t>(positive_mod(k, m))];
  };
  const AlphaTable alphas(base);

  std::vector<DCouple> out(static_cast<std::size_t>(n));
  // d^- at the last position of the period by closure, then forward recursion
  // d_k^- = bar_k (t_k + d_{k-1}^-).
  const long last = k0 + n - 1;
  QuadNum partial = 0, product = 1;
  for (long h = 0; h < n; ++h) {
    product *= bar_at(last - h);
    partial += QuadNum(d.periodic_t(last - h)) * product;
  }
  QuadNum minus = partial / (QuadNum(1) - product);
  for (long k = k0; k <= last; ++k) {
    minus = bar_at(k) * (QuadNum(d.periodic_t(k)) + minus);
    out[static_cast<std::size_t>(k - k0)].d_minus = minus;
  }
  // d^+ at the last position exactly, then backward recursion
  // d_k^+ = alpha_k (t_{k+1} + d_{k+1}^+).
  QuadNum plus = d_values(d, last).d_plus;
  for (long k = last; k >= k0; --k) {
    if (k != last) plus = alphas.at(static_cast<std::size_t>(k)) * (QuadNum(d.periodic_t(k + 1)) + plus);
    auto& slot = out[static_cast<std::size_t>(k - k0)];
    slot.k = k;
    slot.d_plus = plus;
  }
  return out;
}

DCouple d_limits(const DigitSeq& d, long residue) {
  const auto all = d_limits_all(d);
  const long n = static_cast<long>(d.period_length());
  for (const auto& c : all) {
    if (positive_mod(c.k - residue, n) == 0) return c;
  }
  return all.front();  // unreachable: the k cover every residue
}

LatticeWitness is_lattice_equivalent(const QuadNum& gamma, const QuadNum& alpha) {
  if (alpha.is_rational()) throw Error(ErrorKind::OutOfRange, "alpha must be irrational");
  check_same_field(gamma, alpha);
  const QuadNum v = QuadNum::rational(gamma.b() * alpha.c(), gamma.c() * alpha.b());
  const QuadNum u = gamma - v * alpha;
  LatticeWitness w;
  w.equivalent = u.is_integer() && v.is_integer();
  if (w.equivalent) {
    w.m = u.a();
    w.l = v.a();
  }
  return w;
}

ApproxCandidates best_approx_candidates(const DigitSeq& d, long k) {
  if (k < 1) throw Error(ErrorKind::OutOfRange, "candidates need k >= 1");
  Integer q_prev = 0, q_cur = 1;
  Integer big_q = 0;
  for (long i = 1; i <= k; ++i) {
    big_q += d.digit(i) * q_cur;
    Integer q_next = d.base().term(i) * q_cur - q_prev;
    q_prev = std::move(q_cur);
    q_cur = std::move(q_next);
  }
  ApproxCandidates out;
  out.values = {big_q, big_q + q_prev, -(q_cur - big_q), -(q_cur - q_prev - big_q)};
  out.hypothesis_warning = period_has_t_equal_a(d);
  return out;
}

}  // namespace ncfapprox
