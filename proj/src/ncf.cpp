#include "ncfapprox/ncf.hpp"

#include <algorithm>
#include <map>

namespace ncfapprox {

namespace {

long positive_mod(long i, long m) {
  long r = i % m;
  return r < 0 ? r + m : r;
}

// Smallest p dividing word.size() such that the word is p-periodic.
std::size_t primitive_period(const std::vector<long>& word) {
  const std::size_t m = word.size();
  for (std::size_t p = 1; p < m; ++p) {
    if (m % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < m && ok; ++i) ok = word[i] == word[i - p];
    if (ok) return p;
  }
  return m;
}

struct Mobius {
  Integer a = 1, b = 0, c = 0, d = 1;

  // this * [[ea, eb], [ec, ed]]
  void compose(const Integer& ea, const Integer& eb, const Integer& ec, const Integer& ed) {
    Integer na = a * ea + b * ec;
    Integer nb = a * eb + b * ed;
    Integer nc = c * ea + d * ec;
    Integer nd = c * eb + d * ed;
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
  }
};

// The fixed point of x = (a x + b)/(c x + d) lying strictly inside (0, 1).
QuadNum fixed_point_in_unit_interval(const Mobius& m) {
  // c x^2 + (d - a) x - b = 0
  if (m.c == 0) throw Error(ErrorKind::NoRootInRange, "degenerate periodic word");
  const Integer disc = (m.d - m.a) * (m.d - m.a) + 4 * m.b * m.c;
  if (disc < 0 || mpz_perfect_square_p(disc.get_mpz_t()) != 0) {
    throw Error(ErrorKind::NoRootInRange, "periodic word has no irrational fixed point");
  }
  const QuadNum r1 = QuadNum::surd(m.a - m.d, 1, disc, 2 * m.c);
  const QuadNum r2 = QuadNum::surd(m.a - m.d, -1, disc, 2 * m.c);
  const auto inside = [](const QuadNum& x) { return x.sign() > 0 && x < QuadNum(1); };
  const bool in1 = inside(r1);
  const bool in2 = inside(r2);
  if (in1 == in2) throw Error(ErrorKind::NoRootInRange, "no unique fixed point in (0,1)");
  return in1 ? r1 : r2;
}

std::string join(const std::vector<long>& terms) {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(terms[i]);
  }
  return out;
}

long to_term(const Integer& v) {
  if (!v.fits_slong_p()) throw Error(ErrorKind::OutOfRange, "partial quotient " + v.get_str() + " too large");
  return v.get_si();
}

}  // namespace

NcfExpansion::NcfExpansion(std::vector<long> preperiod, std::vector<long> period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
  for (long a : preperiod_) {
    if (a < 2) throw Error(ErrorKind::OutOfRange, "partial quotient " + std::to_string(a) + " < 2");
  }
  for (long a : period_) {
    if (a < 2) throw Error(ErrorKind::OutOfRange, "partial quotient " + std::to_string(a) + " < 2");
  }
  if (!period_.empty() && std::all_of(period_.begin(), period_.end(), [](long a) { return a == 2; })) {
    throw Error(ErrorKind::OutOfRange, "a period of 2s does not define an irrational number");
  }
  if (period_.empty()) return;
  period_.resize(primitive_period(period_));
  while (!preperiod_.empty() && preperiod_.back() == period_.back()) {
    preperiod_.pop_back();
    std::rotate(period_.rbegin(), period_.rbegin() + 1, period_.rend());
  }
}

long NcfExpansion::term(long i) const {
  const long pre = static_cast<long>(preperiod_.size());
  if (i >= 1 && i <= pre) return preperiod_[static_cast<std::size_t>(i - 1)];
  if (period_.empty()) {
    throw Error(ErrorKind::IndexBeyondFiniteExpansion,
                "term " + std::to_string(i) + " of a " + std::to_string(pre) + "-term expansion");
  }
  const long m = static_cast<long>(period_.size());
  return period_[static_cast<std::size_t>(positive_mod(i - pre - 1, m))];
}

long NcfExpansion::periodic_term(long i) const {
  if (period_.empty()) throw Error(ErrorKind::FiniteExpansion, "finite expansion has no period");
  const long pre = static_cast<long>(preperiod_.size());
  const long m = static_cast<long>(period_.size());
  return period_[static_cast<std::size_t>(positive_mod(i - pre - 1, m))];
}

long NcfExpansion::liminf_term() const {
  if (period_.empty()) throw Error(ErrorKind::FiniteExpansion, "finite expansion has no liminf");
  return *std::min_element(period_.begin(), period_.end());
}

std::string NcfExpansion::to_string() const {
  std::string out = "[0; " + join(preperiod_);
  if (!period_.empty()) {
    if (!preperiod_.empty()) out += ", ";
    out += "(" + join(period_) + ")*";
  }
  return out + "]-";
}

ConvergentStream::ConvergentStream(const NcfExpansion& e) : e_(&e) {
  state_.d_cur = value_of(e);
}

void ConvergentStream::advance() {
  const long a = e_->term(static_cast<long>(state_.n) + 1);
  ConvergentState& s = state_;
  Integer p_next = a * s.p_cur - s.p_prev;
  Integer q_next = a * s.q_cur - s.q_prev;
  QuadNum d_next = QuadNum(a) * s.d_cur - s.d_prev;
  s.p_prev = std::move(s.p_cur);
  s.p_cur = std::move(p_next);
  s.q_prev = std::move(s.q_cur);
  s.q_cur = std::move(q_next);
  s.d_prev = std::move(s.d_cur);
  s.d_cur = std::move(d_next);
  ++s.n;
}

NcfExpansion expand(const QuadNum& x, std::size_t max_terms) {
  if (x.sign() <= 0 || x >= QuadNum(1)) {
    throw Error(ErrorKind::OutOfRange, x.to_string() + " is not in (0,1)");
  }
  std::map<QuadNum, std::size_t, QuadNum::TupleLess> seen;
  std::vector<long> terms;
  QuadNum alpha = x;
  for (std::size_t n = 0;; ++n) {
    if (alpha.is_zero()) return NcfExpansion(std::move(terms), {});
    if (auto it = seen.find(alpha); it != seen.end()) {
      const auto start = static_cast<std::ptrdiff_t>(it->second);
      std::vector<long> pre(terms.begin(), terms.begin() + start);
      std::vector<long> per(terms.begin() + start, terms.end());
      return NcfExpansion(std::move(pre), std::move(per));
    }
    if (n >= max_terms) {
      throw Error(ErrorKind::PeriodNotFound,
                  "no period within " + std::to_string(max_terms) + " terms");
    }
    seen.emplace(alpha, n);
    const QuadNum inv = alpha.reciprocal();
    const Integer a = inv.ceil();
    terms.push_back(to_term(a));
    alpha = QuadNum(a) - inv;
  }
}

QuadNum periodic_value(std::span<const long> word) {
  if (word.empty()) throw Error(ErrorKind::EmptyPeriod, "empty periodic word");
  Mobius m;
  for (long c : word) m.compose(0, 1, -1, c);  // t -> 1/(c - t)
  return fixed_point_in_unit_interval(m);
}

QuadNum value_of(const NcfExpansion& e) {
  QuadNum x = e.is_finite() ? QuadNum(0) : periodic_value(e.period());
  const auto& pre = e.preperiod();
  for (auto it = pre.rbegin(); it != pre.rend(); ++it) x = (QuadNum(*it) - x).reciprocal();
  return x;
}

ConvergentState convergents(const NcfExpansion& e, std::size_t n) {
  if (e.is_finite() && n > e.length()) {
    throw Error(ErrorKind::IndexBeyondFiniteExpansion,
                "convergent " + std::to_string(n) + " of a " + std::to_string(e.length()) +
                    "-term expansion");
  }
  ConvergentStream stream(e);
  for (std::size_t i = 0; i < n; ++i) stream.advance();
  return stream.state();
}

QuadNum tail_alpha(const NcfExpansion& e, std::size_t n) {
  const std::size_t pre = e.preperiod_length();
  if (e.is_finite()) {
    if (n > pre) {
      throw Error(ErrorKind::IndexBeyondFiniteExpansion, "tail index " + std::to_string(n));
    }
    return value_of(NcfExpansion({e.preperiod().begin() + static_cast<std::ptrdiff_t>(n), e.preperiod().end()}, {}));
  }
  if (n < pre) {
    return value_of(NcfExpansion({e.preperiod().begin() + static_cast<std::ptrdiff_t>(n), e.preperiod().end()},
                                 e.period()));
  }
  std::vector<long> rotated = e.period();
  std::rotate(rotated.begin(), rotated.begin() + static_cast<std::ptrdiff_t>((n - pre) % rotated.size()),
              rotated.end());
  return periodic_value(rotated);
}

QuadNum rev_alpha_bar(const NcfExpansion& e, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::OutOfRange, "alpha-bar is defined for n >= 1");
  if (e.is_finite() && n > e.length()) {
    throw Error(ErrorKind::IndexBeyondFiniteExpansion, "alpha-bar index " + std::to_string(n));
  }
  QuadNum x = 0;
  for (std::size_t i = 1; i <= n; ++i) x = (QuadNum(e.term(static_cast<long>(i))) - x).reciprocal();
  return x;
}

QuadNum limit_alpha_bar(const NcfExpansion& e, long residue) {
  if (e.is_finite()) throw Error(ErrorKind::FiniteExpansion, "alpha-bar limit of a finite expansion");
  const long m = static_cast<long>(e.period_length());
  std::vector<long> word(static_cast<std::size_t>(m));
  for (long h = 0; h < m; ++h) word[static_cast<std::size_t>(h)] = e.periodic_term(residue - h);
  return periodic_value(word);
}

QuadNum regular_value(const std::vector<long>& regular_cf, const std::vector<long>& tail_period) {
  for (long c : regular_cf) {
    if (c < 1) throw Error(ErrorKind::OutOfRange, "regular partial quotient < 1");
  }
  for (long c : tail_period) {
    if (c < 1) throw Error(ErrorKind::OutOfRange, "regular partial quotient < 1");
  }
  QuadNum x = 0;
  if (!tail_period.empty()) {
    Mobius m;
    for (long c : tail_period) m.compose(0, 1, 1, c);  // t -> 1/(c + t)
    x = fixed_point_in_unit_interval(m);
  }
  for (auto it = regular_cf.rbegin(); it != regular_cf.rend(); ++it) x = (QuadNum(*it) + x).reciprocal();
  return x;
}

NcfExpansion regular_to_negative(const std::vector<long>& regular_cf,
                                 const std::vector<long>& tail_period) {
  return expand(regular_value(regular_cf, tail_period));
}

QuadNum homogeneous_constant(const std::vector<long>& regular_cf_period) {
  if (regular_cf_period.empty()) throw Error(ErrorKind::EmptyPeriod, "empty regular period");
  const std::size_t m = regular_cf_period.size();
  QuadNum best;
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<long> forward(m), backward(m);
    for (std::size_t h = 0; h < m; ++h) {
      forward[h] = regular_cf_period[(i + 1 + h) % m];
      backward[h] = regular_cf_period[(i + 2 * m - 1 - h) % m];
    }
    const QuadNum sum = QuadNum(regular_cf_period[i]) + regular_value({}, forward) +
                        regular_value({}, backward);
    if (i == 0 || sum > best) best = sum;
  }
  return best.reciprocal();
}

}  // namespace ncfapprox
