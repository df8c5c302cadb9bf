#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "ncfapprox/ncf.hpp"
#include "ncfapprox/quad.hpp"

namespace ncfapprox {

/// Digits b_i of the alpha-expansion gamma = sum_i b_i D_{i-1} relative to a
/// periodic base expansion of alpha, together with the recentred view
/// t_i = 2 b_i - a_i + 2.
///
/// Unless truncated, the sequence is eventually periodic and stored in aligned
/// normal form: the preperiod is at least as long as the base preperiod, the
/// period length is a multiple of the base period length, and both are minimal
/// subject to that alignment. A truncated sequence holds only a finite prefix.
class DigitSeq {
 public:
  DigitSeq() = default;
  /// Checks 0 <= b_i <= a_i - 1 and normalizes. An empty period on a
  /// non-truncated sequence means trailing zeros.
  DigitSeq(NcfExpansion base, std::vector<long> pre_digits, std::vector<long> period_digits,
           bool truncated = false);

  /// Builds the digit sequence from t-values.
  static DigitSeq from_t(NcfExpansion base, const std::vector<long>& t_pre,
                         const std::vector<long>& t_period);

  const NcfExpansion& base() const { return base_; }
  const std::vector<long>& pre_digits() const { return pre_; }
  const std::vector<long>& period_digits() const { return period_; }
  bool truncated() const { return truncated_; }
  std::size_t preperiod_length() const { return pre_.size(); }
  std::size_t period_length() const { return period_.size(); }

  /// b_i, 1-based.
  long digit(long i) const;
  /// t_i = 2 b_i - a_i + 2, 1-based.
  long t(long i) const;
  /// b_i of the periodic pattern for every integer i (ignores the preperiod).
  long periodic_digit(long i) const;
  long periodic_t(long i) const;

  std::vector<long> t_pre() const;
  std::vector<long> t_period() const;

  /// "b: [b1, (c1, c2)*] over [0; (3)*]-"
  std::string to_string() const;
  /// "t: [...]"
  std::string t_string() const;

  friend bool operator==(const DigitSeq&, const DigitSeq&) = default;

 private:
  NcfExpansion base_;
  std::vector<long> pre_;
  std::vector<long> period_;
  bool truncated_ = false;
};

/// Digit bounds plus the forbidden-block condition: no b_s = a_s - 1 followed
/// by b_j = a_j - 2 forever, or by such a run ending in another b_k = a_k - 1.
/// Periodic tails are checked on the bi-infinite periodic word.
bool is_admissible(const DigitSeq& d);

/// True iff some position of the period has t_i = a_i (b_i = a_i - 1).
bool period_has_t_equal_a(const DigitSeq& d);

/// gamma_0 = gamma, b_{i+1} = floor(gamma_i / alpha_i), gamma_{i+1} = frac(gamma_i / alpha_i).
/// Periodicity is detected on the exact state (gamma_i, phase of i in the base).
/// Without a repeat inside max_terms the result is a truncated prefix.
DigitSeq alpha_expand(const QuadNum& gamma, const NcfExpansion& base,
                      std::size_t max_terms = kDefaultMaxTerms);

/// Prefix of the alpha-expansion of gamma when gamma lives in a different
/// quadratic field than alpha. Runs the recursion on rational brackets
/// lo <= gamma < hi of width 10^-bracket_digits and keeps the digits both agree on.
DigitSeq alpha_expand_truncated(const QuadNum& gamma, const NcfExpansion& base,
                                std::size_t max_terms = 64, int bracket_digits = 60);

/// gamma = sum b_i D_{i-1}, with the periodic tail closed as a geometric fixed point.
QuadNum gamma_from_digits(const DigitSeq& d);

/// For any sequence (truncated included): [S_n, S_n + D_{n-1}] contains gamma,
/// where S_n sums the n stored prefix digits.
struct GammaInterval {
  QuadNum lower;
  QuadNum upper;
};
GammaInterval gamma_interval(const DigitSeq& d, std::size_t n);

/// t_i = 0 on even a_i, alternating +1, -1, +1, ... over the odd a_i in order.
DigitSeq gamma_star(const NcfExpansion& base);

struct DCouple {
  long k = 0;
  QuadNum d_minus;
  QuadNum d_plus;
};

/// d_k^- = sum_{j<=k} t_j q_{j-1}/q_k and d_k^+ = sum_{j>k} t_j D_{j-1}/D_{k-1}, exactly.
DCouple d_values(const DigitSeq& d, long k);

/// Limits of (d_k^-, d_k^+) as k -> infinity with k = residue (mod period length).
DCouple d_limits(const DigitSeq& d, long residue);

/// d_limits for every position of one digit period; entry i belongs to
/// k = preperiod_length() + 1 + i.
std::vector<DCouple> d_limits_all(const DigitSeq& d);

struct LatticeWitness {
  bool equivalent = false;
  Integer m;
  Integer l;
};

/// Decides gamma in Z + alpha Z by solving gamma = u + v alpha over Q.
LatticeWitness is_lattice_equivalent(const QuadNum& gamma, const QuadNum& alpha);

struct ApproxCandidates {
  std::array<Integer, 4> values;
  /// Set when t_i = a_i recurs in the period, where the candidate theorem needs
  /// only finitely many such digits.
  bool hypothesis_warning = false;
};

/// Q_k, Q_k + q_{k-1}, -(q_k - Q_k), -(q_k - q_{k-1} - Q_k) with Q_k = sum_{i<=k} b_i q_{i-1}.
ApproxCandidates best_approx_candidates(const DigitSeq& d, long k);

}  // namespace ncfapprox
