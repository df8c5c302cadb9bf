#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ncfapprox/quad.hpp"

namespace ncfapprox {

/// An eventually periodic negative ("round-up") continued fraction
///   [0; a1, a2, ...]^- = 1/(a1 - 1/(a2 - ...)),  every a_i >= 2.
///
/// Canonical form: minimal preperiod followed by the primitive period. The
/// period is *not* rotated, since a rotation changes the value. An empty period
/// denotes a finite expansion of a rational number.
class NcfExpansion {
 public:
  NcfExpansion() = default;
  /// Validates (all terms >= 2, period not all 2s) and canonicalizes.
  NcfExpansion(std::vector<long> preperiod, std::vector<long> period);

  static NcfExpansion periodic(std::vector<long> period) { return {{}, std::move(period)}; }

  const std::vector<long>& preperiod() const { return preperiod_; }
  const std::vector<long>& period() const { return period_; }
  std::size_t preperiod_length() const { return preperiod_.size(); }
  std::size_t period_length() const { return period_.size(); }
  bool is_finite() const { return period_.empty(); }
  bool is_purely_periodic() const { return preperiod_.empty() && !period_.empty(); }
  /// Number of terms of a finite expansion.
  std::size_t length() const { return preperiod_.size(); }

  /// Partial quotient a_i, 1-based. For periodic expansions any integer index
  /// past the preperiod is accepted (including i <= 0, which follows the
  /// periodic extension backwards).
  long term(long i) const;
  /// a_i read from the periodic pattern for every integer i, ignoring the
  /// preperiod. Used for limits along residue classes.
  long periodic_term(long i) const;

  /// R: the least partial quotient occurring infinitely often.
  long liminf_term() const;

  /// "[0; a1, a2, (b1, b2)*]-"
  std::string to_string() const;

  friend bool operator==(const NcfExpansion&, const NcfExpansion&) = default;

 private:
  std::vector<long> preperiod_;
  std::vector<long> period_;
};

/// Streaming convergent data at index n:
///   p_{n+1} = a_{n+1} p_n - p_{n-1},  q_{n+1} = a_{n+1} q_n - q_{n-1},
///   D_n = q_n alpha - p_n = alpha_0 alpha_1 ... alpha_n.
struct ConvergentState {
  std::size_t n = 0;
  Integer p_prev = -1;
  Integer p_cur = 0;
  Integer q_prev = 0;
  Integer q_cur = 1;
  QuadNum d_prev = 1;
  QuadNum d_cur;
};

/// Owns the state and advances one index at a time.
class ConvergentStream {
 public:
  explicit ConvergentStream(const NcfExpansion& e);
  const ConvergentState& state() const { return state_; }
  /// Moves from index n to n + 1.
  void advance();

 private:
  const NcfExpansion* e_;
  ConvergentState state_;
};

inline constexpr std::size_t kDefaultMaxTerms = 10'000;

/// Negative continued fraction of x in (0,1): a_{n+1} = ceil(1/alpha_n),
/// alpha_{n+1} = a_{n+1} - 1/alpha_n, with periodicity detected on the exact
/// state alpha_n. Rationals yield finite expansions (stop at alpha_n = 0).
NcfExpansion expand(const QuadNum& x, std::size_t max_terms = kDefaultMaxTerms);

QuadNum value_of(const NcfExpansion& e);

/// Purely periodic value [0; w1, ..., wm, w1, ...]^-.
QuadNum periodic_value(std::span<const long> word);

ConvergentState convergents(const NcfExpansion& e, std::size_t n);

/// alpha_n = [0; a_{n+1}, a_{n+2}, ...]^-
QuadNum tail_alpha(const NcfExpansion& e, std::size_t n);
/// alpha-bar_n = [0; a_n, a_{n-1}, ..., a_1]^-, n >= 1.
QuadNum rev_alpha_bar(const NcfExpansion& e, std::size_t n);
/// Limit of alpha-bar_k as k -> infinity along k = residue (mod period length).
QuadNum limit_alpha_bar(const NcfExpansion& e, long residue);

/// Regular continued fraction [0; c1, ..., ck, (tail)*] rewritten as a negative
/// expansion by exact evaluation and re-expansion.
NcfExpansion regular_to_negative(const std::vector<long>& regular_cf,
                                 const std::vector<long>& tail_period);

/// Value of a regular continued fraction [0; c1, ..., ck, (tail)*].
QuadNum regular_value(const std::vector<long>& regular_cf, const std::vector<long>& tail_period);

/// M(alpha, 0) = 1 / limsup (c_i + [0; c_{i+1}, ...] + [0; c_{i-1}, ...]) for a
/// purely periodic regular continued fraction.
QuadNum homogeneous_constant(const std::vector<long>& regular_cf_period);

}  // namespace ncfapprox
