#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncfapprox/digits.hpp"

namespace ncfapprox {

/// The four quantities whose liminf of the minimum gives M(alpha, gamma):
///   s1 = (1 - ab + d-)(1 - af + d+) / (4(1 - ab af))
///   s2 = (1 + ab + d-)(1 + af - d+) / (4(1 - ab af))
///   s3 = (1 - ab - d-)(1 - af - d+) / (4(1 - ab af))
///   s4 = (1 + ab - d-)(1 + af + d+) / (4(1 - ab af))
/// with ab = alpha-bar_k and af = alpha_k.
struct SQuadruple {
  long k = 0;
  QuadNum alpha_bar;
  QuadNum alpha_fwd;
  DCouple d;
  QuadNum s1, s2, s3, s4;

  const QuadNum& s(int j) const;
  /// Index j in 1..4 of the smallest s_j (first one on ties).
  int argmin() const;
};

SQuadruple make_squadruple(long k, const QuadNum& alpha_bar, const QuadNum& alpha_fwd,
                           const DCouple& d);

enum class SMode { Finite, Limit };

/// Finite mode uses the exact alpha-bar_k and d_k; limit mode uses the limits
/// along the residue class of k (any k with the same residue gives the same result).
SQuadruple s_values(const NcfExpansion& base, const DigitSeq& d, long k, SMode mode);

enum class MKind { Exact, Estimate, UpperBoundOnly };

std::string_view to_string(MKind kind);

struct MWitness {
  long residue = 0;  // position k of the minimizing residue class
  int j = 0;         // which s_j attains it (0 for the upper-bound branch)
};

struct MResult {
  MKind kind = MKind::Exact;
  QuadNum value;           // Exact and UpperBoundOnly
  double estimate = 0.0;   // Estimate (also filled for the other kinds)
  std::optional<MWitness> witness;
  std::vector<double> band_profile;
  std::map<std::string, std::string> params;
  std::vector<std::string> flags;
};

/// M(alpha, gamma) from the limit s-values over one digit period. When
/// t_k = a_k recurs in the period the result is UpperBoundOnly:
/// min over those residues of ab / (4 (1 - ab af)).
/// Throws LatticeGamma when gamma lies in Z + alpha Z.
MResult m_exact(const NcfExpansion& base, const DigitSeq& d);

struct LatticeOffset {
  long c1 = 0;
  long c0 = 0;
};

/// M(alpha, gamma) for any eventually periodic non-lattice gamma, t_k = a_k
/// allowed in the period. Minimizes |L1 L2| / (4(1 - ab af)) over residues and
/// n = Q_k + c1 q_k + c0 q_{k-1}, where
///   L1 = 1 - ab + d- + 2 c1 + 2 c0 ab,   L2 = 1 - af + d+ - 2 c0 - 2 c1 af,
/// and (c1, c0) runs over a box holding every n with |n| ||n alpha - gamma|| < 1/4.
/// (0,0), (0,1), (-1,1), (-1,0) give s1, s2, s3, s4; the witness j is 0 for
/// any other offset, which is reported in params "c1", "c0".
MResult m_exact_general(const NcfExpansion& base, const DigitSeq& d);

/// Offset box used by m_exact_general for limits ab, af.
LatticeOffset offset_box(double alpha_bar, double alpha_fwd);

inline constexpr int kDefaultMaxBands = 22;

/// Band minima e_k = min_{2^k <= |n| < 2^{k+1}} |n| ||n alpha - gamma|| for
/// k < bands, evaluated in 128-bit fixed point, and the minimum over the last
/// ceil(bands/2) bands as the liminf estimate.
MResult m_estimate(const QuadNum& alpha, const QuadNum& gamma, int bands,
                   int max_bands = kDefaultMaxBands);

/// m_exact(base, gamma_star(base)); flags "RBelow3" when liminf a_i < 3.
MResult rho_lower_via_gamma_star(const NcfExpansion& base);

struct RhoSearchOptions {
  int period_multiple = 1;
  /// Largest |t_i| tried; negative means no cap beyond a_i - 2.
  long t_cap = -1;
  std::uint64_t node_budget = 20'000'000;
  /// Also try admissible patterns with t_i = a_i, scored by m_exact_general.
  bool include_t_equals_a = true;
};

struct RhoSearchResult {
  DigitSeq digits;
  MResult m;
  std::uint64_t nodes = 0;
  std::size_t digit_period = 0;
};

/// Best M(alpha, gamma) over admissible purely periodic t-patterns with period a
/// multiple j * m (j <= period_multiple) of the base period. Branch and bound on
/// interval bounds of the limit s-values; the winner is confirmed exactly
/// (m_exact, or m_exact_general when t_i = a_i occurs). A lower envelope for rho(alpha).
RhoSearchResult rho_search(const NcfExpansion& base, const RhoSearchOptions& options = {});

}  // namespace ncfapprox
