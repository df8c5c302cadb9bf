#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ncfapprox/ncf.hpp"

namespace ncfapprox {

/// Constants attached to R = liminf a_i.
///   (R*, R**) = (R, R+1) for even R, (R+1, R) for odd R
///   beta = (R* - sqrt(R*^2 - 4)) / 2,  delta = 1 / (R** - beta)
///   C = (1 - 2 delta)(1 - beta) / (4 (1 - delta beta))
struct BoundReport {
  long r = 0;
  long r_star = 0;
  long r_star_star = 0;
  QuadNum beta;
  QuadNum delta;
  QuadNum c;
  std::optional<QuadNum> c1;  // odd R >= 5
  QuadNum upper;              // (1/4)(1 - 1/R)
  int e_index = 1;            // 1 for even R, 2 for odd R
  QuadNum e;                  // E1(R) or E2(R)
  std::optional<std::string> cstar_inverse;
};

/// Throws RBelow3 for R < 3.
BoundReport bound_report(long r);

/// E1(R) = (11 - 2 beta (6 - 3 beta + beta^2)) / (1 + (1 - 2 beta)/R) for even R,
/// E2(R) = (10 - 2 beta (11 - 7 beta + 2 beta^2)) / (1 - 2 beta / R) for odd R.
QuadNum e1_term(long r);
QuadNum e2_term(long r);
/// Whichever of E1, E2 matches the parity of R.
QuadNum e_terms(long r);

enum class FamilyKind { Thm2, Thm3, Sec6, Pitman, Period2 };

std::string_view to_string(FamilyKind kind);
FamilyKind parse_family_kind(std::string_view name);

/// thm2: period R+1, R^l (even R >= 4, l >= 1)
/// thm3: period R,R,R+1,R,R+1,R+1,R,R+1,R+1,R,R+1 (odd R >= 3)
/// sec6: period R, (R+1)^l (odd R >= 3, l >= 1)
/// period2: [0; (3,5)*], [0; (5,6)*], [0; (7,8)*] for R = 3, 5, 7
/// pitman: expansion of (sqrt3122285 - 1097)/1094
NcfExpansion family(FamilyKind kind, long r, long l = 1);

QuadNum pitman_alpha();
/// 547 / (4 sqrt3122285)
QuadNum pitman_rho();

/// Reference rho for the period-two family.
QuadNum period2_rho(long r);

/// C*(R)^{-1} for 2 <= R <= 8 as quoted decimals, e.g. "25.1592...".
std::string_view cstar_reference(long r);

}  // namespace ncfapprox
