#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "ncfapprox/digits.hpp"
#include "ncfapprox/ncf.hpp"

namespace ncfapprox {

/// Arithmetic over integers, exact decimals and sqrt(n): + - * / and
/// parentheses. Covers the printed forms "p", "p/q" and "(a+b*sqrt(D))/c".
/// Decimals such as "0.5" or "-1.25e-3" become exact rationals.
QuadNum parse_number(std::string_view text);

/// "[0; a1, ..., (p1, ..., pm)*]-"; the trailing "-" and the "0;" are optional.
NcfExpansion parse_ncf(std::string_view text);

using Expr = std::variant<QuadNum, NcfExpansion>;

/// NCF when the text starts with '[', a number otherwise.
Expr parse_expr(std::string_view text);

/// A number, or the value of an NCF.
QuadNum parse_value(std::string_view text);

/// An NCF, or the expansion of a number.
NcfExpansion parse_expansion(std::string_view text);

struct DigitList {
  std::vector<long> pre;
  std::vector<long> period;
  bool is_t = false;  // "t:" prefix
};

/// "[1, (0, 2, 0)*]", optionally prefixed with "b:" or "t:".
DigitList parse_digit_list(std::string_view text);

/// Builds the digit sequence over base from a parsed list.
DigitSeq to_digit_seq(const NcfExpansion& base, const DigitList& list);

}  // namespace ncfapprox
