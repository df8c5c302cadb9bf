#pragma once

#include <json.hpp>

#include "ncfapprox/approx.hpp"
#include "ncfapprox/bounds.hpp"
#include "ncfapprox/digits.hpp"

namespace ncfapprox::cli {

using nlohmann::ordered_json;

/// {"a","b","c","D"} as decimal strings, value = (a + b sqrt(D)) / c.
ordered_json exact_json(const QuadNum& x);

/// {"value_exact", "value_decimal"} for a number printed with the given digits.
ordered_json value_json(const QuadNum& x, int digits);

ordered_json ncf_json(const NcfExpansion& e);
ordered_json digits_json(const DigitSeq& d);

/// {kind, value_exact, value_decimal, witness, params}
ordered_json mresult_json(const MResult& m, int digits);

ordered_json bound_json(const BoundReport& b, int digits);

}  // namespace ncfapprox::cli
