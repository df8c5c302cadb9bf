#include "json_io.hpp"

namespace ncfapprox::cli {

ordered_json exact_json(const QuadNum& x) {
  return {{"a", x.a().get_str()}, {"b", x.b().get_str()}, {"c", x.c().get_str()}, {"D", x.radicand().get_str()}};
}

ordered_json value_json(const QuadNum& x, int digits) {
  return {{"value_exact", exact_json(x)}, {"value_decimal", to_decimal(x, digits)}};
}

ordered_json ncf_json(const NcfExpansion& e) {
  return {{"text", e.to_string()}, {"preperiod", e.preperiod()}, {"period", e.period()}};
}

ordered_json digits_json(const DigitSeq& d) {
  ordered_json j = {
      {"base", d.base().to_string()},
      {"truncated", d.truncated()},
      {"b_pre", d.pre_digits()},
      {"b_period", d.period_digits()},
      {"t_pre", d.t_pre()},
      {"t_period", d.t_period()},
      {"text", d.to_string()},
  };
  if (!d.truncated()) j["t_text"] = d.t_string();
  return j;
}

ordered_json mresult_json(const MResult& m, int digits) {
  ordered_json j;
  j["kind"] = std::string(to_string(m.kind));
  if (m.kind == MKind::Estimate) {
    j["value_exact"] = nullptr;
    j["value_decimal"] = nullptr;
    j["estimate"] = m.estimate;
    j["band_profile"] = m.band_profile;
  } else {
    j["value_exact"] = exact_json(m.value);
    j["value_decimal"] = to_decimal(m.value, digits);
  }
  if (m.witness) {
    j["witness"] = {{"residue", m.witness->residue}, {"j", m.witness->j}};
  } else {
    j["witness"] = nullptr;
  }
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : m.params) params[k] = v;
  j["params"] = params;
  if (!m.flags.empty()) j["flags"] = m.flags;
  return j;
}

ordered_json bound_json(const BoundReport& b, int digits) {
  ordered_json j;
  j["R"] = b.r;
  j["R_star"] = b.r_star;
  j["R_star_star"] = b.r_star_star;
  j["beta"] = value_json(b.beta, digits);
  j["delta"] = value_json(b.delta, digits);
  j["C"] = value_json(b.c, digits);
  j["C_inverse_decimal"] = to_decimal(b.c.reciprocal(), digits);
  j["C1"] = b.c1 ? value_json(*b.c1, digits) : ordered_json(nullptr);
  j["upper"] = value_json(b.upper, digits);
  j[b.e_index == 1 ? "E1" : "E2"] = value_json(b.e, digits);
  j["cstar_inverse"] = b.cstar_inverse ? ordered_json(*b.cstar_inverse) : ordered_json(nullptr);
  return j;
}

}  // namespace ncfapprox::cli
