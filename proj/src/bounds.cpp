#include "ncfapprox/bounds.hpp"

#include <array>

namespace ncfapprox {

namespace {

void require_r3(long r) {
  if (r < 3) throw Error(ErrorKind::RBelow3, "R = " + std::to_string(r) + " is below 3");
}

QuadNum beta_of(long r_star) {
  return QuadNum::surd(r_star, -1, r_star * r_star - 4, 2);
}

}  // namespace

BoundReport bound_report(long r) {
  require_r3(r);
  BoundReport b;
  b.r = r;
  const bool even = r % 2 == 0;
  b.r_star = even ? r : r + 1;
  b.r_star_star = even ? r + 1 : r;
  b.beta = beta_of(b.r_star);
  b.delta = (QuadNum(b.r_star_star) - b.beta).reciprocal();
  const QuadNum one = 1, two = 2, four = 4;
  const QuadNum den = four * (one - b.delta * b.beta);
  b.c = (one - two * b.delta) * (one - b.beta) / den;
  if (!even && r >= 5) {
    b.c1 = (one - two * b.delta + two * b.delta * b.beta / (one + b.beta)) * (one - b.beta) / den;
  }
  b.upper = QuadNum::rational(r - 1, 4 * r);
  b.e_index = even ? 1 : 2;
  b.e = even ? e1_term(r) : e2_term(r);
  if (r <= 8) b.cstar_inverse = std::string(cstar_reference(r));
  return b;
}

QuadNum e1_term(long r) {
  if (r < 4 || r % 2 != 0) throw Error(ErrorKind::ParityMismatch, "E1 needs even R >= 4, got " + std::to_string(r));
  const QuadNum beta = beta_of(r);
  const QuadNum one = 1, two = 2;
  const QuadNum num = QuadNum(11) - two * beta * (QuadNum(6) - QuadNum(3) * beta + beta * beta);
  return num / (one + (one - two * beta) / QuadNum(r));
}

QuadNum e2_term(long r) {
  if (r < 3 || r % 2 == 0) throw Error(ErrorKind::ParityMismatch, "E2 needs odd R >= 3, got " + std::to_string(r));
  const QuadNum beta = beta_of(r + 1);
  const QuadNum one = 1, two = 2;
  const QuadNum num = QuadNum(10) - two * beta * (QuadNum(11) - QuadNum(7) * beta + two * beta * beta);
  return num / (one - two * beta / QuadNum(r));
}

QuadNum e_terms(long r) { return r % 2 == 0 ? e1_term(r) : e2_term(r); }

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Thm2: return "thm2";
    case FamilyKind::Thm3: return "thm3";
    case FamilyKind::Sec6: return "sec6";
    case FamilyKind::Pitman: return "pitman";
    case FamilyKind::Period2: return "period2";
  }
  return "?";
}

FamilyKind parse_family_kind(std::string_view name) {
  for (FamilyKind k : {FamilyKind::Thm2, FamilyKind::Thm3, FamilyKind::Sec6, FamilyKind::Pitman,
                       FamilyKind::Period2}) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorKind::BadFamilyParams, "unknown family '" + std::string(name) + "'");
}

NcfExpansion family(FamilyKind kind, long r, long l) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorKind::BadFamilyParams,
                 std::string(to_string(kind)) + " with R = " + std::to_string(r) + ", l = " + std::to_string(l) + ": " + why);
  };
  switch (kind) {
    case FamilyKind::Thm2: {
      if (r < 4 || r % 2 != 0) throw bad("R must be even and at least 4");
      if (l < 1) throw bad("l must be positive");
      std::vector<long> w{r + 1};
      w.insert(w.end(), static_cast<std::size_t>(l), r);
      return NcfExpansion::periodic(w);
    }
    case FamilyKind::Thm3:
      if (r < 3 || r % 2 == 0) throw bad("R must be odd and at least 3");
      return NcfExpansion::periodic({r, r, r + 1, r, r + 1, r + 1, r, r + 1, r + 1, r, r + 1});
    case FamilyKind::Sec6: {
      if (r < 3 || r % 2 == 0) throw bad("R must be odd and at least 3");
      if (l < 1) throw bad("l must be positive");
      std::vector<long> w{r};
      w.insert(w.end(), static_cast<std::size_t>(l), r + 1);
      return NcfExpansion::periodic(w);
    }
    case FamilyKind::Pitman:
      return expand(pitman_alpha());
    case FamilyKind::Period2:
      if (r == 3) return NcfExpansion::periodic({3, 5});
      if (r == 5) return NcfExpansion::periodic({5, 6});
      if (r == 7) return NcfExpansion::periodic({7, 8});
      throw bad("R must be 3, 5 or 7");
  }
  throw bad("unknown family");
}

QuadNum pitman_alpha() { return QuadNum::surd(-1097, 1, 3122285, 1094); }

QuadNum pitman_rho() { return QuadNum(547) / (QuadNum(4) * QuadNum::sqrt(3122285)); }

QuadNum period2_rho(long r) {
  if (r == 3) return QuadNum(13) / (QuadNum(11) * QuadNum::sqrt(165));
  if (r == 5) return QuadNum(589) / (QuadNum(312) * QuadNum::sqrt(195));
  if (r == 7) return QuadNum(3649) / (QuadNum(1664) * QuadNum::sqrt(182));
  throw Error(ErrorKind::BadFamilyParams, "period2 with R = " + std::to_string(r) + ": R must be 3, 5 or 7");
}

std::string_view cstar_reference(long r) {
  static constexpr std::array<std::string_view, 7> kTable = {
      "25.1592...", "20.4874...", "9.3372...", "8.2500...", "6.8120...", "6.4643...", "5.9109...",
  };
  if (r < 2 || r > 8) throw Error(ErrorKind::OutOfTable, "C*(R) is tabulated for 2 <= R <= 8, got " + std::to_string(r));
  return kTable[static_cast<std::size_t>(r - 2)];
}

}  // namespace ncfapprox
