#include <doctest.h>

#include <random>

#include "ncfapprox/approx.hpp"
#include "ncfapprox/bounds.hpp"
#include "oracle.hpp"

using namespace ncfapprox;

namespace {

QuadNum sq(long n) { return QuadNum::sqrt(n); }

// C(R) via the closed forms for even and odd R.
long double c_closed(long r) {
  const long double rr = static_cast<long double>(r);
  if (r % 2 == 0) return 0.25L * (rr - 2) / (std::sqrt(rr * rr - 4) + 1);
  const long double s = std::sqrt((rr + 1) * (rr + 1) - 4);
  return 0.25L * (2 * rr - 2 - s) / (s - 1);
}

}  // namespace

TEST_CASE("bound report examples") {
  const auto b3 = bound_report(3);
  CHECK(b3.c == (QuadNum(6) * sq(3) + QuadNum(8)).reciprocal());
  CHECK(b3.r_star == 4);
  CHECK(b3.r_star_star == 3);
  CHECK(!b3.c1.has_value());
  CHECK(b3.e_index == 2);
  const auto b4 = bound_report(4);
  CHECK(b4.c == (QuadNum(4) * sq(3) + QuadNum(2)).reciprocal());
  CHECK(b4.r_star == 4);
  CHECK(b4.r_star_star == 5);
  CHECK(std::fabs(1 / oracle::approx(b3.c) - 18.3923048454L) < 1e-9L);
  CHECK(std::fabs(1 / oracle::approx(b4.c) - 8.9282032303L) < 1e-9L);

  const double inv[] = {7.9497, 6.6568, 6.3431, 5.8306};
  for (long r = 5; r <= 8; ++r) {
    const double got = 1 / to_double(bound_report(r).c);
    CHECK(std::floor(got * 1e4) / 1e4 == doctest::Approx(inv[r - 5]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(bound_report(2), Error);
}

TEST_CASE("bound report structure") {
  for (long r = 3; r <= 60; ++r) {
    const auto b = bound_report(r);
    const QuadNum one = 1;
    CHECK(b.beta == (QuadNum(b.r_star) - sq(b.r_star * b.r_star - 4)) / QuadNum(2));
    CHECK(b.delta * (QuadNum(b.r_star_star) - b.beta) == one);
    CHECK(std::fabs(oracle::approx(b.c) - c_closed(r)) < 1e-15L);
    CHECK(b.c < b.upper);
    CHECK(b.upper < QuadNum::rational(1, 4));
    CHECK(b.c.sign() > 0);
    if (r % 2 == 0) {
      CHECK(b.beta == b.delta + b.delta * b.beta);
      CHECK(b.beta > b.delta);
      CHECK((one - QuadNum(2) * b.delta) * (one - b.beta) ==
            one - QuadNum(3) * b.beta + QuadNum(4) * b.delta * b.beta);
      CHECK(QuadNum(4) * b.c - (one - QuadNum::rational(3, r) + QuadNum::rational(5, r * r)) ==
            -b.e / QuadNum(r * r * r));
    } else {
      CHECK(b.delta == b.beta + b.delta * b.beta);
      CHECK(b.delta > b.beta);
      CHECK(QuadNum(4) * b.c - (one - QuadNum::rational(3, r) + QuadNum::rational(4, r * r)) ==
            -b.e / QuadNum(r * r * r));
    }
    if (r > 3) CHECK(bound_report(r - 1).c < b.c);
  }
  CHECK(bound_report(10001).c > QuadNum::rational(2499, 10000));
}

TEST_CASE("C1 exceeds C for odd R") {
  for (long r = 5; r <= 99; r += 2) {
    const auto b = bound_report(r);
    REQUIRE(b.c1.has_value());
    CHECK(*b.c1 > b.c);
  }
  // 4 C1 = 1 - 3/R + 6/R^2 + O(R^-3)
  const long r = 999;
  const long double c1 = oracle::approx(*bound_report(r).c1);
  const long double rr = r;
  CHECK(std::fabs(4 * c1 - (1 - 3 / rr + 6 / (rr * rr))) * rr * rr * rr < 50);
}

TEST_CASE("E terms") {
  CHECK(e1_term(4) == (QuadNum(524) - QuadNum(256) * sq(3)) / QuadNum(11));
  CHECK(e2_term(3) == (QuadNum(348) - QuadNum(162) * sq(3)) / QuadNum(11));
  CHECK(std::fabs(oracle::approx(e1_term(4)) - 7.3268L) < 1e-4L);
  CHECK(std::fabs(oracle::approx(e2_term(3)) - 6.1279L) < 1e-4L);
  CHECK_THROWS_AS(e1_term(5), Error);
  CHECK_THROWS_AS(e2_term(4), Error);
  CHECK_THROWS_AS(e1_term(2), Error);
  QuadNum prev = e1_term(4);
  for (long r = 6; r <= 200; r += 2) {
    const QuadNum e = e1_term(r);
    CHECK(prev < e);
    CHECK(e < QuadNum(11));
    prev = e;
  }
  prev = e2_term(3);
  for (long r = 5; r <= 201; r += 2) {
    const QuadNum e = e2_term(r);
    CHECK(prev < e);
    CHECK(e < QuadNum(10));
    prev = e;
  }
}

TEST_CASE("families") {
  CHECK(family(FamilyKind::Thm2, 4, 2) == NcfExpansion::periodic({5, 4, 4}));
  CHECK(family(FamilyKind::Thm3, 5) == NcfExpansion::periodic({5, 5, 6, 5, 6, 6, 5, 6, 6, 5, 6}));
  CHECK(family(FamilyKind::Sec6, 5, 3) == NcfExpansion::periodic({5, 6, 6, 6}));
  CHECK(family(FamilyKind::Period2, 3) == NcfExpansion::periodic({3, 5}));
  CHECK(period2_rho(3) == QuadNum(13) / (QuadNum(11) * sq(165)));
  CHECK(std::fabs(1 / oracle::approx(period2_rho(5)) - 7.3970L) < 1e-4L);
  CHECK(std::fabs(1 / oracle::approx(period2_rho(7)) - 6.1519L) < 1e-4L);
  CHECK(value_of(family(FamilyKind::Pitman, 0)) == pitman_alpha());
  CHECK(std::fabs(1 / oracle::approx(pitman_rho()) - 12.9213L) < 1e-4L);
  CHECK_THROWS_AS(family(FamilyKind::Thm2, 5, 1), Error);
  CHECK_THROWS_AS(family(FamilyKind::Thm3, 6), Error);
  CHECK_THROWS_AS(family(FamilyKind::Sec6, 5, 0), Error);
  CHECK_THROWS_AS(family(FamilyKind::Period2, 4), Error);
  CHECK(parse_family_kind("sec6") == FamilyKind::Sec6);
  CHECK_THROWS_AS(parse_family_kind("thm9"), Error);
}

TEST_CASE("C* reference table") {
  CHECK(cstar_reference(2) == "25.1592...");
  CHECK(cstar_reference(5) == "8.2500...");
  CHECK_THROWS_AS(cstar_reference(9), Error);
  CHECK_THROWS_AS(cstar_reference(1), Error);
  // closed form for R = 2
  const long double s10 = std::sqrt(10.0L), s13 = std::sqrt(13.0L);
  const long double best = (s10 - 3) * (7 - s13) / (31 - 2 * s10 - 3 * s13);
  CHECK(std::fabs(1 / best - 25.1592L) < 1e-4L);
  // C improves C* for R >= 3
  for (long r = 3; r <= 8; ++r) {
    CHECK(1 / to_double(bound_report(r).c) < std::stod(std::string(cstar_reference(r))));
  }
}

TEST_CASE("gamma* meets C(R) on random bases") {
  std::mt19937 rng(1);
  for (int it = 0; it < 60; ++it) {
    const auto w = oracle::random_word(rng, 5, 3, 9);
    const auto base = NcfExpansion::periodic(w);
    const long r = base.liminf_term();
    const MResult m = rho_lower_via_gamma_star(base);
    CHECK(m.value >= bound_report(r).c);
    CHECK(m.value <= bound_report(r).upper);
  }
}

TEST_CASE("Pitman example") {
  const auto base = family(FamilyKind::Pitman, 0);
  RhoSearchOptions o;
  o.period_multiple = 3;
  const auto r = rho_search(base, o);
  CHECK(r.m.value == pitman_rho());
  CHECK(period_has_t_equal_a(r.digits));
}
