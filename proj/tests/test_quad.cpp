#include <doctest.h>

#include <random>

#include "ncfapprox/quad.hpp"
#include "oracle.hpp"

using namespace ncfapprox;

namespace {

QuadNum surd(long a, long b, long d, long c) { return QuadNum::surd(a, b, d, c); }

// floor(10^k * sqrt(n) / m) by integer square root, for decimal checks.
Integer scaled_sqrt_over(long n, long m, int k) {
  Integer ten;
  mpz_ui_pow_ui(ten.get_mpz_t(), 10, static_cast<unsigned long>(2 * k));
  Integer r = sqrt(Integer(n) * ten);
  return r / m;
}

}  // namespace

TEST_CASE("quad arithmetic examples") {
  CHECK(surd(1, 1, 5, 2) + surd(1, -1, 5, 2) == QuadNum(1));
  CHECK(surd(3, -1, 5, 2) * surd(3, 1, 5, 2) == QuadNum(1));
  const QuadNum q = QuadNum(1) / surd(3, -1, 5, 2);
  CHECK(q == surd(3, 1, 5, 2));
  CHECK(q * surd(3, -1, 5, 2) == QuadNum(1));
  CHECK_THROWS_AS(QuadNum(1) / QuadNum(0), Error);
  try {
    (void)(QuadNum::sqrt(2) + QuadNum::sqrt(3));
    FAIL("expected MixedFields");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MixedFields);
  }
}

TEST_CASE("canonical form") {
  const QuadNum x = surd(2, 2, 20, 4);  // (2 + 2*2*sqrt5)/4 = (1 + 2 sqrt5)/2
  CHECK(x.a() == 1);
  CHECK(x.b() == 2);
  CHECK(x.c() == 2);
  CHECK(x.radicand() == 5);
  CHECK(QuadNum::sqrt(9) == QuadNum(3));
  CHECK(QuadNum::rational(4, 2) == QuadNum(2));
  CHECK(QuadNum::rational(3, -6).c() == 2);
  CHECK(surd(1, 1, 0, 3).radicand() == 1);
  CHECK(surd(1, 1, 1, 3) == QuadNum::rational(2, 3));
}

TEST_CASE("compare examples") {
  CHECK(compare(surd(3, -1, 5, 2), QuadNum::rational(1, 2)) == Ordering::LT);
  CHECK(compare(QuadNum::sqrt(2), QuadNum::rational(3, 2)) == Ordering::LT);
  const QuadNum x = surd(7, -3, 11, 5);
  CHECK(compare(x, x) == Ordering::EQ);
  CHECK(QuadNum::sqrt(2) < QuadNum::sqrt(3));
  CHECK(surd(0, 1, 3, 2) > QuadNum::sqrt(5) / QuadNum(3));
}

TEST_CASE("floor and ceil examples") {
  CHECK(surd(3, 1, 5, 2).floor() == 2);
  CHECK(surd(3, 1, 5, 2).ceil() == 3);
  CHECK(QuadNum::rational(7, 3).floor() == 2);
  CHECK(QuadNum::rational(7, 3).ceil() == 3);
  CHECK(QuadNum::rational(4, 2).floor() == 2);
  CHECK(QuadNum::rational(4, 2).ceil() == 2);
  CHECK(QuadNum::rational(-7, 3).floor() == -3);
  CHECK(surd(0, -1, 2, 1).floor() == -2);
}

TEST_CASE("to_decimal examples") {
  const QuadNum c3 = QuadNum(1) / (QuadNum(6) * QuadNum::sqrt(3) + QuadNum(8));
  CHECK(to_decimal(c3, 6) == "0.054371");
  CHECK(to_decimal(QuadNum::rational(1, 2), 4) == "0.5000");
  const QuadNum inv_sqrt5 = surd(0, 1, 5, 5);
  // 0.4472135954... rounds up at the eighth digit
  CHECK(to_decimal(inv_sqrt5, 8) == "0.44721360");
  CHECK(scaled_sqrt_over(5, 5, 8) == 44721359);
  CHECK(to_decimal(inv_sqrt5, 30) == "0." + scaled_sqrt_over(5, 5, 30).get_str());
  CHECK(to_decimal(QuadNum::rational(-1, 3), 3) == "-0.333");
  CHECK(to_decimal(QuadNum::rational(2, 3), 3) == "0.667");
  CHECK_THROWS_AS(to_decimal(inv_sqrt5, 51), Error);
}

TEST_CASE("squarefree split") {
  const auto s = squarefree_split(Integer(3122285));
  CHECK(s.root * s.root * s.core == 3122285);
  CHECK(squarefree_split(Integer(72)).core == 2);
  CHECK(squarefree_split(Integer(72)).root == 6);
  CHECK(squarefree_split(Integer(0)).root == 0);
}

TEST_CASE("quad field properties on random elements") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<long> small(-40, 40);
  std::uniform_int_distribution<long> pos(1, 30);
  std::uniform_int_distribution<long> rad(2, 60);
  for (int it = 0; it < 500; ++it) {
    const long d = rad(rng);
    const QuadNum x = surd(small(rng), small(rng), d, pos(rng));
    const QuadNum y = surd(small(rng), small(rng), d, pos(rng));
    CHECK((x + (-x)).is_zero());
    if (!x.is_zero()) CHECK(x * (QuadNum(1) / x) == QuadNum(1));
    const QuadNum again = QuadNum::surd(x.a(), x.b(), x.radicand(), x.c());
    CHECK(again == x);
    const Integer f = x.floor();
    CHECK(QuadNum(f) <= x);
    CHECK(x < QuadNum(f + 1));
    const long double dx = oracle::approx(x);
    const long double dy = oracle::approx(y);
    if (std::fabs(dx - dy) > 1e-12L) CHECK(((x < y) == (dx < dy)));
    // order agrees with decimal rendering when renderings differ
    const std::string sx = to_decimal(x, 20), sy = to_decimal(y, 20);
    if (sx != sy) {
      const QuadNum rx = QuadNum::rational(Integer(std::string(sx).erase(sx.find('.'), 1), 10),
                                           Integer("100000000000000000000", 10));
      const QuadNum ry = QuadNum::rational(Integer(std::string(sy).erase(sy.find('.'), 1), 10),
                                           Integer("100000000000000000000", 10));
      CHECK(((x < y) == (rx < ry)));
    }
  }
}
