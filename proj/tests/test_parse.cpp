#include <doctest.h>

#include <random>

#include "ncfapprox/parse.hpp"

using namespace ncfapprox;

TEST_CASE("parse numbers") {
  CHECK(parse_number("0.5") == QuadNum::rational(1, 2));
  CHECK(parse_number("-1.25e-3") == QuadNum::rational(-1, 800));
  CHECK(parse_number("2E2") == QuadNum(200));
  CHECK(parse_number("5/7") == QuadNum::rational(5, 7));
  CHECK(parse_number("(15-1*sqrt(165))/6") == QuadNum::surd(15, -1, 165, 6));
  CHECK(parse_number("sqrt(12)") == QuadNum::surd(0, 2, 3, 1));
  CHECK(parse_number(" ( 3 - sqrt(5) ) / 2 ") == QuadNum::surd(3, -1, 5, 2));
  CHECK(parse_number("-(1+sqrt(2))*(1-sqrt(2))") == QuadNum(1));
  CHECK(parse_number("1/sqrt(5)") == QuadNum::surd(0, 1, 5, 5));
}

TEST_CASE("parse errors carry positions") {
  auto position = [](std::string_view text) -> long {
    try {
      parse_number(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(position("") == 0);
  CHECK(position("1+") == 2);
  CHECK(position("(1+2") == 4);
  CHECK(position("1 2") == 2);
  CHECK(position("sqrt(-3)") == 5);
  CHECK(position("sqrt(1/2)") == 5);
  CHECK(position("1e99999") == 1);
  CHECK_THROWS_AS(parse_number("1/0"), ParseError);
  CHECK_THROWS_AS(parse_number("sqrt(2)+sqrt(3)"), ParseError);
  CHECK_THROWS_AS(parse_number("abc"), ParseError);
}

TEST_CASE("parse expansions") {
  const auto e = parse_ncf("[0; (3,5)*]-");
  CHECK(e.preperiod().empty());
  CHECK(e.period() == std::vector<long>{3, 5});
  CHECK(value_of(e) == parse_number("(15-1*sqrt(165))/6"));
  CHECK(parse_ncf("[2, 2, 3]") == expand(QuadNum::rational(5, 7)));
  CHECK(parse_ncf("[0;4,(3)*]") == NcfExpansion({4}, {3}));
  CHECK(parse_ncf("[0; ]-").is_finite());
  CHECK_THROWS_AS(parse_ncf("[0; (3)*, 4]-"), ParseError);
  CHECK_THROWS_AS(parse_ncf("[0; (3), 4]-"), ParseError);
  CHECK_THROWS_AS(parse_ncf("[0; 1, (3)*]-"), ParseError);
  CHECK_THROWS_AS(parse_ncf("[0; (2)*]-"), ParseError);
  CHECK_THROWS_AS(parse_ncf("[0; 3"), ParseError);

  const Expr x = parse_expr("[0; (3)*]-");
  CHECK(std::holds_alternative<NcfExpansion>(x));
  CHECK(std::holds_alternative<QuadNum>(parse_expr("0.5")));
  CHECK(parse_value("[0; (3)*]-") == QuadNum::surd(3, -1, 5, 2));
  CHECK(parse_expansion("(3-sqrt(5))/2") == NcfExpansion::periodic({3}));
}

TEST_CASE("parse digit lists") {
  const auto base = NcfExpansion::periodic({3});
  const auto b = parse_digit_list("[1, (0, 2, 0)*]");
  CHECK(!b.is_t);
  CHECK(b.pre == std::vector<long>{1});
  CHECK(b.period == std::vector<long>{0, 2, 0});
  CHECK(gamma_from_digits(to_digit_seq(base, b)) == QuadNum::rational(1, 2));
  const auto t = parse_digit_list("t: [(1, -1)*]");
  CHECK(t.is_t);
  CHECK(gamma_from_digits(to_digit_seq(base, t)) == QuadNum::surd(0, 1, 5, 5));
  CHECK(parse_digit_list("b:[(1,0)*]").period == std::vector<long>{1, 0});
  CHECK_THROWS_AS(parse_digit_list("x: [1]"), ParseError);
  CHECK_THROWS_AS(to_digit_seq(base, parse_digit_list("[(5)*]")), Error);
}

TEST_CASE("printer round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> small(-40, 40), den(1, 30), rad(2, 60), term(2, 9);
  for (int it = 0; it < 300; ++it) {
    const QuadNum x = QuadNum::surd(small(rng), small(rng), rad(rng), den(rng));
    CHECK(parse_number(x.to_string()) == x);
    std::vector<long> pre(static_cast<std::size_t>(it % 3)), per(static_cast<std::size_t>(1 + it % 4));
    for (auto& a : pre) a = term(rng);
    for (auto& a : per) a = term(rng);
    if (per == std::vector<long>(per.size(), 2)) per[0] = 3;
    const NcfExpansion e(pre, per);
    CHECK(parse_ncf(e.to_string()) == e);
    const DigitSeq d = alpha_expand(QuadNum::rational(small(rng) + 41, 83), e);
    const auto list = parse_digit_list(d.to_string().substr(0, d.to_string().find(" over")));
    CHECK(to_digit_seq(e, list) == d);
    const auto tl = parse_digit_list(d.t_string());
    CHECK(to_digit_seq(e, tl) == d);
  }
}
