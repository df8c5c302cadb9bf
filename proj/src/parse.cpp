#include "ncfapprox/parse.hpp"

#include <cctype>
#include <string>

namespace ncfapprox {

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++i_;
    return true;
  }
  bool accept_word(std::string_view w) {
    skip_ws();
    if (s_.substr(i_, w.size()) != w) return false;
    i_ += w.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(i_, what + (i_ < s_.size() ? " near '" + std::string(s_.substr(i_, 12)) + "'" : " at end of input"));
  }
  std::size_t mark() const { return i_; }
  void rewind(std::size_t at) { i_ = at; }
  void finish() {
    if (!at_end()) fail("unexpected trailing input");
  }

  // Unsigned decimal literal as an exact rational.
  QuadNum number() {
    skip_ws();
    const std::size_t start = i_;
    std::string digits;
    long scale = 0;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    if (i_ < s_.size() && s_[i_] == '.') {
      ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        digits += s_[i_++];
        ++scale;
      }
    }
    if (digits.empty()) {
      i_ = start;
      fail("expected a number");
    }
    if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
      const std::size_t exp_at = i_++;
      bool neg = false;
      if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) neg = s_[i_++] == '-';
      std::string exp;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) exp += s_[i_++];
      if (exp.empty() || exp.size() > 4) {
        i_ = exp_at;
        fail("bad exponent");
      }
      scale += neg ? std::stol(exp) : -std::stol(exp);
    }
    Integer num(digits, 10);
    Integer den = 1;
    if (scale > 0) mpz_ui_pow_ui(den.get_mpz_t(), 10, static_cast<unsigned long>(scale));
    if (scale < 0) {
      Integer p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-scale));
      num *= p;
    }
    return QuadNum::rational(num, den);
  }

  long integer() {
    skip_ws();
    const std::size_t start = i_;
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    std::string digits;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
    if (digits.empty() || digits.size() > 17) {
      i_ = start;
      fail("expected an integer");
    }
    const long v = std::stol(digits);
    return neg ? -v : v;
  }

  // expr := term (('+'|'-') term)*
  QuadNum expr() {
    QuadNum v = term();
    while (true) {
      if (accept('+')) {
        v = combine(v, term(), '+');
      } else if (accept('-')) {
        v = combine(v, term(), '-');
      } else {
        return v;
      }
    }
  }

 private:
  QuadNum combine(const QuadNum& x, const QuadNum& y, char op) {
    try {
      switch (op) {
        case '+': return x + y;
        case '-': return x - y;
        case '*': return x * y;
        default: return x / y;
      }
    } catch (const Error& e) {
      fail(e.what());
    }
  }

  // term := unary (('*'|'/') unary)*
  QuadNum term() {
    QuadNum v = unary();
    while (true) {
      if (accept('*')) {
        v = combine(v, unary(), '*');
      } else if (accept('/')) {
        v = combine(v, unary(), '/');
      } else {
        return v;
      }
    }
  }

  QuadNum unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return atom();
  }

  QuadNum atom() {
    if (accept('(')) {
      QuadNum v = expr();
      expect(')');
      return v;
    }
    if (accept_word("sqrt")) {
      expect('(');
      const std::size_t at = i_;
      QuadNum v = expr();
      expect(')');
      if (!v.is_rational() || v.sign() < 0 || v.c() != 1) {
        throw ParseError(at, "sqrt needs a non-negative integer");
      }
      return QuadNum::sqrt(v.a());
    }
    return number();
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

// "a, b, (c, d)*" up to the closing bracket; returns (pre, period).
std::pair<std::vector<long>, std::vector<long>> bracket_body(Cursor& c) {
  std::vector<long> pre, period;
  bool have_period = false;
  if (c.peek() == ']') return {pre, period};
  while (true) {
    if (c.accept('(')) {
      if (have_period) c.fail("only one periodic block is allowed");
      do {
        period.push_back(c.integer());
      } while (c.accept(','));
      c.expect(')');
      c.expect('*');
      have_period = true;
      if (c.peek() != ']') c.fail("the periodic block must come last");
      break;
    }
    pre.push_back(c.integer());
    if (!c.accept(',')) break;
  }
  return {pre, period};
}

}  // namespace

QuadNum parse_number(std::string_view text) {
  Cursor c(text);
  if (c.at_end()) c.fail("empty expression");
  QuadNum v = c.expr();
  c.finish();
  return v;
}

NcfExpansion parse_ncf(std::string_view text) {
  Cursor c(text);
  c.expect('[');
  // optional leading "0;"
  const std::size_t save = c.mark();
  if (c.accept('0') && !c.accept(';')) c.rewind(save);
  auto [pre, period] = bracket_body(c);
  c.expect(']');
  c.accept('-');
  c.finish();
  try {
    return NcfExpansion(pre, period);
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

Expr parse_expr(std::string_view text) {
  Cursor c(text);
  if (c.peek() == '[') return parse_ncf(text);
  return parse_number(text);
}

QuadNum parse_value(std::string_view text) {
  const Expr e = parse_expr(text);
  if (const auto* x = std::get_if<QuadNum>(&e)) return *x;
  return value_of(std::get<NcfExpansion>(e));
}

NcfExpansion parse_expansion(std::string_view text) {
  const Expr e = parse_expr(text);
  if (const auto* x = std::get_if<NcfExpansion>(&e)) return *x;
  return expand(std::get<QuadNum>(e));
}

DigitList parse_digit_list(std::string_view text) {
  Cursor c(text);
  DigitList out;
  if (c.accept_word("t:")) {
    out.is_t = true;
  } else {
    c.accept_word("b:");
  }
  c.expect('[');
  auto [pre, period] = bracket_body(c);
  c.expect(']');
  c.finish();
  out.pre = std::move(pre);
  out.period = std::move(period);
  return out;
}

DigitSeq to_digit_seq(const NcfExpansion& base, const DigitList& list) {
  if (list.is_t) return DigitSeq::from_t(base, list.pre, list.period);
  return DigitSeq(base, list.pre, list.period);
}

}  // namespace ncfapprox
