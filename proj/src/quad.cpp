#include "ncfapprox/quad.hpp"

#include <map>
#include <utility>

namespace ncfapprox {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MixedFields: return "MixedFields";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::PeriodNotFound: return "PeriodNotFound";
    case ErrorKind::NoRootInRange: return "NoRootInRange";
    case ErrorKind::IndexBeyondFiniteExpansion: return "IndexBeyondFiniteExpansion";
    case ErrorKind::FiniteExpansion: return "FiniteExpansion";
    case ErrorKind::EmptyPeriod: return "EmptyPeriod";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::LatticeGamma: return "LatticeGamma";
    case ErrorKind::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorKind::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorKind::RBelow3: return "RBelow3";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::BadFamilyParams: return "BadFamilyParams";
    case ErrorKind::OutOfTable: return "OutOfTable";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_perfect_square(const Integer& n) { return mpz_perfect_square_p(n.get_mpz_t()) != 0; }

// Sign of a + b*sqrt(d) for squarefree d (d == 1 allowed when b == 0).
int surd_sign(const Integer& a, const Integer& b, const Integer& d) {
  const int sa = sgn(a);
  const int sb = sgn(b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const Integer lhs = a * a;
  const Integer rhs = b * b * d;
  if (lhs == rhs) return 0;  // only reachable for non-squarefree d
  return lhs > rhs ? sa : sb;
}

constexpr unsigned long kTrialDivisionCap = 10'000'000UL;

}  // namespace

SquarefreeSplit squarefree_split(const Integer& n) {
  if (n < 0) throw Error(ErrorKind::OutOfRange, "negative radicand " + n.get_str());
  if (n == 0) return {0, 1};

  thread_local std::map<Integer, SquarefreeSplit> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  Integer rest = n;
  Integer root = 1;
  Integer core = 1;
  Integer cube_root;
  mpz_root(cube_root.get_mpz_t(), rest.get_mpz_t(), 3);
  for (unsigned long p = 2; p <= kTrialDivisionCap && cube_root >= p; p += (p == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned exponent = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++exponent;
    }
    for (unsigned e = 0; e < exponent / 2; ++e) root *= p;
    if (exponent % 2 == 1) core *= p;
    mpz_root(cube_root.get_mpz_t(), rest.get_mpz_t(), 3);
  }
  // rest has no prime factor below its cube root, so it is p, p*q or p^2.
  if (rest > 1 && is_perfect_square(rest)) {
    root *= isqrt(rest);
  } else {
    core *= rest;
  }
  SquarefreeSplit split{root, core};
  cache.emplace(n, split);
  return split;
}

QuadNum QuadNum::from_canonical_parts(Integer a, Integer b, Integer c, Integer d) {
  return QuadNum(std::move(a), std::move(b), std::move(c), std::move(d));
}

QuadNum QuadNum::rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::DivisionByZero, "rational with zero denominator");
  QuadNum q(num, 0, den, 1);
  q.normalize();
  return q;
}

QuadNum QuadNum::surd(const Integer& a, const Integer& b, const Integer& radicand,
                      const Integer& c) {
  if (c == 0) throw Error(ErrorKind::DivisionByZero, "surd with zero denominator");
  if (radicand == 0 || b == 0) return rational(a, c);
  const SquarefreeSplit split = squarefree_split(radicand);
  QuadNum q(a, b * split.root, c, split.core);
  q.normalize();
  return q;
}

void QuadNum::normalize() {
  if (d_ == 1) a_ += b_;
  if (d_ == 1 || b_ == 0) {
    b_ = 0;
    d_ = 1;
  }
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
  if (a_ == 0 && b_ == 0) c_ = 1;
}

Integer QuadNum::common_radicand(const QuadNum& x, const QuadNum& y, const char* op) {
  if (x.is_rational()) return y.d_;
  if (y.is_rational() || x.d_ == y.d_) return x.d_;
  throw Error(ErrorKind::MixedFields, std::string(op) + " of sqrt(" + x.d_.get_str() +
                                          ") and sqrt(" + y.d_.get_str() + ") values");
}

int QuadNum::sign() const { return surd_sign(a_, b_, d_); }

QuadNum QuadNum::conjugate() const { return QuadNum(a_, -b_, c_, d_); }

QuadNum QuadNum::norm() const {
  return rational(a_ * a_ - b_ * b_ * d_, c_ * c_);
}

QuadNum QuadNum::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "reciprocal of zero");
  // 1/x = c * (a - b sqrt d) / (a^2 - b^2 d)
  QuadNum r(c_ * a_, -c_ * b_, a_ * a_ - b_ * b_ * d_, d_);
  r.normalize();
  return r;
}

QuadNum QuadNum::operator-() const { return QuadNum(-a_, -b_, c_, d_); }

QuadNum& QuadNum::operator+=(const QuadNum& rhs) {
  Integer d = common_radicand(*this, rhs, "sum");
  if (c_ == rhs.c_) {
    a_ += rhs.a_;
    b_ += rhs.b_;
  } else {
    a_ = a_ * rhs.c_ + rhs.a_ * c_;
    b_ = b_ * rhs.c_ + rhs.b_ * c_;
    c_ *= rhs.c_;
  }
  d_ = std::move(d);
  normalize();
  return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& rhs) { return *this += -rhs; }

QuadNum& QuadNum::operator*=(const QuadNum& rhs) {
  Integer d = common_radicand(*this, rhs, "product");
  Integer a = a_ * rhs.a_ + b_ * rhs.b_ * d;
  Integer b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ *= rhs.c_;
  d_ = std::move(d);
  normalize();
  return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by zero");
  common_radicand(*this, rhs, "quotient");
  return *this *= rhs.reciprocal();
}

Integer QuadNum::floor() const {
  Integer whole;
  if (b_ == 0) {
    whole = a_;
  } else {
    const Integer s = isqrt(b_ * b_ * d_);
    whole = a_ + s;
    if (b_ < 0) whole -= 2 * s + 1;
  }
  // floor(X / c) == floor(floor(X) / c) for integer c > 0.
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), whole.get_mpz_t(), c_.get_mpz_t());
  return q;
}

Integer QuadNum::ceil() const {
  Integer f = floor();
  if (!is_integer()) f += 1;
  return f;
}

QuadNum QuadNum::frac() const { return *this - QuadNum(floor()); }

std::string QuadNum::to_string() const {
  if (b_ == 0) {
    if (c_ == 1) return a_.get_str();
    return a_.get_str() + "/" + c_.get_str();
  }
  std::string out = "(" + a_.get_str();
  out += b_ < 0 ? "-" : "+";
  out += Integer(::abs(b_)).get_str() + "*sqrt(" + d_.get_str() + "))/" + c_.get_str();
  return out;
}

bool QuadNum::TupleLess::operator()(const QuadNum& x, const QuadNum& y) const {
  if (int r = cmp(x.a_, y.a_); r != 0) return r < 0;
  if (int r = cmp(x.b_, y.b_); r != 0) return r < 0;
  if (int r = cmp(x.c_, y.c_); r != 0) return r < 0;
  return cmp(x.d_, y.d_) < 0;
}

Ordering compare(const QuadNum& x, const QuadNum& y) {
  int s = 0;
  if (x.is_rational() || y.is_rational() || x.radicand() == y.radicand()) {
    s = (x - y).sign();
  } else {
    // sign(A + B sqrt(d1) - C sqrt(d2)) after clearing denominators.
    const Integer A = y.c() * x.a() - x.c() * y.a();
    const Integer B = y.c() * x.b();
    const Integer C = x.c() * y.b();
    const int su = surd_sign(A, B, x.radicand());
    const int sv = sgn(C);
    if (su == 0) {
      s = -sv;
    } else if (su != sv) {
      s = su;
    } else {
      // |u| vs |v|: u^2 - v^2 = A^2 + B^2 d1 - C^2 d2 + 2AB sqrt(d1)
      const Integer rat = A * A + B * B * x.radicand() - C * C * y.radicand();
      const int w = surd_sign(rat, 2 * A * B, x.radicand());
      s = su * w;
    }
  }
  return s < 0 ? Ordering::LT : (s > 0 ? Ordering::GT : Ordering::EQ);
}

std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
  switch (compare(x, y)) {
    case Ordering::LT: return std::strong_ordering::less;
    case Ordering::GT: return std::strong_ordering::greater;
    case Ordering::EQ: break;
  }
  return std::strong_ordering::equal;
}

std::string to_decimal(const QuadNum& x, int digits, int max_digits) {
  if (digits < 0 || digits > max_digits) {
    throw Error(ErrorKind::OutOfRange,
                "decimal digits " + std::to_string(digits) + " outside [0, " +
                    std::to_string(max_digits) + "]");
  }
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  const bool negative = x.sign() < 0;
  const Integer n = (x.abs() * QuadNum(scale) + QuadNum::rational(1, 2)).floor();
  std::string body = n.get_str();
  if (body.size() <= static_cast<std::size_t>(digits)) {
    body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
  }
  if (digits > 0) body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  if (negative && n != 0) body.insert(0, "-");
  return body;
}

Integer scaled_floor(const QuadNum& x, unsigned bits) {
  Integer scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), bits);
  return (x * QuadNum(scale)).floor();
}

double to_double(const QuadNum& x) {
  mpf_class root(0, 256);
  if (!x.is_rational()) {
    mpf_class d(x.radicand(), 256);
    mpf_sqrt(root.get_mpf_t(), d.get_mpf_t());
  }
  mpf_class value(x.a(), 256);
  value += mpf_class(x.b(), 256) * root;
  value /= mpf_class(x.c(), 256);
  return value.get_d();
}

}  // namespace ncfapprox
