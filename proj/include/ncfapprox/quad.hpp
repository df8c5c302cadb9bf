#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <string>

#include "ncfapprox/error.hpp"

namespace ncfapprox {

using Integer = mpz_class;

/// An exact element (a + b*sqrt(D))/c of Q or of a real quadratic field Q(sqrt(D)).
///
/// Values are always canonical: c > 0, gcd(a, b, c) = 1, D squarefree, and
/// rationals are stored with b = 0 and D = 1. Two values are equal iff their
/// canonical tuples are identical. Every predicate (sign, comparison, floor)
/// is decided with integer arithmetic only.
class QuadNum {
 public:
  QuadNum() : a_(0), b_(0), c_(1), d_(1) {}
  QuadNum(long value) : a_(value), b_(0), c_(1), d_(1) {}  // NOLINT implicit by design of literals
  QuadNum(const Integer& value) : a_(value), b_(0), c_(1), d_(1) {}  // NOLINT

  /// num/den; throws DivisionByZero when den == 0.
  static QuadNum rational(const Integer& num, const Integer& den);

  /// (a + b*sqrt(radicand))/c with any integer inputs; radicand >= 0 is reduced
  /// to its squarefree part.
  static QuadNum surd(const Integer& a, const Integer& b, const Integer& radicand,
                      const Integer& c);

  /// sqrt(n) for a non-negative integer n.
  static QuadNum sqrt(const Integer& n) { return surd(0, 1, n, 1); }

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& c() const { return c_; }
  /// Radicand D (1 for rationals).
  const Integer& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_integer() const { return b_ == 0 && c_ == 1; }
  int sign() const;

  QuadNum conjugate() const;
  /// Field norm x * conj(x), always rational.
  QuadNum norm() const;
  QuadNum reciprocal() const;
  QuadNum abs() const { return sign() < 0 ? -*this : *this; }

  Integer floor() const;
  Integer ceil() const;
  /// x - floor(x), in [0, 1).
  QuadNum frac() const;

  QuadNum operator-() const;
  QuadNum& operator+=(const QuadNum& rhs);
  QuadNum& operator-=(const QuadNum& rhs);
  QuadNum& operator*=(const QuadNum& rhs);
  QuadNum& operator/=(const QuadNum& rhs);

  friend QuadNum operator+(QuadNum lhs, const QuadNum& rhs) { return lhs += rhs; }
  friend QuadNum operator-(QuadNum lhs, const QuadNum& rhs) { return lhs -= rhs; }
  friend QuadNum operator*(QuadNum lhs, const QuadNum& rhs) { return lhs *= rhs; }
  friend QuadNum operator/(QuadNum lhs, const QuadNum& rhs) { return lhs /= rhs; }

  friend bool operator==(const QuadNum& x, const QuadNum& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  /// Numeric order. Works across different quadratic fields as well.
  friend std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y);

  /// Surd literal: "p", "p/q" or "(a+b*sqrt(D))/c".
  std::string to_string() const;

  /// Lexicographic order on the canonical tuple; for use as a map key only.
  struct TupleLess {
    bool operator()(const QuadNum& x, const QuadNum& y) const;
  };

  /// Raw constructor for already canonical data (no reduction of D).
  static QuadNum from_canonical_parts(Integer a, Integer b, Integer c, Integer d);

 private:
  QuadNum(Integer a, Integer b, Integer c, Integer d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  void normalize();
  static Integer common_radicand(const QuadNum& x, const QuadNum& y, const char* op);

  Integer a_;
  Integer b_;
  Integer c_;
  Integer d_;
};

enum class Ordering { LT, EQ, GT };

/// Exact three-way comparison.
Ordering compare(const QuadNum& x, const QuadNum& y);

inline constexpr int kDefaultMaxDecimalDigits = 50;

/// Correctly rounded fixed-point rendering with `digits` fractional digits.
/// Throws OutOfRange when digits exceeds max_digits.
std::string to_decimal(const QuadNum& x, int digits, int max_digits = kDefaultMaxDecimalDigits);

/// Nearest-double approximation (for reporting and search heuristics only).
double to_double(const QuadNum& x);

/// floor(x * 2^bits), exact.
Integer scaled_floor(const QuadNum& x, unsigned bits);

/// Squarefree part s of n >= 0 together with the root r such that n = r^2 * s.
struct SquarefreeSplit {
  Integer root;
  Integer core;
};
SquarefreeSplit squarefree_split(const Integer& n);

}  // namespace ncfapprox
