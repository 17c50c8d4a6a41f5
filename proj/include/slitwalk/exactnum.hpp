#pragma once

// Exact coefficient fields: rationals and the quadratic extensions Q(i), Q(sqrt 2).

#include <gmpxx.h>

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>

#include "slitwalk/errors.hpp"

namespace slitwalk {

using BigInt = mpz_class;
using BigRat = mpq_class;

// "num/den", always with an explicit denominator.
std::string to_string(const BigRat& q);
// Integers print without a denominator; everything else as "num/den".
std::string to_compact_string(const BigRat& q);
BigRat parse_rat(std::string_view text);

BigInt binomial(long n, long k);
BigInt catalan_number(long n);

// Sign of a rational: -1, 0, +1.
inline int sign(const BigRat& q) { return sgn(q); }

// Element a + b*sqrt(D) of Q(sqrt D). Only D = -1 (Gaussian rationals) and
// D = 2 are supported; elements of distinct fields are distinct types.
template <int D>
class QuadElem {
  static_assert(D == -1 || D == 2, "only Q(i) and Q(sqrt 2) are supported");

 public:
  static constexpr int discriminant = D;

  QuadElem() = default;
  QuadElem(BigRat a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadElem(long a) : a_(a) {}               // NOLINT(google-explicit-constructor)
  QuadElem(BigRat a, BigRat b) : a_(std::move(a)), b_(std::move(b)) {}

  // sqrt(D) itself.
  static QuadElem root() { return QuadElem(0, 1); }

  const BigRat& a() const { return a_; }
  const BigRat& b() const { return b_; }
  int d() const { return D; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

  QuadElem conjugate() const { return QuadElem(a_, -b_); }
  // a^2 - D b^2
  BigRat norm() const { return a_ * a_ - BigRat(D) * b_ * b_; }

  QuadElem inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in quadratic field");
    BigRat n = norm();
    return QuadElem(a_ / n, -b_ / n);
  }

  QuadElem& operator+=(const QuadElem& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadElem& operator-=(const QuadElem& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadElem& operator*=(const QuadElem& o) {
    BigRat na = a_ * o.a_ + BigRat(D) * b_ * o.b_;
    BigRat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
  }
  QuadElem& operator/=(const QuadElem& o) { return *this *= o.inverse(); }

  friend QuadElem operator+(QuadElem l, const QuadElem& r) { return l += r; }
  friend QuadElem operator-(QuadElem l, const QuadElem& r) { return l -= r; }
  friend QuadElem operator*(QuadElem l, const QuadElem& r) { return l *= r; }
  friend QuadElem operator/(QuadElem l, const QuadElem& r) { return l /= r; }
  friend QuadElem operator-(const QuadElem& x) { return QuadElem(-x.a_, -x.b_); }

  friend bool operator==(const QuadElem& l, const QuadElem& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const QuadElem& l, const QuadElem& r) { return !(l == r); }

 private:
  BigRat a_{0};
  BigRat b_{0};
};

using GaussRat = QuadElem<-1>;
using Sqrt2Rat = QuadElem<2>;

// Exact sign of a + b*sqrt(2), by comparing a^2 against 2 b^2.
int sign(const Sqrt2Rat& x);
inline bool operator<(const Sqrt2Rat& l, const Sqrt2Rat& r) { return sign(r - l) > 0; }
inline bool operator>(const Sqrt2Rat& l, const Sqrt2Rat& r) { return r < l; }

// Float conversion with relative error at most 2^(1 - precision_bits).
// Cancellation between a and b*sqrt(2) is avoided by dividing the exact
// norm by the conjugate.
std::string to_decimal(const Sqrt2Rat& x, int precision_bits, int digits);
double to_double(const Sqrt2Rat& x, int precision_bits = 64);
double to_double(const BigRat& q);
std::complex<double> to_complex(const GaussRat& x);

// Runtime-tagged element, for callers that only learn the field at runtime
// (JSON, CLI, Python). Mixing tags raises DiscriminantMismatch.
using AnyQuad = std::variant<GaussRat, Sqrt2Rat>;

enum class QuadOp { add, sub, mul, div };

AnyQuad make_quad(const BigRat& a, const BigRat& b, int d);
int discriminant_of(const AnyQuad& x);
AnyQuad quad_field_ops(const AnyQuad& lhs, const AnyQuad& rhs, QuadOp op);
// For d = -1 the result is the real part; use to_complex for both parts.
double quad_to_float(const AnyQuad& x, int precision_bits = 53);

// "a + b*i" / "a + b*sqrt(2)" with compact rationals.
std::string to_string(const GaussRat& x);
std::string to_string(const Sqrt2Rat& x);

template <int D>
std::ostream& operator<<(std::ostream& os, const QuadElem<D>& x) {
  return os << to_string(x);
}

}  // namespace slitwalk
