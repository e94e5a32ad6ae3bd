#ifndef QUADMAT_QUADINT_HPP
#define QUADMAT_QUADINT_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "quadmat/errors.hpp"
#include "quadmat/integer.hpp"

namespace quadmat {

// n = m^2 * d with d square-free (sign of n carried by d)
struct SquarefreeDecomposition {
  Int m;
  Int d;
};

// Trial division; intended for desk-scale inputs.
bool is_squarefree(const Int& n);
SquarefreeDecomposition squarefree_decompose(const Int& n);

// An algebraic integer (s + t*sqrt(D))/2 of the quadratic field Q(sqrt(D)),
// D square-free.  Half-coordinates are used throughout so that ring elements
// like (1+sqrt(5))/2 are representable exactly; the constructor enforces the
// integrality parity: s == t (mod 2) when D == 1 (mod 4), s and t both even
// otherwise.  D = 1 is the rational degenerate case (t must be 0).
class QuadInt {
 public:
  // zero (as a rational integer)
  QuadInt() : s_(0), t_(0), d_(1) {}

  QuadInt(Int s, Int t, Int d);

  // the rational integer n, usable in any field
  static QuadInt integer(const Int& n) { return QuadInt(2 * n, 0, 1); }
  // sqrt(D) itself
  static QuadInt root(const Int& d) { return QuadInt(0, 2, d); }
  // (-1 + sqrt(-3))/2, the primitive sixth root times -1
  static QuadInt omega() { return QuadInt(-1, 1, -3); }

  const Int& s() const { return s_; }
  const Int& t() const { return t_; }
  const Int& field() const { return d_; }

  bool is_zero() const { return s_ == 0 && t_ == 0; }
  // lies in Q, i.e. the sqrt(D) coordinate vanishes
  bool is_rational_integer() const { return t_ == 0; }
  // value s/2 of a rational element
  Int rational_value() const;

  bool operator==(const QuadInt& other) const;
  bool operator!=(const QuadInt& other) const { return !(*this == other); }
  // total order compatible with ==; rational elements compare by value
  // regardless of the ambient field
  bool operator<(const QuadInt& other) const;

 private:
  Int s_, t_, d_;
};

QuadInt operator+(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a, const QuadInt& b);
QuadInt operator-(const QuadInt& a);
QuadInt operator*(const QuadInt& a, const QuadInt& b);
QuadInt operator*(const Int& k, const QuadInt& a);

QuadInt conj(const QuadInt& x);
// x * conj(x) = (s^2 - t^2 D)/4, a rational integer
Int norm(const QuadInt& x);
// x + conj(x) = s
Int trace(const QuadInt& x);
QuadInt pow(const QuadInt& x, unsigned long n);

// Multiplicative exponent classification: the least e with x^e rational,
// when one exists.  Over a quadratic field the only possibilities are
// 1, 2, 3, 4, 6 or none at all.
class ExponentClass {
 public:
  static ExponentClass finite(int e) { return ExponentClass(e); }
  static ExponentClass unbounded() { return ExponentClass(0); }

  bool is_finite() const { return e_ != 0; }
  // the exponent value; only meaningful when finite
  int value() const;
  // finite and dividing n
  bool divides(unsigned long n) const { return is_finite() && n % e_ == 0; }

  bool operator==(const ExponentClass&) const = default;

 private:
  explicit ExponentClass(int e) : e_(e) {}
  int e_;
};

// Classifies a nonzero element of a genuine quadratic field (D != 1).
ExponentClass exponent(const QuadInt& x);

// Rendering: "3", "8+3√5", "(11+3√5)/2" depending on which coordinates are
// integral.  parse_quadint accepts those forms plus "sqrt(-7)" spellings;
// a bare integer literal is placed in the field `rational_field`.
std::string to_string(const QuadInt& x);
QuadInt parse_quadint(std::string_view text, const Int& rational_field = 1);

std::string to_string(const ExponentClass& e);

std::ostream& operator<<(std::ostream& os, const QuadInt& x);
std::ostream& operator<<(std::ostream& os, const ExponentClass& e);

}  // namespace quadmat

#endif
