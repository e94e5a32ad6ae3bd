#ifndef QUADMAT_MAT2_HPP
#define QUADMAT_MAT2_HPP

#include <iosfwd>
#include <string>
#include <string_view>

#include "quadmat/integer.hpp"

namespace quadmat {

// [[a, b], [c, d]] over the integers
struct Mat2 {
  Int a, b, c, d;

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {0, 0, 0, 0}; }
  static Mat2 scalar(const Int& k) { return {k, 0, 0, k}; }

  bool is_zero() const { return a == 0 && b == 0 && c == 0 && d == 0; }
  bool is_scalar() const { return b == 0 && c == 0 && a == d; }

  bool operator==(const Mat2& o) const = default;
};

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
  return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d};
}

inline Mat2 operator-(const Mat2& x, const Mat2& y) {
  return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d};
}

inline Mat2 operator-(const Mat2& x) { return {-x.a, -x.b, -x.c, -x.d}; }

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
          x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

inline Mat2 operator*(const Int& k, const Mat2& x) {
  return {k * x.a, k * x.b, k * x.c, k * x.d};
}

inline Int trace(const Mat2& x) { return x.a + x.d; }
inline Int det(const Mat2& x) { return x.a * x.d - x.b * x.c; }

// lexicographic entry order; usable as a map key
int compare(const Mat2& x, const Mat2& y);
inline bool operator<(const Mat2& x, const Mat2& y) { return compare(x, y) < 0; }

// "[[a,b],[c,d]]"
std::string to_string(const Mat2& x);
Mat2 parse_mat2(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Mat2& x);

}  // namespace quadmat

#endif
