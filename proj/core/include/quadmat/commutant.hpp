#ifndef QUADMAT_COMMUTANT_HPP
#define QUADMAT_COMMUTANT_HPP

#include <iosfwd>
#include <optional>
#include <utility>

#include "quadmat/errors.hpp"
#include "quadmat/mat2.hpp"
#include "quadmat/quadint.hpp"

namespace quadmat {

// The commutant of an integer matrix A with both off-diagonal entries
// nonzero is the two-generator ring {x*I + t*B} where B is the reduced form
// [[a, b], [c, 0]], gcd(a, b, c) = 1.  Everything downstream (membership,
// eigenvalues, solution transport) is phrased against that reduced basis.
//
// The discriminant delta = a^2 + 4bc decides the structure: a perfect
// square delta gives a ring with zero divisors (delta = 0: nilpotents),
// otherwise the ring embeds into the quadratic field Q(sqrt(D)) where
// delta = m^2 * D with D square-free.
class CommutantBasis {
 public:
  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& delta() const { return delta_; }

  bool delta_is_square() const { return square_; }
  // the ring embeds in a quadratic field iff delta is not a perfect square
  bool is_domain() const { return !square_; }
  bool has_nilpotents() const { return delta_ == 0; }

  // sqrt(delta) >= 0; only for square delta
  const Int& sqrt_delta() const;
  // delta = multiplier^2 * field, field square-free; only for non-square delta
  const Int& multiplier() const;
  const Int& field() const;

  // the basis matrix [[a, b], [c, 0]]
  Mat2 matrix() const { return {a_, b_, c_, 0}; }

  bool operator==(const CommutantBasis& o) const {
    return a_ == o.a_ && b_ == o.b_ && c_ == o.c_;
  }

 private:
  friend CommutantBasis normalize(const Mat2& m);
  CommutantBasis() = default;

  Int a_, b_, c_, delta_;
  bool square_ = false;
  Int k_;       // sqrt(delta) when square
  Int m_, d_;   // delta = m^2 d otherwise
};

// Reduced commutant basis of m: subtract the lower-right diagonal entry and
// divide by the gcd of what remains.  C(m) = C(basis matrix).  Requires both
// off-diagonal entries nonzero.
CommutantBasis normalize(const Mat2& m);

// Basis with reduced coordinates proportional to (a, b, c).
CommutantBasis make_basis(const Int& a, const Int& b, const Int& c);

// Smallest-footprint basis whose commutant embeds into Q(sqrt(D)):
// (1, 1, (D-1)/4) for D = 1 (mod 4), (2, 1, D-1) otherwise.
CommutantBasis basis_for_field(const Int& d);

// x*I + t*B for a reduced basis B
struct CommutantMember {
  CommutantBasis basis;
  Int x, t;

  Mat2 matrix() const;
};

// Coordinates of m in the commutant of `basis`, if it lies there.
std::optional<CommutantMember> membership(const CommutantBasis& basis,
                                          const Mat2& m);

// Zero divisors exist exactly when delta is a perfect square.
bool has_zero_divisors(const CommutantBasis& basis);

// A pair of nonzero members with product O (delta square only).  For
// delta = 0 the two factors coincide and are nilpotent.
std::optional<std::pair<Mat2, Mat2>> zero_divisor_witness(
    const CommutantBasis& basis);

// Eigenvalues of a member over Q(sqrt(D)), the +sqrt(D) embedding first:
// (2x + t a +- t m sqrt(D))/2.  Requires non-square delta.
std::pair<QuadInt, QuadInt> eigenvalues_of_member(const CommutantMember& mem);

// Integer eigenvalues (x + t(a+k)/2, x + t(a-k)/2) for square delta.
std::pair<Int, Int> integer_eigenvalues_of_member(const CommutantMember& mem);

// Exact eigenvalues of an arbitrary integer matrix: a pair of rational
// integers when the characteristic discriminant is a perfect square, and a
// conjugate pair in Q(sqrt(D)) otherwise.
std::pair<QuadInt, QuadInt> mat2_eigenvalues(const Mat2& m);
bool has_integer_eigenvalues(const Mat2& m);

std::ostream& operator<<(std::ostream& os, const CommutantBasis& basis);

}  // namespace quadmat

#endif
