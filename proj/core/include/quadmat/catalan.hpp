#ifndef QUADMAT_CATALAN_HPP
#define QUADMAT_CATALAN_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "quadmat/commutant.hpp"
#include "quadmat/mat2.hpp"
#include "quadmat/quadint.hpp"

namespace quadmat {

// Structural classes of solutions of X^m - Y^n = I over M_2(Z), m, n >= 3
// (TrivialM2 is the designed m = 2 escape hatch).
enum class CatalanClass {
  // X has irrational eigenvalues, Y = 2I, (m, n) = (4, 3)
  IntegerEigen,
  // X^m scalar: tr X = tr Y = 0, det X = +-3, det Y = -2, (m, n) = (4, 6)
  ScalarPower46,
  // X^m scalar: tr X = 0, tr Y = -2, det X = +-3, det Y = 4, (m, n) = (4, 3)
  ScalarPower43,
  // both spectra irrational; X and Y necessarily commute
  CommutingQuadratic,
  // A^2 = (t^n + 1) I against Y = tI, m = 2
  TrivialM2,
};

// A verified matrix solution of X^m - Y^n = I.  Construction re-verifies
// the identity and that both factors are nonsingular.
class CatalanSolution {
 public:
  CatalanSolution(Mat2 x, Mat2 y, unsigned long m, unsigned long n,
                  CatalanClass tag);

  const Mat2& x() const { return x_; }
  const Mat2& y() const { return y_; }
  unsigned long m() const { return m_; }
  unsigned long n() const { return n_; }
  CatalanClass tag() const { return tag_; }

 private:
  Mat2 x_, y_;
  unsigned long m_, n_;
  CatalanClass tag_;
};

// exactly one of X, Y has rational eigenvalues
bool mixed_eigenvalues(const CatalanSolution& sol);

// All solutions with X of mixed type against Y = 2I, exponents (4, 3):
// X with tr X = 0, det X = +-3, entries bounded by `bound`.
std::vector<CatalanSolution> enumerate_integer_eigen(long bound);

// All solutions of the two scalar-power forms, entries bounded by `bound`:
// (m, n) = (4, 6) and (4, 3) with the trace/determinant conditions of
// CatalanClass.
std::vector<CatalanSolution> enumerate_scalar_power_case(long bound);

// Scalar Catalan pair over a quadratic field
struct EigenCatalanPair {
  QuadInt x, y;
  unsigned long m, n;
};

// The finite list of scalar solutions x^m - y^n = 1 with both exponents
// realized through bounded multiplicative exponents; nonempty only for
// (m, n) = (4, 3) and (4, 6).
std::vector<EigenCatalanPair> exponent_case_lookup(unsigned long m,
                                                   unsigned long n);

// Lift of a scalar solution x^m - y^n = 1 in O_D into C(A) for a basis with
// delta = k^2 D: requires k | t for both coordinates, exponents >= 3, and a
// non-square delta.
CatalanSolution catalan_lift(const CommutantBasis& basis, const QuadInt& x,
                             const QuadInt& y, unsigned long m,
                             unsigned long n);

// A^2 - (tI)^n = I whenever tr A = 0 and det A = -(t^n + 1); t not 0 or -1.
CatalanSolution trivial_m2_family(const Int& t, unsigned long n,
                                  const Mat2& a);

struct CatalanViolation {
  Mat2 x, y;
  unsigned long m, n;
  std::string reason;
};

struct CatalanSearchReport {
  std::vector<CatalanSolution> hits;
  std::vector<CatalanViolation> violations;
};

// Exhaustive scan of X^m - Y^n = I over |entries| <= entry_bound,
// 3 <= m, n <= max_exp, nonsingular factors.  Every hit must land in one of
// the four structural classes; a hit that does not is reported as a
// violation (and there should never be one).  The X range is partitioned
// across `threads` workers (0 = hardware default); output order is
// canonical regardless of thread count.
CatalanSearchReport brute_force_search(long entry_bound,
                                       unsigned long max_exp,
                                       unsigned threads = 0);

// Single-loop reference implementation of the same scan (no power index,
// no threads); used to cross-check brute_force_search on small ranges.
CatalanSearchReport brute_force_search_reference(long entry_bound,
                                                 unsigned long max_exp);

std::string to_string(CatalanClass c);
std::ostream& operator<<(std::ostream& os, CatalanClass c);

}  // namespace quadmat

#endif
