#ifndef QUADMAT_FERMAT_HPP
#define QUADMAT_FERMAT_HPP

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

#include "quadmat/commutant.hpp"
#include "quadmat/mat2.hpp"
#include "quadmat/quadint.hpp"

namespace quadmat {

// The generalized Fermat equation  u X^i + v Y^j = w Z^k  with nonzero
// coprime integer coefficients and positive exponents.
class EquationSpec {
 public:
  EquationSpec(Int u, Int v, Int w, unsigned long i, unsigned long j,
               unsigned long k);

  // X^n + Y^n = Z^n
  static EquationSpec fermat(unsigned long n) {
    return EquationSpec(1, 1, 1, n, n, n);
  }
  // X^m - Y^n = Z (Catalan form with k = 1)
  static EquationSpec catalan(unsigned long m, unsigned long n) {
    return EquationSpec(1, -1, 1, m, n, 1);
  }

  const Int& u() const { return u_; }
  const Int& v() const { return v_; }
  const Int& w() const { return w_; }
  unsigned long i() const { return i_; }
  unsigned long j() const { return j_; }
  unsigned long k() const { return k_; }

  bool uniform() const { return i_ == j_ && j_ == k_; }

  bool operator==(const EquationSpec& o) const = default;

 private:
  Int u_, v_, w_;
  unsigned long i_, j_, k_;
};

// Does u X^i + v Y^j = w Z^k hold exactly?
bool check_equation(const Mat2& x, const Mat2& y, const Mat2& z,
                    const EquationSpec& spec);

// A matrix triple satisfying its equation.  Construction re-verifies the
// identity and rejects trivial triples (a singular factor); every object
// of this type is therefore a checked witness.
class SolutionTriple {
 public:
  SolutionTriple(Mat2 x, Mat2 y, Mat2 z, EquationSpec spec);

  const Mat2& x() const { return x_; }
  const Mat2& y() const { return y_; }
  const Mat2& z() const { return z_; }
  const EquationSpec& spec() const { return spec_; }

  // invariants re-checked at construction
  bool verified() const { return true; }
  // det(X) det(Y) det(Z) != 0, required at construction
  bool nontrivial() const { return true; }

 private:
  Mat2 x_, y_, z_;
  EquationSpec spec_;
};

// Scalar shadow of a solution triple in C(A): applying the two embeddings
// C(A) -> Q(sqrt(D)) entrywise yields two eigenvalue triples, each solving
// the same equation over the quadratic field (over Q itself when delta is
// square).  The +sqrt(D) embedding comes first.
std::array<std::array<QuadInt, 3>, 2> project(const CommutantMember& x,
                                              const CommutantMember& y,
                                              const CommutantMember& z,
                                              const EquationSpec& spec);

// Lift of a scalar solution (x, y, z) in O_D back into C(A), basis
// (a, b, c) with delta = m^2 D: an element with coordinates (s, t) maps to
// (t/m) B + ((s - t a / m)/2) I, so each t must be divisible by m.
SolutionTriple lift_general(const CommutantBasis& basis, const QuadInt& x,
                            const QuadInt& y, const QuadInt& z,
                            const EquationSpec& spec);

// Uniform-exponent lift without any divisibility condition: scales the
// scalar solution by m, sending (s, t) to t B + ((m s - a t)/2) I.  Valid
// because x -> m x preserves homogeneous equations u X^n + v Y^n = w Z^n.
SolutionTriple lift_uniform(const CommutantBasis& basis, const QuadInt& x,
                            const QuadInt& y, const QuadInt& z,
                            unsigned long n, const Int& u = 1,
                            const Int& v = 1, const Int& w = 1);

// New solution (BX, BY, BZ) from an invertible member B commuting with a
// uniform-exponent triple.
SolutionTriple scale_solution(const CommutantMember& b,
                              const SolutionTriple& sol);

// --- classical scalar identities, lifted ------------------------------

// (11+3√5)/2, 8+3√5, 9+3√5: cubes over Q(sqrt(5)); requires field 5.
SolutionTriple family_chien_meng(const CommutantBasis& basis);

// ((1+√-7)/2)^4 + ((1-√-7)/2)^4 = 1; requires field -7.
SolutionTriple family_aigner(const CommutantBasis& basis);

// (-3+t√D)^3 + (-3-t√D)^3 = (6k)^3 where t^2 D = -3(1+4k^3), k nonzero;
// requires the basis field to match the square-free part of -3(1+4k^3).
SolutionTriple family_burnside(const Int& k, const CommutantBasis& basis);
// A minimal-footprint basis compatible with family_burnside(k).
CommutantBasis burnside_basis(const Int& k);

// x^n + y^n = z^n over Q(sqrt(-3)) for n = +-1 (mod 6), built from
// x = ((2s-r) + r√-3)/2, y = ((2r-s) - s√-3)/2, z = x + y, (r, s) != (0, 0);
// requires field -3.
SolutionTriple family_kaddoura(const Int& r, const Int& s,
                               const CommutantBasis& basis, unsigned long n);

// --- solvability of X^n + Y^n = Z^n in C(A) ---------------------------

struct FeasibilityVerdict {
  enum class Status { NoSolutions, Solvable, Unknown };

  Status status;
  // which classical result decided it, e.g. "fermat-last-theorem"
  std::string citation;
  // machine-verified example for Solvable verdicts
  std::optional<SolutionTriple> witness;
};

// Decision table for nontrivial solutions of X^n + Y^n = Z^n, n >= 3, in
// the commutant.  NoSolutions verdicts cite the classical theorem; Solvable
// verdicts carry a verified witness; everything else is Unknown.
FeasibilityVerdict fermat_feasibility(const CommutantBasis& basis,
                                      unsigned long n);

// Exhaustive search over members with |x|, |t| <= bound for a nontrivial
// solution of the given equation; deterministic order, first hit returned.
std::optional<SolutionTriple> search_members(const CommutantBasis& basis,
                                             const EquationSpec& spec,
                                             long bound);

std::string to_string(FeasibilityVerdict::Status s);
std::ostream& operator<<(std::ostream& os, FeasibilityVerdict::Status s);

}  // namespace quadmat

#endif
