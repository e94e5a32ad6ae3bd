#include "quadmat/commutant.hpp"

#include <ostream>

namespace quadmat {

const Int& CommutantBasis::sqrt_delta() const {
  if (!square_)
    throw degenerate_input_error("sqrt_delta: discriminant is not a square");
  return k_;
}

const Int& CommutantBasis::multiplier() const {
  if (square_)
    throw degenerate_input_error("multiplier: discriminant is a square");
  return m_;
}

const Int& CommutantBasis::field() const {
  if (square_)
    throw degenerate_input_error("field: discriminant is a square");
  return d_;
}

CommutantBasis normalize(const Mat2& m) {
  if (m.b == 0 || m.c == 0)
    throw unsupported_matrix_error(
        "commutant basis needs both off-diagonal entries nonzero");
  Int g = int_gcd(m.a - m.d, m.b, m.c);
  CommutantBasis basis;
  basis.a_ = exact_div(m.a - m.d, g);
  basis.b_ = exact_div(m.b, g);
  basis.c_ = exact_div(m.c, g);
  basis.delta_ = basis.a_ * basis.a_ + 4 * basis.b_ * basis.c_;
  basis.square_ = is_perfect_square(basis.delta_);
  if (basis.square_) {
    basis.k_ = int_sqrt(basis.delta_);
  } else {
    auto [mult, d] = squarefree_decompose(basis.delta_);
    basis.m_ = mult;
    basis.d_ = d;
  }
  return basis;
}

CommutantBasis make_basis(const Int& a, const Int& b, const Int& c) {
  return normalize(Mat2{a, b, c, 0});
}

CommutantBasis basis_for_field(const Int& d) {
  if (d == 1 || !is_squarefree(d))
    throw degenerate_input_error("field parameter must be square-free, not 1");
  if (mod4(d) == 1) return make_basis(1, 1, exact_div(d - 1, 4));
  return make_basis(2, 1, d - 1);
}

Mat2 CommutantMember::matrix() const {
  return {x + t * basis.a(), t * basis.b(), t * basis.c(), x};
}

std::optional<CommutantMember> membership(const CommutantBasis& basis,
                                          const Mat2& m) {
  // x I + t B has lower-right entry x and upper-right entry t b
  if (!divides(basis.b(), m.b)) return std::nullopt;
  Int t = exact_div(m.b, basis.b());
  Int x = m.d;
  if (m.c != t * basis.c() || m.a != x + t * basis.a()) return std::nullopt;
  return CommutantMember{basis, std::move(x), std::move(t)};
}

bool has_zero_divisors(const CommutantBasis& basis) {
  return basis.delta_is_square();
}

std::optional<std::pair<Mat2, Mat2>> zero_divisor_witness(
    const CommutantBasis& basis) {
  if (!basis.delta_is_square()) return std::nullopt;
  // with delta = k^2, the member x I + B is singular for x = (-a +- k)/2,
  // and the two singular members multiply to O
  const Int& k = basis.sqrt_delta();
  Int x1 = exact_div(-basis.a() + k, 2);
  Int x2 = exact_div(-basis.a() - k, 2);
  Mat2 b1 = CommutantMember{basis, x1, 1}.matrix();
  Mat2 b2 = CommutantMember{basis, x2, 1}.matrix();
  return std::make_pair(std::move(b1), std::move(b2));
}

std::pair<QuadInt, QuadInt> eigenvalues_of_member(const CommutantMember& mem) {
  const CommutantBasis& basis = mem.basis;
  const Int& m = basis.multiplier();  // throws when delta is a square
  const Int& d = basis.field();
  Int s = 2 * mem.x + mem.t * basis.a();
  Int t = abs(mem.t) * m;  // nonnegative sqrt(D) coefficient first
  return {QuadInt(s, t, d), QuadInt(s, -t, d)};
}

std::pair<Int, Int> integer_eigenvalues_of_member(const CommutantMember& mem) {
  const CommutantBasis& basis = mem.basis;
  if (!basis.delta_is_square())
    throw degenerate_input_error(
        "integer eigenvalues need a square discriminant");
  const Int& k = basis.sqrt_delta();
  // (a +- k) is even because a^2 = delta = k^2 (mod 2)
  Int lo = mem.x + mem.t * exact_div(basis.a() - k, 2);
  Int hi = mem.x + mem.t * exact_div(basis.a() + k, 2);
  return {std::move(hi), std::move(lo)};
}

std::pair<QuadInt, QuadInt> mat2_eigenvalues(const Mat2& m) {
  Int tr = trace(m);
  Int disc = tr * tr - 4 * det(m);
  if (is_perfect_square(disc)) {
    Int k = int_sqrt(disc);
    // tr and k share parity, so both eigenvalues are rational integers
    return {QuadInt(tr + k, 0, 1), QuadInt(tr - k, 0, 1)};
  }
  auto [f, d] = squarefree_decompose(disc);
  return {QuadInt(tr, f, d), QuadInt(tr, -f, d)};
}

bool has_integer_eigenvalues(const Mat2& m) {
  Int tr = trace(m);
  return is_perfect_square(tr * tr - 4 * det(m));
}

std::ostream& operator<<(std::ostream& os, const CommutantBasis& basis) {
  return os << "(" << basis.a() << "," << basis.b() << "," << basis.c() << ")";
}

}  // namespace quadmat
