#include "quadmat/fermat.hpp"

#include <map>
#include <ostream>
#include <vector>

#include "quadmat/matpow.hpp"

namespace quadmat {

EquationSpec::EquationSpec(Int u, Int v, Int w, unsigned long i,
                           unsigned long j, unsigned long k)
    : u_(std::move(u)), v_(std::move(v)), w_(std::move(w)), i_(i), j_(j), k_(k) {
  if (u_ == 0 || v_ == 0 || w_ == 0)
    throw degenerate_input_error("equation coefficients must be nonzero");
  if (int_gcd(u_, v_, w_) != 1)
    throw degenerate_input_error("equation coefficients must be coprime");
  if (i_ == 0 || j_ == 0 || k_ == 0)
    throw degenerate_input_error("equation exponents must be positive");
}

bool check_equation(const Mat2& x, const Mat2& y, const Mat2& z,
                    const EquationSpec& spec) {
  Mat2 lhs = spec.u() * mat_pow_closed(x, spec.i()) +
             spec.v() * mat_pow_closed(y, spec.j());
  return lhs == spec.w() * mat_pow_closed(z, spec.k());
}

SolutionTriple::SolutionTriple(Mat2 x, Mat2 y, Mat2 z, EquationSpec spec)
    : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)), spec_(std::move(spec)) {
  if (!check_equation(x_, y_, z_, spec_))
    throw contract_violation_error("solution triple fails its equation");
  if (det(x_) == 0 || det(y_) == 0 || det(z_) == 0)
    throw contract_violation_error("trivial solution: a factor is singular");
}

namespace {

// scalar shadow of a member under the +/- sqrt(D) embedding of C(A)
QuadInt embed(const CommutantMember& mem, bool plus) {
  const CommutantBasis& basis = mem.basis;
  if (basis.delta_is_square()) {
    const Int& k = basis.sqrt_delta();
    Int root = plus ? k : -k;
    return QuadInt::integer(mem.x + mem.t * exact_div(basis.a() + root, 2));
  }
  Int s = 2 * mem.x + mem.t * basis.a();
  Int t = mem.t * basis.multiplier();
  return QuadInt(std::move(s), plus ? t : -t, basis.field());
}

bool check_scalar_equation(const QuadInt& x, const QuadInt& y,
                           const QuadInt& z, const EquationSpec& spec) {
  QuadInt lhs = spec.u() * pow(x, spec.i()) + spec.v() * pow(y, spec.j());
  return lhs == spec.w() * pow(z, spec.k());
}

// x must be rational or live in the basis field
void require_field(const CommutantBasis& basis, const QuadInt& x,
                   const char* which) {
  if (!x.is_rational_integer() && x.field() != basis.field())
    throw field_mismatch_error(std::string(which) +
                               " does not lie in the basis field");
}

}  // namespace

std::array<std::array<QuadInt, 3>, 2> project(const CommutantMember& x,
                                              const CommutantMember& y,
                                              const CommutantMember& z,
                                              const EquationSpec& spec) {
  if (!(x.basis == y.basis && y.basis == z.basis))
    throw field_mismatch_error("members do not share a commutant basis");
  if (!check_equation(x.matrix(), y.matrix(), z.matrix(), spec))
    throw contract_violation_error("input triple fails its equation");
  std::array<std::array<QuadInt, 3>, 2> out{
      std::array<QuadInt, 3>{embed(x, true), embed(y, true), embed(z, true)},
      std::array<QuadInt, 3>{embed(x, false), embed(y, false), embed(z, false)}};
  for (const auto& triple : out)
    if (!check_scalar_equation(triple[0], triple[1], triple[2], spec))
      throw contract_violation_error("projected triple fails the scalar equation");
  return out;
}

SolutionTriple lift_general(const CommutantBasis& basis, const QuadInt& x,
                            const QuadInt& y, const QuadInt& z,
                            const EquationSpec& spec) {
  if (!basis.is_domain())
    throw lift_condition_error("lift requires a non-square discriminant");
  require_field(basis, x, "x");
  require_field(basis, y, "y");
  require_field(basis, z, "z");
  if (x.is_zero() || y.is_zero() || z.is_zero())
    throw contract_violation_error("trivial scalar solution: zero component");
  if (!check_scalar_equation(x, y, z, spec))
    throw contract_violation_error("scalar triple fails its equation");
  const Int& m = basis.multiplier();
  const Int& a = basis.a();
  Mat2 mats[3];
  const QuadInt* in[3] = {&x, &y, &z};
  for (int r = 0; r < 3; ++r) {
    if (!divides(m, in[r]->t()))
      throw lift_condition_error(
          "sqrt coordinate not divisible by the discriminant multiplier");
    Int alpha = exact_div(in[r]->t(), m);
    Int twice_beta = in[r]->s() - alpha * a;
    if (!is_even(twice_beta))
      throw contract_violation_error("lift parity assertion failed");
    mats[r] = CommutantMember{basis, exact_div(twice_beta, 2), alpha}.matrix();
  }
  return SolutionTriple(mats[0], mats[1], mats[2], spec);
}

SolutionTriple lift_uniform(const CommutantBasis& basis, const QuadInt& x,
                            const QuadInt& y, const QuadInt& z,
                            unsigned long n, const Int& u, const Int& v,
                            const Int& w) {
  EquationSpec spec(u, v, w, n, n, n);
  if (!basis.is_domain())
    throw lift_condition_error("lift requires a non-square discriminant");
  require_field(basis, x, "x");
  require_field(basis, y, "y");
  require_field(basis, z, "z");
  if (x.is_zero() || y.is_zero() || z.is_zero())
    throw contract_violation_error("trivial scalar solution: zero component");
  if (!check_scalar_equation(x, y, z, spec))
    throw contract_violation_error("scalar triple fails its equation");
  const Int& m = basis.multiplier();
  const Int& a = basis.a();
  Mat2 mats[3];
  const QuadInt* in[3] = {&x, &y, &z};
  for (int r = 0; r < 3; ++r) {
    // scale by m: the lifted matrix has eigenvalues m x, m conj(x)
    Int twice_alpha = m * in[r]->s() - a * in[r]->t();
    if (!is_even(twice_alpha))
      throw contract_violation_error("lift parity assertion failed");
    mats[r] =
        CommutantMember{basis, exact_div(twice_alpha, 2), in[r]->t()}.matrix();
  }
  return SolutionTriple(mats[0], mats[1], mats[2], spec);
}

SolutionTriple scale_solution(const CommutantMember& b,
                              const SolutionTriple& sol) {
  if (!sol.spec().uniform())
    throw lift_condition_error("scaling requires uniform exponents");
  if (!b.basis.is_domain())
    throw lift_condition_error("scaling requires a non-square discriminant");
  if (b.x == 0 && b.t == 0)
    throw degenerate_input_error("scaling by the zero member");
  Mat2 bm = b.matrix();
  for (const Mat2* part : {&sol.x(), &sol.y(), &sol.z()})
    if (!(bm * *part == *part * bm))
      throw contract_violation_error("triple does not commute with the scaling member");
  return SolutionTriple(bm * sol.x(), bm * sol.y(), bm * sol.z(), sol.spec());
}

SolutionTriple family_chien_meng(const CommutantBasis& basis) {
  if (!basis.is_domain() || basis.field() != 5)
    throw family_condition_error("Chien-Meng family needs discriminant 5 m^2");
  QuadInt x(11, 3, 5);   // (11+3sqrt(5))/2
  QuadInt y(16, 6, 5);   // 8+3sqrt(5)
  QuadInt z(18, 6, 5);   // 9+3sqrt(5)
  return lift_uniform(basis, x, y, z, 3);
}

SolutionTriple family_aigner(const CommutantBasis& basis) {
  if (!basis.is_domain() || basis.field() != -7)
    throw family_condition_error("Aigner family needs discriminant -7 m^2");
  QuadInt x(1, 1, -7);   // (1+sqrt(-7))/2
  return lift_uniform(basis, x, conj(x), QuadInt::integer(1), 4);
}

SolutionTriple family_burnside(const Int& k, const CommutantBasis& basis) {
  if (k == 0 || k == -1)
    throw family_condition_error("Burnside family excludes k = 0 and k = -1");
  Int n = -3 * (1 + 4 * k * k * k);
  auto [t, d] = squarefree_decompose(n);
  if (d == 1)
    throw family_condition_error("Burnside parameter yields a square discriminant");
  if (!basis.is_domain() || basis.field() != d)
    throw family_condition_error(
        "basis field does not match the Burnside discriminant");
  QuadInt x(-6, 2 * t, d);   // -3 + t sqrt(D)
  QuadInt z = QuadInt::integer(6 * k);
  return lift_uniform(basis, x, conj(x), z, 3);
}

CommutantBasis burnside_basis(const Int& k) {
  if (k == 0 || k == -1)
    throw family_condition_error("Burnside family excludes k = 0 and k = -1");
  Int n = -3 * (1 + 4 * k * k * k);
  auto [t, d] = squarefree_decompose(n);
  if (d == 1)
    throw family_condition_error("Burnside parameter yields a square discriminant");
  return basis_for_field(d);
}

SolutionTriple family_kaddoura(const Int& r, const Int& s,
                               const CommutantBasis& basis, unsigned long n) {
  if (r == 0 && s == 0)
    throw family_condition_error("Kaddoura-Mourad family needs (r, s) != (0, 0)");
  if (n % 6 != 1 && n % 6 != 5)
    throw family_condition_error(
        "Kaddoura-Mourad family needs n = +-1 (mod 6)");
  if (!basis.is_domain() || basis.field() != -3)
    throw family_condition_error("Kaddoura-Mourad family needs discriminant -3 m^2");
  QuadInt x(2 * s - r, r, -3);
  QuadInt y(2 * r - s, -s, -3);
  return lift_uniform(basis, x, y, x + y, n);
}

namespace {

FeasibilityVerdict no_solutions(const char* citation) {
  return {FeasibilityVerdict::Status::NoSolutions, citation, std::nullopt};
}

FeasibilityVerdict solvable(const char* citation, SolutionTriple witness) {
  return {FeasibilityVerdict::Status::Solvable, citation, std::move(witness)};
}

// Burnside parameter whose discriminant -3(1+4k^3) has square-free part d,
// if one exists in a small scan window.
std::optional<Int> burnside_parameter_for(const Int& d) {
  for (long mag = 1; mag <= 64; ++mag) {
    for (long k : {mag, -mag - 1}) {  // k = 1, -2, 2, -3, ...
      Int disc = -3 * (1 + 4 * Int(k) * k * k);
      auto [t, core] = squarefree_decompose(disc);
      if (core == d) return Int(k);
    }
  }
  return std::nullopt;
}

}  // namespace

FeasibilityVerdict fermat_feasibility(const CommutantBasis& basis,
                                      unsigned long n) {
  if (n < 3)
    throw degenerate_input_error("feasibility classification needs n >= 3");
  if (basis.delta_is_square())
    return no_solutions("fermat-last-theorem");
  const Int& d = basis.field();
  if (n == 6 || n == 9) return no_solutions("no-quadratic-solutions-degree-6-9");
  if (n == 4) {
    if (d == -7) return solvable("aigner-quartic", family_aigner(basis));
    return no_solutions("quartic-only-in-q-sqrt-minus-7");
  }
  if (n >= 4 && d >= 2 && d <= 23 && d != 5 && d != 17) {
    if (d == 2) return no_solutions("no-solutions-q-sqrt-2");
    return no_solutions("no-solutions-real-quadratic-3-23");
  }
  // positive knowledge: classical families give verified witnesses
  if (n == 3 && d == 5)
    return solvable("chien-meng-cubes", family_chien_meng(basis));
  if (d == -3 && (n % 6 == 1 || n % 6 == 5))
    return solvable("kaddoura-mourad-family", family_kaddoura(1, 0, basis, n));
  if (n == 3) {
    if (auto k = burnside_parameter_for(d))
      return solvable("burnside-cubes", family_burnside(*k, basis));
  }
  return {FeasibilityVerdict::Status::Unknown, "no-applicable-result",
          std::nullopt};
}

std::optional<SolutionTriple> search_members(const CommutantBasis& basis,
                                             const EquationSpec& spec,
                                             long bound) {
  if (bound < 0) throw degenerate_input_error("negative search bound");
  std::vector<Mat2> members;
  members.reserve((2 * bound + 1) * (2 * bound + 1));
  for (long x = -bound; x <= bound; ++x)
    for (long t = -bound; t <= bound; ++t) {
      if (x == 0 && t == 0) continue;
      Mat2 m = CommutantMember{basis, x, t}.matrix();
      if (det(m) == 0) continue;  // nontrivial solutions only
      members.push_back(std::move(m));
    }
  // index w Z^k by value; keep the first member per value for determinism
  std::map<Mat2, size_t> rhs;
  for (size_t idx = 0; idx < members.size(); ++idx) {
    Mat2 value = spec.w() * mat_pow_closed(members[idx], spec.k());
    rhs.emplace(std::move(value), idx);
  }
  std::vector<Mat2> xpow(members.size()), ypow(members.size());
  for (size_t idx = 0; idx < members.size(); ++idx) {
    xpow[idx] = spec.u() * mat_pow_closed(members[idx], spec.i());
    ypow[idx] = spec.v() * mat_pow_closed(members[idx], spec.j());
  }
  for (size_t ix = 0; ix < members.size(); ++ix)
    for (size_t iy = 0; iy < members.size(); ++iy) {
      auto it = rhs.find(xpow[ix] + ypow[iy]);
      if (it != rhs.end())
        return SolutionTriple(members[ix], members[iy], members[it->second],
                              spec);
    }
  return std::nullopt;
}

std::string to_string(FeasibilityVerdict::Status s) {
  switch (s) {
    case FeasibilityVerdict::Status::NoSolutions:
      return "no-solutions";
    case FeasibilityVerdict::Status::Solvable:
      return "solvable";
    default:
      return "unknown";
  }
}

std::ostream& operator<<(std::ostream& os, FeasibilityVerdict::Status s) {
  return os << to_string(s);
}

}  // namespace quadmat
