#include "quadmat/catalan.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <thread>
#include <utility>

#include "quadmat/fermat.hpp"
#include "quadmat/matpow.hpp"

namespace quadmat {

CatalanSolution::CatalanSolution(Mat2 x, Mat2 y, unsigned long m,
                                 unsigned long n, CatalanClass tag)
    : x_(std::move(x)), y_(std::move(y)), m_(m), n_(n), tag_(tag) {
  if (tag_ == CatalanClass::TrivialM2) {
    if (m_ != 2)
      throw degenerate_input_error("trivial family carries exponent m = 2");
  } else if (m_ < 3) {
    throw degenerate_input_error("Catalan solutions need m >= 3");
  }
  if (n_ < 3) throw degenerate_input_error("Catalan solutions need n >= 3");
  if (det(x_) == 0 || det(y_) == 0)
    throw contract_violation_error("singular factor in a Catalan solution");
  Mat2 lhs = mat_pow_closed(x_, m_) - mat_pow_closed(y_, n_);
  if (!(lhs == Mat2::identity()))
    throw contract_violation_error("Catalan identity fails to verify");
}

bool mixed_eigenvalues(const CatalanSolution& sol) {
  return has_integer_eigenvalues(sol.x()) != has_integer_eigenvalues(sol.y());
}

std::vector<CatalanSolution> enumerate_integer_eigen(long bound) {
  if (bound < 1) throw degenerate_input_error("entry bound must be >= 1");
  std::vector<CatalanSolution> out;
  const Mat2 two_i = Mat2::scalar(2);
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c) {
        Mat2 x{a, b, c, -a};
        Int dt = det(x);
        if (dt != 3 && dt != -3) continue;
        out.emplace_back(x, two_i, 4, 3, CatalanClass::IntegerEigen);
      }
  return out;
}

std::vector<CatalanSolution> enumerate_scalar_power_case(long bound) {
  if (bound < 1) throw degenerate_input_error("entry bound must be >= 1");
  std::vector<Mat2> xs;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c) {
        Mat2 x{a, b, c, -a};
        Int dt = det(x);
        if (dt == 3 || dt == -3) xs.push_back(std::move(x));
      }
  std::vector<CatalanSolution> out;
  // (4,6): tr Y = 0, det Y = -2, so Y^6 = 8I against X^4 = 9I
  for (const Mat2& x : xs)
    for (long p = -bound; p <= bound; ++p)
      for (long q = -bound; q <= bound; ++q)
        for (long r = -bound; r <= bound; ++r) {
          Mat2 y{p, q, r, -p};
          if (det(y) != -2) continue;
          out.emplace_back(x, y, 4, 6, CatalanClass::ScalarPower46);
        }
  // (4,3): tr Y = -2, det Y = 4, so Y^3 = 8I by Cayley-Hamilton
  for (const Mat2& x : xs)
    for (long p = -bound; p <= bound; ++p) {
      long dd = -2 - p;
      if (dd < -bound || dd > bound) continue;
      for (long q = -bound; q <= bound; ++q)
        for (long r = -bound; r <= bound; ++r) {
          Mat2 y{p, q, r, dd};
          if (det(y) != 4) continue;
          out.emplace_back(x, y, 4, 3, CatalanClass::ScalarPower43);
        }
    }
  return out;
}

std::vector<EigenCatalanPair> exponent_case_lookup(unsigned long m,
                                                   unsigned long n) {
  if (m < 3 || n < 3)
    throw degenerate_input_error("Catalan exponents must be >= 3");
  std::vector<EigenCatalanPair> out;
  const QuadInt roots3[4] = {QuadInt::root(3), -QuadInt::root(3),
                             QuadInt::root(-3), -QuadInt::root(-3)};
  if (m == 4 && n == 3) {
    QuadInt two = QuadInt::integer(2);
    for (const QuadInt& x : roots3) out.push_back({x, two, 4, 3});
    QuadInt two_omega(-2, 2, -3);  // -1 + sqrt(-3)
    for (const QuadInt& y : {two_omega, conj(two_omega)})
      for (const QuadInt& x : roots3) out.push_back({x, y, 4, 3});
  } else if (m == 4 && n == 6) {
    for (const QuadInt& y : {QuadInt::root(2), -QuadInt::root(2)})
      for (const QuadInt& x : roots3) out.push_back({x, y, 4, 6});
  }
  return out;
}

CatalanSolution catalan_lift(const CommutantBasis& basis, const QuadInt& x,
                             const QuadInt& y, unsigned long m,
                             unsigned long n) {
  if (m < 3 || n < 3)
    throw degenerate_input_error("Catalan lift needs m, n >= 3");
  EquationSpec spec(1, -1, 1, m, n, 1);
  SolutionTriple triple =
      lift_general(basis, x, y, QuadInt::integer(1), spec);
  return CatalanSolution(triple.x(), triple.y(), m, n,
                         CatalanClass::CommutingQuadratic);
}

CatalanSolution trivial_m2_family(const Int& t, unsigned long n,
                                  const Mat2& a) {
  if (t == 0 || t == -1)
    throw family_condition_error("trivial family excludes t = 0 and t = -1");
  if (n < 3) throw degenerate_input_error("trivial family needs n >= 3");
  if (trace(a) != 0 || det(a) != -(int_pow(t, n) + 1))
    throw family_condition_error(
        "matrix must have trace 0 and determinant -(t^n + 1)");
  return CatalanSolution(a, Mat2::scalar(t), 2, n, CatalanClass::TrivialM2);
}

namespace {

std::vector<Mat2> nonsingular_matrices(long bound) {
  std::vector<Mat2> out;
  for (long a = -bound; a <= bound; ++a)
    for (long b = -bound; b <= bound; ++b)
      for (long c = -bound; c <= bound; ++c)
        for (long d = -bound; d <= bound; ++d) {
          Mat2 m{a, b, c, d};
          if (det(m) != 0) out.push_back(std::move(m));
        }
  return out;
}

// Structural class of a verified hit, or empty with a reason.  xm is the
// precomputed X^m.
std::optional<CatalanClass> classify_hit(const Mat2& x, const Mat2& y,
                                         unsigned long m, unsigned long n,
                                         const Mat2& xm, std::string& reason) {
  // eigenvalue projection: both branches must satisfy x^m - y^n = 1
  auto [x1, x2] = mat2_eigenvalues(x);
  auto [y1, y2] = mat2_eigenvalues(y);
  QuadInt one = QuadInt::integer(1);
  QuadInt lhs1 = pow(x1, m) - one, lhs2 = pow(x2, m) - one;
  QuadInt rhs1 = pow(y1, n), rhs2 = pow(y2, n);
  bool paired = (lhs1 == rhs1 && lhs2 == rhs2) || (lhs1 == rhs2 && lhs2 == rhs1);
  if (!paired) {
    reason = "eigenvalue projection identity fails";
    return std::nullopt;
  }
  if (has_integer_eigenvalues(x) || has_integer_eigenvalues(y)) {
    if (m == 4 && n == 3 && y == Mat2::scalar(2) && trace(x) == 0 &&
        abs(det(x)) == 3)
      return CatalanClass::IntegerEigen;
    reason = "integer-eigenvalue hit outside the classified family";
    return std::nullopt;
  }
  if (xm.is_scalar()) {
    if (m == 4 && n == 6 && trace(x) == 0 && trace(y) == 0 &&
        abs(det(x)) == 3 && det(y) == -2)
      return CatalanClass::ScalarPower46;
    if (m == 4 && n == 3 && trace(x) == 0 && trace(y) == -2 &&
        abs(det(x)) == 3 && det(y) == 4)
      return CatalanClass::ScalarPower43;
    reason = "scalar-power hit outside the classified forms";
    return std::nullopt;
  }
  if (x * y == y * x) return CatalanClass::CommutingQuadratic;
  reason = "non-commuting quadratic hit with non-scalar X^m";
  return std::nullopt;
}

void sort_report(CatalanSearchReport& report) {
  auto sol_key = [](const CatalanSolution& p, const CatalanSolution& q) {
    if (p.m() != q.m()) return p.m() < q.m();
    if (p.n() != q.n()) return p.n() < q.n();
    if (int r = compare(p.x(), q.x())) return r < 0;
    return compare(p.y(), q.y()) < 0;
  };
  auto vio_key = [](const CatalanViolation& p, const CatalanViolation& q) {
    if (p.m != q.m) return p.m < q.m;
    if (p.n != q.n) return p.n < q.n;
    if (int r = compare(p.x, q.x)) return r < 0;
    return compare(p.y, q.y) < 0;
  };
  std::stable_sort(report.hits.begin(), report.hits.end(), sol_key);
  std::stable_sort(report.violations.begin(), report.violations.end(), vio_key);
}

void check_search_bounds(long entry_bound, unsigned long max_exp) {
  if (entry_bound < 1)
    throw degenerate_input_error("entry bound must be >= 1");
  if (max_exp < 3)
    throw degenerate_input_error("exponent ceiling must be >= 3");
}

}  // namespace

CatalanSearchReport brute_force_search(long entry_bound, unsigned long max_exp,
                                       unsigned threads) {
  check_search_bounds(entry_bound, max_exp);
  std::vector<Mat2> mats = nonsingular_matrices(entry_bound);

  // index every admissible Y^n by value
  std::map<Mat2, std::vector<std::pair<size_t, unsigned long>>> rhs;
  for (size_t iy = 0; iy < mats.size(); ++iy) {
    Mat2 p = mats[iy] * mats[iy];
    for (unsigned long n = 3; n <= max_exp; ++n) {
      p = p * mats[iy];
      rhs[p].emplace_back(iy, n);
    }
  }

  unsigned hw = std::thread::hardware_concurrency();
  unsigned nthreads = threads != 0 ? threads : std::min(hw != 0 ? hw : 1u, 8u);
  if (nthreads > mats.size()) nthreads = static_cast<unsigned>(mats.size());
  if (nthreads == 0) nthreads = 1;

  std::vector<CatalanSearchReport> partial(nthreads);
  auto worker = [&](unsigned slot, size_t lo, size_t hi) {
    CatalanSearchReport& local = partial[slot];
    for (size_t ix = lo; ix < hi; ++ix) {
      Mat2 p = mats[ix] * mats[ix];
      for (unsigned long m = 3; m <= max_exp; ++m) {
        p = p * mats[ix];
        auto it = rhs.find(p - Mat2::identity());
        if (it == rhs.end()) continue;
        for (const auto& [iy, n] : it->second) {
          std::string reason;
          if (auto tag = classify_hit(mats[ix], mats[iy], m, n, p, reason))
            local.hits.emplace_back(mats[ix], mats[iy], m, n, *tag);
          else
            local.violations.push_back({mats[ix], mats[iy], m, n, reason});
        }
      }
    }
  };

  if (nthreads == 1) {
    worker(0, 0, mats.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (mats.size() + nthreads - 1) / nthreads;
    for (unsigned slot = 0; slot < nthreads; ++slot) {
      size_t lo = slot * chunk;
      size_t hi = std::min(mats.size(), lo + chunk);
      pool.emplace_back(worker, slot, lo, hi);
    }
    for (std::thread& th : pool) th.join();
  }

  CatalanSearchReport report;
  for (CatalanSearchReport& part : partial) {
    std::move(part.hits.begin(), part.hits.end(),
              std::back_inserter(report.hits));
    std::move(part.violations.begin(), part.violations.end(),
              std::back_inserter(report.violations));
  }
  sort_report(report);
  return report;
}

CatalanSearchReport brute_force_search_reference(long entry_bound,
                                                 unsigned long max_exp) {
  check_search_bounds(entry_bound, max_exp);
  std::vector<Mat2> mats = nonsingular_matrices(entry_bound);
  // naive powers M^3 .. M^max_exp per matrix
  std::vector<std::vector<Mat2>> powers(mats.size());
  for (size_t i = 0; i < mats.size(); ++i) {
    powers[i].reserve(max_exp - 2);
    for (unsigned long e = 3; e <= max_exp; ++e)
      powers[i].push_back(mat_pow_naive(mats[i], e));
  }
  CatalanSearchReport report;
  for (size_t ix = 0; ix < mats.size(); ++ix)
    for (size_t iy = 0; iy < mats.size(); ++iy)
      for (unsigned long m = 3; m <= max_exp; ++m)
        for (unsigned long n = 3; n <= max_exp; ++n) {
          const Mat2& xm = powers[ix][m - 3];
          if (!(xm - powers[iy][n - 3] == Mat2::identity())) continue;
          std::string reason;
          if (auto tag = classify_hit(mats[ix], mats[iy], m, n, xm, reason))
            report.hits.emplace_back(mats[ix], mats[iy], m, n, *tag);
          else
            report.violations.push_back({mats[ix], mats[iy], m, n, reason});
        }
  sort_report(report);
  return report;
}

std::string to_string(CatalanClass c) {
  switch (c) {
    case CatalanClass::IntegerEigen:
      return "integer-eigen";
    case CatalanClass::ScalarPower46:
      return "scalar-power-4-6";
    case CatalanClass::ScalarPower43:
      return "scalar-power-4-3";
    case CatalanClass::CommutingQuadratic:
      return "commuting-quadratic";
    default:
      return "trivial-m2";
  }
}

std::ostream& operator<<(std::ostream& os, CatalanClass c) {
  return os << to_string(c);
}

}  // namespace quadmat
