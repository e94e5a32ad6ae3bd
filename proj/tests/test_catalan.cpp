#include "doctest.h"
#include "quadmat/catalan.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

using namespace quadmat;

namespace {

bool same_solution(const CatalanSolution& p, const CatalanSolution& q) {
  return p.x() == q.x() && p.y() == q.y() && p.m() == q.m() && p.n() == q.n() &&
         p.tag() == q.tag();
}

bool same_report(const CatalanSearchReport& p, const CatalanSearchReport& q) {
  if (p.hits.size() != q.hits.size()) return false;
  if (p.violations.size() != q.violations.size()) return false;
  for (size_t i = 0; i < p.hits.size(); ++i)
    if (!same_solution(p.hits[i], q.hits[i])) return false;
  return true;
}

std::set<Mat2> mixed_x_set(const CatalanSearchReport& report) {
  std::set<Mat2> out;
  for (const CatalanSolution& hit : report.hits)
    if (hit.m() == 4 && hit.n() == 3 && hit.y() == Mat2::scalar(2))
      out.insert(hit.x());
  return out;
}

}  // namespace

TEST_SUITE("catalan") {

TEST_CASE("solutions re-verify at construction") {
  Mat2 x{0, -3, 1, 0};  // tr 0, det 3, so X^4 = 9I
  CatalanSolution sol(x, Mat2::scalar(2), 4, 3, CatalanClass::IntegerEigen);
  CHECK(sol.m() == 4);
  CHECK(sol.tag() == CatalanClass::IntegerEigen);
  CHECK(mixed_eigenvalues(sol));

  CHECK_THROWS_AS(CatalanSolution(x, Mat2::scalar(3), 4, 3,
                                  CatalanClass::IntegerEigen),
                  contract_violation_error);
  CHECK_THROWS_AS(CatalanSolution(x, Mat2::scalar(2), 2, 3,
                                  CatalanClass::IntegerEigen),
                  degenerate_input_error);
  CHECK_THROWS_AS(CatalanSolution(x, Mat2::scalar(2), 4, 2,
                                  CatalanClass::IntegerEigen),
                  degenerate_input_error);
  CHECK_THROWS_AS(CatalanSolution(x, Mat2::scalar(2), 4, 3,
                                  CatalanClass::TrivialM2),
                  degenerate_input_error);
}

TEST_CASE("mixed-type enumeration matches the exhaustive search") {
  std::vector<CatalanSolution> family = enumerate_integer_eigen(2);
  CHECK(!family.empty());
  std::set<Mat2> enumerated;
  for (const CatalanSolution& sol : family) {
    CHECK(sol.tag() == CatalanClass::IntegerEigen);
    CHECK(sol.y() == Mat2::scalar(2));
    CHECK(trace(sol.x()) == 0);
    CHECK(abs(det(sol.x())) == 3);
    CHECK(mixed_eigenvalues(sol));
    CHECK(enumerated.insert(sol.x()).second);  // no duplicates
  }
  CHECK(enumerated == mixed_x_set(brute_force_search(2, 4)));
  CHECK_THROWS_AS(enumerate_integer_eigen(0), degenerate_input_error);
}

TEST_CASE("scalar-power enumeration matches the exhaustive search") {
  std::vector<CatalanSolution> family = enumerate_scalar_power_case(2);
  CHECK(!family.empty());
  std::set<std::pair<Mat2, Mat2>> from46, from43;
  for (const CatalanSolution& sol : family) {
    CHECK(!mixed_eigenvalues(sol));
    if (sol.tag() == CatalanClass::ScalarPower46) {
      CHECK(sol.m() == 4);
      CHECK(sol.n() == 6);
      CHECK(trace(sol.y()) == 0);
      CHECK(det(sol.y()) == -2);
      from46.insert({sol.x(), sol.y()});
    } else {
      CHECK(sol.tag() == CatalanClass::ScalarPower43);
      CHECK(sol.m() == 4);
      CHECK(sol.n() == 3);
      CHECK(trace(sol.y()) == -2);
      CHECK(det(sol.y()) == 4);
      from43.insert({sol.x(), sol.y()});
    }
  }
  std::set<std::pair<Mat2, Mat2>> search46, search43;
  for (const CatalanSolution& hit : brute_force_search(2, 6).hits) {
    if (hit.tag() == CatalanClass::ScalarPower46)
      search46.insert({hit.x(), hit.y()});
    if (hit.tag() == CatalanClass::ScalarPower43)
      search43.insert({hit.x(), hit.y()});
  }
  CHECK(from46 == search46);
  CHECK(from43 == search43);
}

TEST_CASE("scalar pairs from bounded exponents") {
  std::vector<EigenCatalanPair> case43 = exponent_case_lookup(4, 3);
  std::vector<EigenCatalanPair> case46 = exponent_case_lookup(4, 6);
  CHECK(case43.size() == 12);
  CHECK(case46.size() == 8);
  CHECK(exponent_case_lookup(5, 3).empty());
  CHECK(exponent_case_lookup(3, 4).empty());
  CHECK(exponent_case_lookup(6, 6).empty());
  for (const auto& list : {case43, case46})
    for (const EigenCatalanPair& pair : list) {
      std::string xs = to_string(pair.x), ys = to_string(pair.y);
      CAPTURE(xs);
      CAPTURE(ys);
      CHECK(pow(pair.x, pair.m) == pow(pair.y, pair.n) + QuadInt::integer(1));
      // both coordinates have bounded multiplicative exponent
      CHECK(exponent(pair.x).is_finite());
      CHECK((pair.y.is_rational_integer() || exponent(pair.y).is_finite()));
    }
  CHECK_THROWS_AS(exponent_case_lookup(2, 3), degenerate_input_error);
}

TEST_CASE("lift of the periodic scalar pair") {
  CommutantBasis basis = make_basis(1, 1, -1);
  QuadInt x(1, -1, -3), y(-1, 1, -3);
  CatalanSolution sol = catalan_lift(basis, x, y, 7, 5);
  CHECK(sol.x() == Mat2{0, -1, 1, 1});
  CHECK(sol.y() == Mat2{0, 1, -1, -1});
  CHECK(sol.tag() == CatalanClass::CommutingQuadratic);
  CHECK(sol.x() * sol.y() == sol.y() * sol.x());
  CHECK(!mixed_eigenvalues(sol));

  CatalanSolution tall = catalan_lift(basis, x, y, 13, 11);
  CHECK(tall.x() == Mat2{0, -1, 1, 1});
  CHECK(tall.y() == Mat2{0, 1, -1, -1});

  CHECK_THROWS_AS(catalan_lift(basis, x, y, 2, 5), degenerate_input_error);
  CHECK_THROWS_AS(catalan_lift(basis, x, y, 7, 2), degenerate_input_error);
  // a pair that is not a scalar solution for these exponents
  CHECK_THROWS_AS(catalan_lift(basis, x, y, 7, 7), contract_violation_error);
  CHECK_THROWS_AS(catalan_lift(make_basis(3, 1, -2), x, y, 7, 5),
                  lift_condition_error);
}

TEST_CASE("trace-zero escape family at m = 2") {
  CatalanSolution sol = trivial_m2_family(2, 3, Mat2{0, 9, 1, 0});
  CHECK(sol.m() == 2);
  CHECK(sol.n() == 3);
  CHECK(sol.y() == Mat2::scalar(2));
  CHECK(sol.tag() == CatalanClass::TrivialM2);
  CHECK_NOTHROW(trivial_m2_family(-2, 3, Mat2{0, -7, 1, 0}));
  CHECK_NOTHROW(trivial_m2_family(3, 4, Mat2{0, 82, 1, 0}));

  CHECK_THROWS_AS(trivial_m2_family(0, 3, Mat2{0, 1, 1, 0}),
                  family_condition_error);
  CHECK_THROWS_AS(trivial_m2_family(-1, 3, Mat2{0, 0, 1, 0}),
                  family_condition_error);
  CHECK_THROWS_AS(trivial_m2_family(2, 2, Mat2{0, 9, 1, 0}),
                  degenerate_input_error);
  CHECK_THROWS_AS(trivial_m2_family(2, 3, Mat2{1, 9, 1, 0}),
                  family_condition_error);
  CHECK_THROWS_AS(trivial_m2_family(2, 3, Mat2{0, 5, 1, 0}),
                  family_condition_error);
}

TEST_CASE("indexed search equals the single-loop reference") {
  CatalanSearchReport fast = brute_force_search(2, 4);
  CatalanSearchReport slow = brute_force_search_reference(2, 4);
  CHECK(fast.violations.empty());
  CHECK(slow.violations.empty());
  CHECK(same_report(fast, slow));
  CHECK(!fast.hits.empty());
}

TEST_CASE("search output is independent of the thread count") {
  CatalanSearchReport one = brute_force_search(2, 4, 1);
  for (unsigned threads : {2u, 3u, 8u}) {
    CAPTURE(threads);
    CHECK(same_report(one, brute_force_search(2, 4, threads)));
  }
}

TEST_CASE("search hits satisfy their advertised class invariants") {
  CatalanSearchReport report = brute_force_search(2, 5);
  CHECK(report.violations.empty());
  for (const CatalanSolution& hit : report.hits) {
    switch (hit.tag()) {
      case CatalanClass::IntegerEigen:
        CHECK(hit.m() == 4);
        CHECK(hit.n() == 3);
        CHECK(hit.y() == Mat2::scalar(2));
        break;
      case CatalanClass::ScalarPower46:
        CHECK(hit.m() == 4);
        CHECK(hit.n() == 6);
        break;
      case CatalanClass::ScalarPower43:
        CHECK(hit.m() == 4);
        CHECK(hit.n() == 3);
        CHECK(trace(hit.y()) == -2);
        break;
      case CatalanClass::CommutingQuadratic:
        CHECK(hit.x() * hit.y() == hit.y() * hit.x());
        break;
      default:
        FAIL("trivial-m2 cannot appear in an m >= 3 search");
    }
    CHECK(mixed_eigenvalues(hit) == (hit.tag() == CatalanClass::IntegerEigen));
  }
}

TEST_CASE("search rejects degenerate ranges") {
  CHECK_THROWS_AS(brute_force_search(0, 4), degenerate_input_error);
  CHECK_THROWS_AS(brute_force_search(2, 2), degenerate_input_error);
  CHECK_THROWS_AS(brute_force_search_reference(0, 4), degenerate_input_error);
}

TEST_CASE("class rendering") {
  CHECK(to_string(CatalanClass::IntegerEigen) == "integer-eigen");
  CHECK(to_string(CatalanClass::ScalarPower46) == "scalar-power-4-6");
  CHECK(to_string(CatalanClass::ScalarPower43) == "scalar-power-4-3");
  CHECK(to_string(CatalanClass::CommutingQuadratic) == "commuting-quadratic");
  CHECK(to_string(CatalanClass::TrivialM2) == "trivial-m2");
}

}  // TEST_SUITE
