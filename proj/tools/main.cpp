// quadmat: exact analysis of Fermat and Catalan equations over 2x2 integer
// matrices through commutant rings and quadratic integer arithmetic.

#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quadmat/quadmat.hpp"

using nlohmann::json;
using namespace quadmat;

namespace {

Int to_int(const std::string& text) {
  try {
    return Int(text, 10);
  } catch (const std::exception&) {
    throw degenerate_input_error("invalid integer literal: " + text);
  }
}

unsigned long to_exponent(const std::string& text) {
  Int n = to_int(text);
  if (n <= 0 || !n.fits_ulong_p())
    throw degenerate_input_error("exponent out of range: " + text);
  return n.get_ui();
}

std::map<std::string, std::string> parse_kv(
    const std::vector<std::string>& items) {
  std::map<std::string, std::string> kv;
  for (const std::string& item : items) {
    size_t eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw degenerate_input_error("expected key=value parameter, got: " + item);
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

const std::string& require_kv(const std::map<std::string, std::string>& kv,
                              const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end())
    throw degenerate_input_error("missing required parameter " + key + "=...");
  return it->second;
}

std::string kv_or(const std::map<std::string, std::string>& kv,
                  const std::string& key, const std::string& fallback) {
  auto it = kv.find(key);
  return it == kv.end() ? fallback : it->second;
}

CommutantBasis parse_basis(const std::string& text) {
  std::vector<std::string> parts;
  size_t start = 0;
  while (true) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, comma - start));
    start = comma + 1;
  }
  if (parts.size() != 3)
    throw degenerate_input_error("--basis expects a,b,c");
  return make_basis(to_int(parts[0]), to_int(parts[1]), to_int(parts[2]));
}

json mat_json(const Mat2& m) {
  return json::array({json::array({int_str(m.a), int_str(m.b)}),
                      json::array({int_str(m.c), int_str(m.d)})});
}

json quad_json(const QuadInt& q) {
  return json{{"s", int_str(q.s())},
              {"t", int_str(q.t())},
              {"D", int_str(q.field())}};
}

json basis_json(const CommutantBasis& b) {
  return json{{"a", int_str(b.a())},
              {"b", int_str(b.b())},
              {"c", int_str(b.c())}};
}

bool machine(const std::string& format) { return format == "json-lines"; }

// scalar literal in the basis field (rational literals allowed)
QuadInt parse_scalar(const std::string& text, const CommutantBasis& basis) {
  Int field = basis.is_domain() ? basis.field() : Int(1);
  return parse_quadint(text, field);
}

int run_analyze(const std::string& literal, const std::string& format) {
  CommutantBasis basis = normalize(parse_mat2(literal));
  auto witness = zero_divisor_witness(basis);
  if (machine(format)) {
    json out{{"basis", basis_json(basis)},
             {"delta", int_str(basis.delta())},
             {"square", basis.delta_is_square()},
             {"domain", basis.is_domain()},
             {"nilpotents", basis.has_nilpotents()}};
    if (basis.delta_is_square()) {
      out["sqrt_delta"] = int_str(basis.sqrt_delta());
    } else {
      out["m"] = int_str(basis.multiplier());
      out["D"] = int_str(basis.field());
    }
    if (witness) {
      out["zero_divisors"] =
          json{{"b1", mat_json(witness->first)}, {"b2", mat_json(witness->second)}};
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "basis: (" << basis.a() << "," << basis.b() << "," << basis.c()
            << ")\n";
  std::cout << "delta: " << basis.delta() << "\n";
  if (basis.delta_is_square()) {
    std::cout << "square: yes (sqrt = " << basis.sqrt_delta() << ")\n";
    std::cout << "domain: no (zero divisors";
    if (basis.has_nilpotents()) std::cout << ", nilpotents";
    std::cout << ")\n";
    if (witness)
      std::cout << "witness: B1 = " << to_string(witness->first)
                << ", B2 = " << to_string(witness->second) << ", B1*B2 = O\n";
  } else {
    std::cout << "square: no (delta = " << basis.multiplier() << "^2 * "
              << basis.field() << ")\n";
    std::cout << "field: Q(sqrt(" << basis.field() << "))\n";
    std::cout << "domain: yes\n";
  }
  return 0;
}

int run_exponent(const std::string& s, const std::string& t,
                 const std::string& d, const std::string& format) {
  QuadInt x(to_int(s), to_int(t), to_int(d));
  ExponentClass e = exponent(x);
  if (machine(format)) {
    json out{{"s", int_str(x.s())},
             {"t", int_str(x.t())},
             {"D", int_str(x.field())},
             {"exponent", to_string(e)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << to_string(e) << "\n";
  }
  return 0;
}

int run_verify(bool fermat, bool catalan, bool general,
               const std::vector<std::string>& params,
               const std::string& format) {
  if (int(fermat) + int(catalan) + int(general) != 1)
    throw degenerate_input_error(
        "verify needs exactly one of --fermat, --catalan, --general");
  auto kv = parse_kv(params);
  Mat2 x = parse_mat2(require_kv(kv, "X"));
  Mat2 y = parse_mat2(require_kv(kv, "Y"));
  Mat2 z;
  std::optional<EquationSpec> spec;
  if (fermat) {
    unsigned long n = to_exponent(require_kv(kv, "n"));
    spec.emplace(to_int(kv_or(kv, "u", "1")), to_int(kv_or(kv, "v", "1")),
                 to_int(kv_or(kv, "w", "1")), n, n, n);
    z = parse_mat2(require_kv(kv, "Z"));
  } else if (catalan) {
    spec.emplace(1, -1, 1, to_exponent(require_kv(kv, "m")),
                 to_exponent(require_kv(kv, "n")), 1);
    z = Mat2::identity();
  } else {
    spec.emplace(to_int(kv_or(kv, "u", "1")), to_int(kv_or(kv, "v", "1")),
                 to_int(kv_or(kv, "w", "1")), to_exponent(require_kv(kv, "i")),
                 to_exponent(require_kv(kv, "j")),
                 to_exponent(require_kv(kv, "k")));
    z = parse_mat2(require_kv(kv, "Z"));
  }
  bool ok = check_equation(x, y, z, *spec);
  bool nontrivial = det(x) != 0 && det(y) != 0 && det(z) != 0;
  if (machine(format)) {
    std::cout << json{{"ok", ok}, {"nontrivial", nontrivial}}.dump() << "\n";
  } else if (ok) {
    std::cout << "OK" << (nontrivial ? "" : " (trivial)") << "\n";
  } else {
    std::cout << "FAIL: identity does not hold\n";
  }
  return ok ? 0 : 1;
}

void emit_triple(const std::string& family, const SolutionTriple& triple,
                 const CommutantBasis& basis, const std::string& format) {
  auto mx = membership(basis, triple.x());
  auto my = membership(basis, triple.y());
  auto mz = membership(basis, triple.z());
  std::optional<QuadInt> ex, ey, ez;
  if (basis.is_domain() && mx && my && mz) {
    ex = eigenvalues_of_member(*mx).first;
    ey = eigenvalues_of_member(*my).first;
    ez = eigenvalues_of_member(*mz).first;
  }
  const EquationSpec& spec = triple.spec();
  if (machine(format)) {
    json out{{"X", mat_json(triple.x())},  {"Y", mat_json(triple.y())},
             {"Z", mat_json(triple.z())},  {"u", int_str(spec.u())},
             {"v", int_str(spec.v())},     {"w", int_str(spec.w())},
             {"i", spec.i()},              {"j", spec.j()},
             {"k", spec.k()},              {"basis", basis_json(basis)}};
    if (!family.empty()) out["family"] = family;
    if (ex)
      out["eigenvalues"] = json{{"x", quad_json(*ex)},
                                {"y", quad_json(*ey)},
                                {"z", quad_json(*ez)}};
    std::cout << out.dump() << "\n";
    return;
  }
  if (!family.empty()) std::cout << "family: " << family << "\n";
  std::cout << "basis: (" << basis.a() << "," << basis.b() << "," << basis.c()
            << ")\n";
  std::cout << "X = " << to_string(triple.x()) << "\n";
  std::cout << "Y = " << to_string(triple.y()) << "\n";
  std::cout << "Z = " << to_string(triple.z()) << "\n";
  std::cout << "equation: " << spec.u() << "*X^" << spec.i() << " + "
            << spec.v() << "*Y^" << spec.j() << " = " << spec.w() << "*Z^"
            << spec.k() << "\n";
  if (ex)
    std::cout << "eigenvalues: x = " << to_string(*ex)
              << ", y = " << to_string(*ey) << ", z = " << to_string(*ez)
              << "\n";
}

void emit_catalan(const CatalanSolution& sol, const std::string& format) {
  if (machine(format)) {
    json out{{"X", mat_json(sol.x())},
             {"Y", mat_json(sol.y())},
             {"m", sol.m()},
             {"n", sol.n()},
             {"class", to_string(sol.tag())},
             {"mixed", mixed_eigenvalues(sol)}};
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "X = " << to_string(sol.x()) << "\n";
  std::cout << "Y = " << to_string(sol.y()) << "\n";
  std::cout << "equation: X^" << sol.m() << " - Y^" << sol.n() << " = I\n";
  std::cout << "class: " << to_string(sol.tag()) << "\n";
}

int run_lift(const std::string& mode, const std::string& basis_str,
             const std::vector<std::string>& params,
             const std::string& format) {
  if (basis_str.empty())
    throw degenerate_input_error("lift requires --basis a,b,c");
  CommutantBasis basis = parse_basis(basis_str);
  auto kv = parse_kv(params);
  if (mode == "catalan") {
    QuadInt x = parse_scalar(require_kv(kv, "x"), basis);
    QuadInt y = parse_scalar(require_kv(kv, "y"), basis);
    CatalanSolution sol =
        catalan_lift(basis, x, y, to_exponent(require_kv(kv, "m")),
                     to_exponent(require_kv(kv, "n")));
    emit_catalan(sol, format);
    return 0;
  }
  QuadInt x = parse_scalar(require_kv(kv, "x"), basis);
  QuadInt y = parse_scalar(require_kv(kv, "y"), basis);
  QuadInt z = parse_scalar(require_kv(kv, "z"), basis);
  Int u = to_int(kv_or(kv, "u", "1"));
  Int v = to_int(kv_or(kv, "v", "1"));
  Int w = to_int(kv_or(kv, "w", "1"));
  if (mode == "uniform") {
    unsigned long n = to_exponent(require_kv(kv, "n"));
    emit_triple("", lift_uniform(basis, x, y, z, n, u, v, w), basis, format);
    return 0;
  }
  if (mode != "general")
    throw degenerate_input_error("unknown lift mode: " + mode);
  EquationSpec spec(u, v, w, to_exponent(require_kv(kv, "i")),
                    to_exponent(require_kv(kv, "j")),
                    to_exponent(require_kv(kv, "k")));
  emit_triple("", lift_general(basis, x, y, z, spec), basis, format);
  return 0;
}

int run_families(const std::string& name, const std::string& basis_str,
                 const std::vector<std::string>& params,
                 const std::string& format) {
  auto kv = parse_kv(params);
  std::optional<CommutantBasis> basis;
  if (!basis_str.empty()) basis = parse_basis(basis_str);
  if (name == "chien-meng") {
    if (!basis) basis = make_basis(1, 1, 1);
    emit_triple(name, family_chien_meng(*basis), *basis, format);
  } else if (name == "aigner") {
    if (!basis) basis = make_basis(1, 1, -2);
    emit_triple(name, family_aigner(*basis), *basis, format);
  } else if (name == "burnside") {
    Int k = to_int(require_kv(kv, "k"));
    if (!basis) basis = burnside_basis(k);
    emit_triple(name, family_burnside(k, *basis), *basis, format);
  } else if (name == "kaddoura-mourad") {
    Int r = to_int(require_kv(kv, "r"));
    Int s = to_int(require_kv(kv, "s"));
    unsigned long n = to_exponent(require_kv(kv, "n"));
    if (!basis) basis = make_basis(1, -1, 1);
    emit_triple(name, family_kaddoura(r, s, *basis, n), *basis, format);
  } else {
    throw degenerate_input_error(
        "unknown family: " + name +
        " (expected chien-meng, aigner, burnside, kaddoura-mourad)");
  }
  return 0;
}

int run_feasibility(const std::string& basis_str,
                    const std::vector<std::string>& params,
                    const std::string& format) {
  if (basis_str.empty())
    throw degenerate_input_error("feasibility requires --basis a,b,c");
  CommutantBasis basis = parse_basis(basis_str);
  auto kv = parse_kv(params);
  unsigned long n = to_exponent(require_kv(kv, "n"));
  FeasibilityVerdict verdict = fermat_feasibility(basis, n);
  if (machine(format)) {
    json out{{"status", to_string(verdict.status)},
             {"citation", verdict.citation}};
    if (verdict.witness)
      out["witness"] = json{{"X", mat_json(verdict.witness->x())},
                            {"Y", mat_json(verdict.witness->y())},
                            {"Z", mat_json(verdict.witness->z())}};
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::cout << "status: " << to_string(verdict.status) << "\n";
  std::cout << "citation: " << verdict.citation << "\n";
  if (verdict.witness) {
    std::cout << "witness: X = " << to_string(verdict.witness->x())
              << ", Y = " << to_string(verdict.witness->y())
              << ", Z = " << to_string(verdict.witness->z()) << "\n";
  }
  return 0;
}

int run_search(long entry_bound, unsigned long max_exp, unsigned threads,
               const std::string& format) {
  CatalanSearchReport report = brute_force_search(entry_bound, max_exp, threads);
  for (const CatalanSolution& hit : report.hits) {
    if (machine(format)) {
      emit_catalan(hit, format);
    } else {
      std::cout << "X^" << hit.m() << " - Y^" << hit.n()
                << " = I: X = " << to_string(hit.x())
                << ", Y = " << to_string(hit.y()) << "  [" << to_string(hit.tag())
                << (mixed_eigenvalues(hit) ? ", mixed" : "") << "]\n";
    }
  }
  for (const CatalanViolation& bad : report.violations)
    std::cerr << "violation: X = " << to_string(bad.x)
              << ", Y = " << to_string(bad.y) << ", m = " << bad.m
              << ", n = " << bad.n << ": " << bad.reason << "\n";
  if (!machine(format))
    std::cerr << "hits: " << report.hits.size()
              << ", violations: " << report.violations.size() << "\n";
  return report.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact Fermat and Catalan matrix equations over 2x2 integer matrices"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format (text or json-lines)")
      ->check(CLI::IsMember({"text", "json-lines"}));

  auto* analyze = app.add_subcommand(
      "analyze", "normalized commutant basis and ring structure of a matrix");
  std::string analyze_matrix;
  analyze->add_option("matrix", analyze_matrix, "matrix literal [[a,b],[c,d]]")
      ->required();

  auto* expo = app.add_subcommand(
      "exponent", "multiplicative exponent of (s + t sqrt(D))/2");
  std::vector<std::string> expo_args;
  expo->add_option("coords", expo_args, "s t D")->expected(3);

  auto* verify = app.add_subcommand("verify", "check a matrix identity exactly");
  bool verify_fermat = false, verify_catalan = false, verify_general = false;
  verify->add_flag("--fermat", verify_fermat, "X^n + Y^n = Z^n form");
  verify->add_flag("--catalan", verify_catalan, "X^m - Y^n = I form");
  verify->add_flag("--general", verify_general, "u X^i + v Y^j = w Z^k form");
  std::vector<std::string> verify_params;
  verify->add_option("params", verify_params, "key=value parameters");

  auto* lift = app.add_subcommand(
      "lift", "lift scalar solutions from the quadratic field into the commutant");
  std::string lift_mode = "general", lift_basis;
  lift->add_option("--mode", lift_mode, "general, uniform, or catalan")
      ->check(CLI::IsMember({"general", "uniform", "catalan"}));
  lift->add_option("--basis", lift_basis, "commutant basis a,b,c");
  std::vector<std::string> lift_params;
  lift->add_option("params", lift_params, "key=value parameters");

  auto* families = app.add_subcommand(
      "families", "generate a classical verified solution family");
  std::string family_name, family_basis;
  families->add_option("name", family_name, "family name")->required();
  families->add_option("--basis", family_basis, "commutant basis a,b,c");
  std::vector<std::string> family_params;
  families->add_option("params", family_params, "key=value parameters");

  auto* feas = app.add_subcommand(
      "feasibility", "solvability of X^n + Y^n = Z^n in a commutant");
  std::string feas_basis;
  feas->add_option("--basis", feas_basis, "commutant basis a,b,c");
  std::vector<std::string> feas_params;
  feas->add_option("params", feas_params, "n=...");

  auto* search = app.add_subcommand(
      "search", "exhaustive Catalan search with structural classification");
  long search_bound = 2;
  unsigned long search_exp = 4;
  unsigned search_threads = 0;
  search->add_option("--entry-bound", search_bound, "matrix entry bound");
  search->add_option("--max-exp", search_exp, "largest exponent to scan");
  search->add_option("--threads", search_threads,
                     "worker threads (0 = hardware default)");

  for (CLI::App* sub : {analyze, expo, verify, lift, families, feas, search})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_matrix, format);
    if (expo->parsed()) {
      if (expo_args.size() != 3)
        throw degenerate_input_error("exponent expects: s t D");
      return run_exponent(expo_args[0], expo_args[1], expo_args[2], format);
    }
    if (verify->parsed())
      return run_verify(verify_fermat, verify_catalan, verify_general,
                        verify_params, format);
    if (lift->parsed()) return run_lift(lift_mode, lift_basis, lift_params, format);
    if (families->parsed())
      return run_families(family_name, family_basis, family_params, format);
    if (feas->parsed()) return run_feasibility(feas_basis, feas_params, format);
    if (search->parsed())
      return run_search(search_bound, search_exp, search_threads, format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
