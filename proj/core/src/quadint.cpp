#include "quadmat/quadint.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace quadmat {

bool is_squarefree(const Int& n) {
  if (n == 0) return false;
  Int r = abs(n);
  for (Int p = 2; p * p <= r; ++p) {
    if (divides(p * p, r)) return false;
    while (divides(p, r)) r = exact_div(r, p);
  }
  return true;
}

SquarefreeDecomposition squarefree_decompose(const Int& n) {
  if (n == 0)
    throw degenerate_input_error("square-free decomposition of zero");
  Int m = 1;
  Int r = abs(n);
  for (Int p = 2; p * p <= r; ++p) {
    while (divides(p * p, r)) {
      r = exact_div(r, p * p);
      m *= p;
    }
  }
  if (n < 0) r = -r;
  return {m, r};
}

QuadInt::QuadInt(Int s, Int t, Int d)
    : s_(std::move(s)), t_(std::move(t)), d_(std::move(d)) {
  if (d_ == 0) throw degenerate_input_error("field parameter D must be nonzero");
  if (d_ == 1) {
    if (t_ != 0)
      throw degenerate_input_error("sqrt coordinate must vanish when D = 1");
    if (!is_even(s_))
      throw degenerate_input_error("rational element (s+0)/2 needs even s");
    return;
  }
  if (!is_squarefree(d_))
    throw degenerate_input_error("field parameter D must be square-free");
  if (mod4(d_) == 1) {
    if (!is_even(s_ - t_))
      throw degenerate_input_error(
          "(s + t sqrt(D))/2 needs s = t (mod 2) for D = 1 (mod 4)");
  } else {
    if (!is_even(s_) || !is_even(t_))
      throw degenerate_input_error(
          "(s + t sqrt(D))/2 needs even s, t for D = 2, 3 (mod 4)");
  }
}

Int QuadInt::rational_value() const {
  if (t_ != 0)
    throw degenerate_input_error("rational_value of an irrational element");
  return s_ / 2;
}

bool QuadInt::operator==(const QuadInt& other) const {
  if (s_ != other.s_ || t_ != other.t_) return false;
  // equal rational elements match across fields
  return t_ == 0 || d_ == other.d_;
}

bool QuadInt::operator<(const QuadInt& other) const {
  // key (effective field, s, t); rationals all live in the D = 1 bucket
  Int da = t_ == 0 ? Int(1) : d_;
  Int db = other.t_ == 0 ? Int(1) : other.d_;
  if (da != db) return da < db;
  if (s_ != other.s_) return s_ < other.s_;
  return t_ < other.t_;
}

namespace {

// the field both operands live in, coercing rational elements freely
const Int& common_field(const QuadInt& a, const QuadInt& b) {
  if (a.field() == b.field()) return a.field();
  if (a.is_rational_integer()) return b.field();
  if (b.is_rational_integer()) return a.field();
  throw field_mismatch_error("operands lie in distinct quadratic fields");
}

}  // namespace

QuadInt operator+(const QuadInt& a, const QuadInt& b) {
  return QuadInt(a.s() + b.s(), a.t() + b.t(), common_field(a, b));
}

QuadInt operator-(const QuadInt& a, const QuadInt& b) {
  return QuadInt(a.s() - b.s(), a.t() - b.t(), common_field(a, b));
}

QuadInt operator-(const QuadInt& a) { return QuadInt(-a.s(), -a.t(), a.field()); }

QuadInt operator*(const QuadInt& a, const QuadInt& b) {
  const Int& d = common_field(a, b);
  // (s1 s2 + t1 t2 D)/2 and (s1 t2 + t1 s2)/2 are integral by the parity
  // invariant of the operands
  Int s2 = a.s() * b.s() + a.t() * b.t() * d;
  Int t2 = a.s() * b.t() + a.t() * b.s();
  return QuadInt(exact_div(s2, 2), exact_div(t2, 2), d);
}

QuadInt operator*(const Int& k, const QuadInt& a) {
  return QuadInt(k * a.s(), k * a.t(), a.field());
}

QuadInt conj(const QuadInt& x) { return QuadInt(x.s(), -x.t(), x.field()); }

Int norm(const QuadInt& x) {
  return exact_div(x.s() * x.s() - x.t() * x.t() * x.field(), 4);
}

Int trace(const QuadInt& x) { return x.s(); }

QuadInt pow(const QuadInt& x, unsigned long n) {
  QuadInt r = QuadInt::integer(1);
  QuadInt base = x;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return r;
}

int ExponentClass::value() const {
  if (e_ == 0)
    throw degenerate_input_error("no finite exponent for this element");
  return e_;
}

ExponentClass exponent(const QuadInt& x) {
  if (x.is_zero())
    throw degenerate_input_error("exponent classification of zero");
  if (x.field() == 1)
    throw field_mismatch_error("exponent classification needs D != 1");
  if (x.t() == 0) return ExponentClass::finite(1);
  if (x.s() == 0) return ExponentClass::finite(2);
  // the remaining finite classes are the sixth and fourth roots of unity
  // scaled by rational integers, which pins D to -3 and -1
  if (x.field() == -3) {
    if (x.s() == x.t() || x.s() == -x.t()) return ExponentClass::finite(3);
    if (x.s() == 3 * x.t() || x.s() == -3 * x.t())
      return ExponentClass::finite(6);
  }
  if (x.field() == -1 && (x.s() == x.t() || x.s() == -x.t()))
    return ExponentClass::finite(4);
  return ExponentClass::unbounded();
}

namespace {

void append_root_term(std::string& out, const Int& t, const Int& d,
                      bool leading) {
  // writes t*sqrt(d) with sign, assuming t != 0
  if (t == 1) {
    if (!leading) out += '+';
  } else if (t == -1) {
    out += '-';
  } else {
    if (!leading && t > 0) out += '+';
    out += int_str(t);
  }
  out += "√";
  out += int_str(d);
}

}  // namespace

std::string to_string(const QuadInt& x) {
  if (x.t() == 0) return int_str(x.s() / 2);
  std::string out;
  if (is_even(x.s()) && is_even(x.t())) {
    Int p = x.s() / 2, q = x.t() / 2;
    if (p != 0) out += int_str(p);
    append_root_term(out, q, x.field(), p == 0);
    return out;
  }
  out = "(";
  if (x.s() != 0) out += int_str(x.s());
  append_root_term(out, x.t(), x.field(), x.s() == 0);
  out += ")/2";
  return out;
}

namespace {

struct Scanner {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool eat_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
  bool at_digit() {
    skip_ws();
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }
  Int integer() {
    skip_ws();
    bool negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negative = text[pos] == '-';
      ++pos;  // mpz rejects a leading '+', so keep the sign out of the digits
    }
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == digits)
      throw degenerate_input_error("expected an integer in quadratic literal");
    Int value(std::string(text.substr(digits, pos - digits)), 10);
    return negative ? Int(-value) : value;
  }
  bool done() {
    skip_ws();
    return pos == text.size();
  }
};

// root := ("√" | "sqrt") (integer | "(" integer ")")
bool try_root(Scanner& sc, Int& d) {
  if (sc.eat_word("√") || sc.eat_word("sqrt")) {
    if (sc.eat('(')) {
      d = sc.integer();
      if (!sc.eat(')'))
        throw degenerate_input_error("unbalanced parenthesis after sqrt");
    } else {
      d = sc.integer();
    }
    return true;
  }
  return false;
}

// inner := term (("+" | "-") term)?   where term := integer [root] | root
// yields whole-coordinate (p, q, d); d = 0 when no root appeared
void parse_inner(Scanner& sc, Int& p, Int& q, Int& d) {
  p = 0;
  q = 0;
  d = 0;
  bool have_rational = false;
  for (int terms = 0; terms < 2; ++terms) {
    int sign = 1;
    sc.skip_ws();
    if (terms > 0) {
      if (sc.eat('+'))
        sign = 1;
      else if (sc.eat('-'))
        sign = -1;
      else
        break;
    } else if (sc.eat('-')) {
      // leading sign, e.g. "-√2"; integer() handles "-3" itself but a
      // negated bare root never reaches it
      sign = -1;
    } else {
      sc.eat('+');
    }
    Int dd;
    if (try_root(sc, dd)) {
      if (d != 0)
        throw degenerate_input_error("two root terms in quadratic literal");
      d = dd;
      q = sign;
      continue;
    }
    Int n = sc.integer();
    if (try_root(sc, dd)) {
      if (d != 0)
        throw degenerate_input_error("two root terms in quadratic literal");
      d = dd;
      q = sign * n;
    } else {
      if (have_rational)
        throw degenerate_input_error("two integer terms in quadratic literal");
      have_rational = true;
      p = sign * n;
    }
  }
}

}  // namespace

QuadInt parse_quadint(std::string_view text, const Int& rational_field) {
  Scanner sc{text};
  Int p, q, d;
  bool half = false;
  sc.skip_ws();
  // half form "( inner )/2"; a leading '(' could also be sqrt(...) which
  // try_root consumes itself, so probe for '(' not followed by a root
  size_t save = sc.pos;
  if (sc.eat('(')) {
    parse_inner(sc, p, q, d);
    if (sc.eat(')') && sc.eat('/')) {
      Int two = sc.integer();
      if (two != 2)
        throw degenerate_input_error("only /2 denominators are supported");
      half = true;
    } else {
      sc.pos = save;  // no denominator: reparse as a whole-coordinate literal
    }
  }
  if (!half) {
    sc.pos = save;
    parse_inner(sc, p, q, d);
  }
  if (!sc.done())
    throw degenerate_input_error("trailing characters in quadratic literal");
  Int field = d != 0 ? d : rational_field;
  if (half) return QuadInt(p, q, field);
  return QuadInt(2 * p, 2 * q, field);
}

std::string to_string(const ExponentClass& e) {
  return e.is_finite() ? std::to_string(e.value()) : std::string("inf");
}

std::ostream& operator<<(std::ostream& os, const QuadInt& x) {
  return os << to_string(x);
}

std::ostream& operator<<(std::ostream& os, const ExponentClass& e) {
  return os << to_string(e);
}

}  // namespace quadmat
