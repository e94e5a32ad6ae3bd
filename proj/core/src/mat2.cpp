#include "quadmat/mat2.hpp"

#include <cctype>
#include <ostream>

#include "quadmat/errors.hpp"

namespace quadmat {

int compare(const Mat2& x, const Mat2& y) {
  if (int r = cmp(x.a, y.a)) return r;
  if (int r = cmp(x.b, y.b)) return r;
  if (int r = cmp(x.c, y.c)) return r;
  return cmp(x.d, y.d);
}

std::string to_string(const Mat2& x) {
  return "[[" + int_str(x.a) + "," + int_str(x.b) + "],[" + int_str(x.c) +
         "," + int_str(x.d) + "]]";
}

namespace {

struct MatScanner {
  std::string_view text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw degenerate_input_error(std::string("malformed matrix literal: expected '") +
                                   c + "'");
    ++pos;
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
      throw degenerate_input_error("malformed matrix literal: expected an integer");
    Int value(std::string(text.substr(digits, pos - digits)), 10);
    return negative ? Int(-value) : value;
  }
  void finish() {
    skip_ws();
    if (pos != text.size())
      throw degenerate_input_error("malformed matrix literal: trailing characters");
  }
};

}  // namespace

Mat2 parse_mat2(std::string_view text) {
  MatScanner sc{text};
  Mat2 m;
  sc.expect('[');
  sc.expect('[');
  m.a = sc.integer();
  sc.expect(',');
  m.b = sc.integer();
  sc.expect(']');
  sc.expect(',');
  sc.expect('[');
  m.c = sc.integer();
  sc.expect(',');
  m.d = sc.integer();
  sc.expect(']');
  sc.expect(']');
  sc.finish();
  return m;
}

std::ostream& operator<<(std::ostream& os, const Mat2& x) {
  return os << to_string(x);
}

}  // namespace quadmat
