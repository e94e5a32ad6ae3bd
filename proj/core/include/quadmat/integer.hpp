#ifndef QUADMAT_INTEGER_HPP
#define QUADMAT_INTEGER_HPP

#include <gmpxx.h>

#include <string>

namespace quadmat {

// All ring elements are exact arbitrary-precision integers.
using Int = mpz_class;

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_gcd(const Int& a, const Int& b, const Int& c) {
  return int_gcd(int_gcd(a, b), c);
}

inline bool is_even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

inline bool is_perfect_square(const Int& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

// floor(sqrt(n)) for n >= 0
inline Int int_sqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// n mod 4 in {0,1,2,3} (mathematical residue, also for negative n)
inline int mod4(const Int& n) {
  Int r = n % 4;
  if (r < 0) r += 4;
  return static_cast<int>(r.get_si());
}

inline bool divides(const Int& d, const Int& n) {
  return d != 0 && mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// quotient n/d for the exact-division case
inline Int exact_div(const Int& n, const Int& d) {
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

inline std::string int_str(const Int& n) { return n.get_str(); }

}  // namespace quadmat

#endif
