#include "quadmat/matpow.hpp"

namespace quadmat {

Mat2 mat_pow_closed(const Mat2& m, unsigned long n) {
  if (n == 0) return Mat2::identity();
  if (n == 1) return m;
  Int tr = trace(m);
  Int dt = det(m);
  Int disc = tr * tr - 4 * dt;
  if (disc == 0) {
    // double eigenvalue x = tr/2 (tr is even when the discriminant is 0)
    Int x = tr / 2;
    if (x == 0) return Mat2::zero();  // nilpotent and n >= 2
    // M^n = x^n I + n x^(n-1) (M - x I)
    Int xp = int_pow(x, n - 1);
    Int xn = xp * x;
    Int nx = n * xp;
    return {xn + nx * (m.a - x), nx * m.b, nx * m.c, xn + nx * (m.d - x)};
  }
  // distinct eigenvalues: with u_0 = 0, u_1 = 1,
  // u_k = tr u_{k-1} - det u_{k-2} (the divided power sums), we have
  // M^n = u_n M - det u_{n-1} I
  Int u_prev = 0, u = 1;
  for (unsigned long k = 2; k <= n; ++k) {
    Int next = tr * u - dt * u_prev;
    u_prev = u;
    u = next;
  }
  Int shift = dt * u_prev;
  return {u * m.a - shift, u * m.b, u * m.c, u * m.d - shift};
}

Mat2 mat_pow_naive(const Mat2& m, unsigned long n) {
  Mat2 r = Mat2::identity();
  for (unsigned long k = 0; k < n; ++k) r = r * m;
  return r;
}

}  // namespace quadmat
