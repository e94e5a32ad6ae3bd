#ifndef QUADMAT_MATPOW_HPP
#define QUADMAT_MATPOW_HPP

#include "quadmat/mat2.hpp"

namespace quadmat {

// M^n (n >= 0) in closed form through the characteristic polynomial:
// with u_0 = 0, u_1 = 1, u_k = tr(M) u_{k-1} - det(M) u_{k-2},
//
//   M^n = u_n M - det(M) u_{n-1} I
//
// when the eigenvalues are distinct; the confluent (equal eigenvalue) and
// nilpotent cases are handled by their own closed forms.  Exact integer
// arithmetic throughout.
Mat2 mat_pow_closed(const Mat2& m, unsigned long n);

// Reference implementation: n-fold repeated multiplication.
Mat2 mat_pow_naive(const Mat2& m, unsigned long n);

}  // namespace quadmat

#endif
