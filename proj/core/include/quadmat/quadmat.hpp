#ifndef QUADMAT_QUADMAT_HPP
#define QUADMAT_QUADMAT_HPP

#include "quadmat/catalan.hpp"
#include "quadmat/commutant.hpp"
#include "quadmat/errors.hpp"
#include "quadmat/fermat.hpp"
#include "quadmat/integer.hpp"
#include "quadmat/mat2.hpp"
#include "quadmat/matpow.hpp"
#include "quadmat/quadint.hpp"

#endif
