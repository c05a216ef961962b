#pragma once

#include <gmpxx.h>

namespace nclab {

// Exact coefficient types. GMP keeps rationals in lowest terms with a
// positive denominator after every arithmetic operation.
using Integer = mpz_class;
using Rational = mpq_class;

}  // namespace nclab
