#pragma once

#include <gmpxx.h>

#include <string>

namespace dyckpaint {

// Path counts grow super-polynomially (Catalan numbers and beyond), so every
// count, binomial and determinant intermediate is an exact big integer.
using Count = mpz_class;

// binom(n, k) for n, k >= 0; zero when k > n.
Count binomial(unsigned long n, unsigned long k);

std::string to_decimal(const Count& v);

} // namespace dyckpaint
