#pragma once

#include <gmpxx.h>

#include <string>

namespace lopsa {

// All coefficient arithmetic in this project is exact. Rat is GMP's
// canonical rational: arithmetic keeps values reduced, comparisons are exact.
using Rat = mpq_class;
using Int = mpz_class;

// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, gcd(p,q)=1).
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q" with optional sign. Throws InvalidInputError otherwise.
Rat rat_from_string(const std::string& s);

bool rat_is_integer(const Rat& r);

Int factorial(int n);

// Binomial coefficient, 0 when k < 0 or k > n.
Int binomial(int n, int k);

// floor(log2(v)) as double plus the fractional part, i.e. log2 of a positive
// integer computed exactly enough for reporting (53-bit mantissa on the
// leading bits). Used only for the size component of complexity metrics.
double log2_of(const Int& v);

} // namespace lopsa
