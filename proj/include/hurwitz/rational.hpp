#pragma once

#include <gmpxx.h>

#include <string>

namespace hurwitz {

// Every scalar in the system is an exact rational. GMP keeps mpq_class values
// canonical (lowest terms, positive denominator) as long as they are built
// through mpq arithmetic or the helpers below.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(Int num, Int den) {
    Rat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

// Parses "p/q", "p" or "-p/q". Throws input_error on malformed input.
Rat rat_from_string(const std::string& s);

// Canonical form: "0", integers without "/1", otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Finite decimal expansion when the reduced denominator is 2^a*5^b,
// otherwise the "p/q" form. Used for CSV output.
std::string rat_to_decimal_if_exact(const Rat& r);

Int factorial(long n);
Int binomial(long n, long k);
Int rising_product(long from, long to);  // from*(from+1)*...*to, empty product = 1

bool is_integer(const Rat& r);

}  // namespace hurwitz
