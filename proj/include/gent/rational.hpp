#pragma once

#include <gmpxx.h>

#include <string>

namespace gent {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

// mpq_class(num, den) does not reduce; this does.
inline Rational make_rational(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

// b^e for non-negative integer exponents.
Integer integer_pow(const Integer& b, unsigned long e);

// 12-digit decimal rendering used by report output; display only, never
// compared.
std::string decimal_string(double x);

}  // namespace gent
