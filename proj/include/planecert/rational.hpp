// Exact arithmetic aliases and helpers. Everything downstream (class sizes,
// character sums, LP pivots) is computed over these types; no floating point
// appears anywhere in the library.
#pragma once

#include <gmpxx.h>

#include <string>

namespace planecert {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer factorial(unsigned n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

inline std::string to_string(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline bool is_integral(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_den() == 1;
}

inline bool is_even_integer(const Rational& q) {
    Rational c(q);
    c.canonicalize();
    return c.get_den() == 1 && mpz_even_p(c.get_num().get_mpz_t());
}

}  // namespace planecert
