#ifndef JACKMAPS_RATIONAL_HPP
#define JACKMAPS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jackmaps {

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational numbers. mpq_class keeps the canonical form we need
// (positive denominator, gcd-reduced), so this is a thin layer that adds
// the few helpers the rest of the library wants.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Rational rat_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    Rational b = base;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(const Integer& n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
    return r;
}

// Canonical text form: "3", "-3/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace jackmaps

#endif
