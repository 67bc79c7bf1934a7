#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace daha {

// Exact rational scalar. GMP keeps the canonical form (den > 0, gcd = 1).
using Rational = mpq_class;
using Integer = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RingMismatchError : Error {
    using Error::Error;
};

struct NotInvertibleError : Error {
    using Error::Error;
};

struct SingularMatrixError : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// The two-argument mpq constructor does not reduce; this one does.
inline Rational make_fraction(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Canonical "num/den" string, "n" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw DomainError("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

}  // namespace daha
