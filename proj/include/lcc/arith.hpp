#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lcc {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an exact rational result that must be integral is not.
class NonIntegralError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// p / q in lowest terms; q != 0.
inline Rational fraction(const Integer& p, const Integer& q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Integer factorial(unsigned n);
Integer binomial(long n, long k);  // zero outside 0 <= k <= n

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
Rational parse_rational(const std::string& s);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace lcc
