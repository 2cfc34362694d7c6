#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopford {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den >= 1
// once canonicalize() has run; every constructor path below guarantees that.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_integer(const Rational& r) {
    return r.get_den() == 1;
}

// Serialized as "num/den", always with the denominator.
inline std::string rat_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rat_from_string(std::string_view s);

}  // namespace hopford
