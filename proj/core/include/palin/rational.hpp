#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>

namespace palin {

// Counts over word spaces overflow 64 bits well inside the supported range,
// so every aggregate is kept exact.
using BigInt = boost::multiprecision::cpp_int;

BigInt u128_to_bigint(unsigned __int128 v);
BigInt bigint_pow(int base, std::size_t exp);

// Exact ratio; denominator always positive, no implicit normalization.
// Decimals exist only at the I/O boundary.
struct Rational {
    BigInt num = 0;
    BigInt den = 1;

    Rational() = default;
    Rational(BigInt n, BigInt d);

    Rational divided_by(const BigInt& k) const;

    // Fixed-point rendering, round half away from zero.
    std::string decimal(int places) const;
    double to_double() const;

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num * y.den == y.num * x.den;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        const BigInt l = x.num * y.den, r = y.num * x.den;
        return l < r ? std::strong_ordering::less
             : l > r ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
};

} // namespace palin
