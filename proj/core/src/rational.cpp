#include "palin/rational.hpp"

#include <stdexcept>

namespace palin {

BigInt u128_to_bigint(unsigned __int128 v) {
    const auto hi = static_cast<std::uint64_t>(v >> 64);
    const auto lo = static_cast<std::uint64_t>(v);
    return (BigInt(hi) << 64) | lo;
}

BigInt bigint_pow(int base, std::size_t exp) {
    BigInt out = 1;
    for (std::size_t i = 0; i < exp; ++i) out *= base;
    return out;
}

Rational::Rational(BigInt n, BigInt d) : num(std::move(n)), den(std::move(d)) {
    if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
}

Rational Rational::divided_by(const BigInt& k) const {
    if (k <= 0) throw std::invalid_argument("divisor must be positive");
    return Rational(num, den * k);
}

std::string Rational::decimal(int places) const {
    const bool negative = num < 0;
    BigInt scaled = (negative ? -num : num) * bigint_pow(10, static_cast<std::size_t>(places));
    BigInt whole = scaled / den;
    const BigInt rem = scaled % den;
    if (rem * 2 >= den) ++whole; // half away from zero

    std::string digits = whole.str();
    if (digits.size() <= static_cast<std::size_t>(places))
        digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(), '0');
    std::string out = negative ? "-" : "";
    out += digits.substr(0, digits.size() - static_cast<std::size_t>(places));
    if (places > 0) {
        out += '.';
        out += digits.substr(digits.size() - static_cast<std::size_t>(places));
    }
    return out;
}

double Rational::to_double() const {
    return static_cast<double>(boost::multiprecision::cpp_rational(num, den));
}

} // namespace palin
