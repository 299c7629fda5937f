#include "frob/exact.hpp"

namespace frob {

std::string to_decimal(const Rational& q, int digits) {
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i)
        scale *= 10;
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const bool negative = num < 0;
    const BigInt mag = negative ? BigInt(-num) : num;
    const BigInt scaled = (mag * scale * 2 + den) / (den * 2);

    const BigInt whole = scaled / scale;
    std::string frac = BigInt(scaled % scale).str();
    std::string out = (negative && scaled != 0 ? "-" : "") + whole.str();
    if (digits > 0)
        out += "." + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
    return out;
}

} // namespace frob
