#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "fairdist/errors.hpp"

namespace fairdist {

// Exact fraction: arbitrary-precision numerator/denominator, always kept in
// lowest terms with a positive denominator (cpp_rational canonicalizes on
// every operation). All probabilities, LP data and duals use this type; no
// floating point exists anywhere in the solve paths.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "num", "-num", "num/den" with positive den. Rejects decimals,
// empty strings and zero denominators.
inline Rational parse_rational(std::string_view text) {
    if (text.empty()) throw ParseError("empty rational");
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    bool digits = false, slash = false;
    for (std::size_t k = i; k < text.size(); ++k) {
        char c = text[k];
        if (c == '/') {
            if (slash || !digits) throw ParseError("bad rational: " + std::string(text));
            slash = true;
            digits = false;
        } else if (c >= '0' && c <= '9') {
            digits = true;
        } else {
            throw ParseError("bad rational: " + std::string(text));
        }
    }
    if (!digits) throw ParseError("bad rational: " + std::string(text));
    if (slash) {
        auto pos = text.find('/');
        BigInt num(std::string(text.substr(0, pos)));
        BigInt den(std::string(text.substr(pos + 1)));
        if (den == 0) throw ParseError("bad rational: zero denominator in " + std::string(text));
        return Rational(num, den);
    }
    return Rational(BigInt(std::string(text)));
}

// "num/den" in lowest terms, or a bare integer when den == 1.
inline std::string format_rational(const Rational& r) { return r.str(); }

}  // namespace fairdist
