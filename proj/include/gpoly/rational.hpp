#pragma once

// Exact arbitrary-precision rational scalars. Every quantity in this library
// is a Rat; no floating point is used anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gpoly {

using Int = boost::multiprecision::cpp_int;

// Always canonical: gcd(|num|, den) = 1 and den > 0 after every operation.
using Rat = boost::multiprecision::cpp_rational;

using RatVec = std::vector<Rat>;

// Parses "p", "p/q" or "-p/q" (decimal digits only, q != 0).
inline Rat rat_from_string(std::string_view text) {
    auto fail = [&]() -> Rat {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();

    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-') {
        negative = true;
        pos = 1;
    }

    auto read_digits = [&](std::string& out) {
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            out.push_back(text[pos]);
            ++pos;
        }
    };

    std::string num_digits;
    read_digits(num_digits);
    if (num_digits.empty()) return fail();

    std::string den_digits = "1";
    if (pos < text.size()) {
        if (text[pos] != '/') return fail();
        ++pos;
        den_digits.clear();
        read_digits(den_digits);
        if (den_digits.empty() || pos != text.size()) return fail();
    }

    Int num(num_digits);
    Int den(den_digits);
    if (den == 0) return fail();
    if (negative) num = -num;
    return Rat(num, den);
}

inline std::string rat_to_string(const Rat& value) {
    std::string out = numerator(value).str();
    if (denominator(value) != 1) {
        out += '/';
        out += denominator(value).str();
    }
    return out;
}

}  // namespace gpoly
