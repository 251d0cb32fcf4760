#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

#include "polycalc/errors.hpp"

namespace polycalc {

// Exact rational scalar.  GMP keeps values canonical (gcd(p,q) = 1, q > 0)
// under arithmetic as long as every value entering the system is canonical,
// so the parsing helpers below normalize eagerly.
using Rat = boost::multiprecision::mpq_rational;
using Int = boost::multiprecision::mpz_int;

inline void canonicalize(Rat& x) {
    mpq_canonicalize(x.backend().data());
}

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rat x(num, den);
    canonicalize(x);
    return x;
}

// Accepts "p" or "p/q" with optional leading sign on p; q must be a positive
// integer literal.  Anything else is rejected.
inline Rat parse_rat(std::string_view text) {
    auto bad = [&]() -> Rat {
        throw ParseError("malformed rational literal '" + std::string(text) + "'");
    };
    if (text.empty()) return bad();
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') ++i;
    std::size_t digits = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') { ++i; ++digits; }
    if (digits == 0) return bad();
    if (i < text.size()) {
        if (text[i] != '/') return bad();
        ++i;
        std::size_t den_digits = 0;
        bool all_zero = true;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
            if (text[i] != '0') all_zero = false;
            ++i; ++den_digits;
        }
        if (den_digits == 0 || all_zero || i != text.size()) return bad();
    }
    // GMP's reader takes a '-' sign but not a '+'
    Rat x{std::string(text[0] == '+' ? text.substr(1) : text)};
    canonicalize(x);
    return x;
}

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 1.
inline std::string rat_str(const Rat& x) {
    return x.str();
}

} // namespace polycalc
