// Copyright (c) 2026 trdpois contributors
// SPDX-License-Identifier: Apache-2.0
//
#include "trdpois/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "trdpois/errors.hpp"

namespace trdpois {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

// cpp_int's string constructor treats a leading 0 as base 8; always feed it
// a canonical base-10 string with the sign handled here.
BigInt parse_int10(std::string_view s) {
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    while (s.size() > 1 && s[0] == '0') s.remove_prefix(1);
    BigInt v{std::string(s)};
    return negative ? -v : v;
}

// Decimal or scientific literal -> exact rational (digits / power of ten).
BigRational parse_decimal(std::string_view s) {
    bool negative = false;
    size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = s[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        const char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits += c;
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            exp_neg = s[i] == '-';
            ++i;
        }
        if (i >= s.size() || !all_digits(s.substr(i))) {
            throw Error("cannot parse rational literal: bad exponent");
        }
        exponent = std::stol(std::string(s.substr(i)));
        if (exp_neg) exponent = -exponent;
        i = s.size();
    }
    if (!seen_digit || i != s.size()) {
        throw Error("cannot parse rational literal");
    }
    BigInt num = parse_int10(digits.empty() ? "0" : digits);
    BigInt den = 1;
    const long net = exponent - frac_digits;
    BigInt ten(10);
    for (long j = 0; j < std::labs(net); ++j) {
        if (net > 0) {
            num *= ten;
        } else {
            den *= ten;
        }
    }
    if (negative) num = -num;
    return BigRational(num, den);
}

}  // namespace

BigRational rational_from_string(std::string_view text) {
    // Trim surrounding whitespace.
    size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
    const std::string_view s = text.substr(b, e - b);
    if (s.empty()) {
        throw Error("cannot parse rational literal: empty string");
    }
    const size_t slash = s.find('/');
    if (slash != std::string_view::npos) {
        const std::string_view ps = s.substr(0, slash);
        const std::string_view qs = s.substr(slash + 1);
        std::string_view pd = ps;
        if (!pd.empty() && (pd[0] == '+' || pd[0] == '-')) pd.remove_prefix(1);
        if (!all_digits(pd) || !all_digits(qs)) {
            throw Error("cannot parse rational literal: expected integer/integer");
        }
        const BigInt p = parse_int10(ps);
        const BigInt q = parse_int10(qs);
        if (q == 0) {
            throw Error("cannot parse rational literal: zero denominator");
        }
        return BigRational(p, q);
    }
    return parse_decimal(s);
}

BigRational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw Error("rational_from_double: value must be finite");
    }
    if (x == 0.0) return BigRational(0);
    int exp2 = 0;
    const double mant = std::frexp(x, &exp2);  // |mant| in [0.5, 1)
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp2 -= 53;  // x = scaled * 2^exp2 exactly
    BigInt num(scaled);
    BigInt den = 1;
    if (exp2 >= 0) {
        num <<= exp2;
    } else {
        den <<= -exp2;
    }
    return BigRational(num, den);
}

double to_double(const BigRational& q) {
    using boost::multiprecision::msb;
    if (q == 0) return 0.0;
    BigInt num = boost::multiprecision::numerator(q);
    const BigInt& den = boost::multiprecision::denominator(q);
    const bool negative = num < 0;
    if (negative) num = -num;

    // Scale so the integer quotient carries 55 or 56 bits, then round the
    // excess away with the remainder as the sticky bit (ties to even).
    const long mn = static_cast<long>(msb(num));
    const long md = static_cast<long>(msb(den));
    const long shift = 55 + md - mn;
    BigInt n_scaled = num;
    BigInt d_scaled = den;
    if (shift >= 0) {
        n_scaled <<= shift;
    } else {
        d_scaled <<= -shift;
    }
    BigInt quot = n_scaled / d_scaled;
    const BigInt rem = n_scaled % d_scaled;
    const long bits = static_cast<long>(msb(quot)) + 1;
    const long drop = bits - 53;
    const BigInt mask = (BigInt(1) << drop) - 1;
    const BigInt low = quot & mask;
    const BigInt half = BigInt(1) << (drop - 1);
    quot >>= drop;
    if (low > half || (low == half && (rem != 0 || (quot & 1) != 0))) {
        ++quot;
    }
    const double value =
        std::ldexp(quot.convert_to<double>(), static_cast<int>(drop - shift));
    return negative ? -value : value;
}

}  // namespace trdpois
