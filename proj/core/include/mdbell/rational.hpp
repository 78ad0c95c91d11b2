#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace mdbell {

// Plain-typed (no expression templates) so arithmetic results are Rational
// values usable with auto, std::min, and initializer lists.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Accepts "3", "-3", "1/2", "-7/8", and decimal forms "0.25", "-1.5".
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] {
        throw Error("not a rational number: '" + std::string(text) + "'");
    };
    if (text.empty()) fail();
    bool negative = false;
    size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    if (i == text.size()) fail();
    BigInt num = 0, den = 1;
    bool any_digit = false;
    for (; i < text.size() && text[i] >= '0' && text[i] <= '9'; ++i) {
        num = num * 10 + (text[i] - '0');
        any_digit = true;
    }
    if (i < text.size()) {
        if (text[i] == '/') {
            ++i;
            if (!any_digit || i == text.size()) fail();
            den = 0;
            for (; i < text.size(); ++i) {
                if (text[i] < '0' || text[i] > '9') fail();
                den = den * 10 + (text[i] - '0');
            }
            if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
        } else if (text[i] == '.') {
            ++i;
            bool frac_digit = false;
            for (; i < text.size(); ++i) {
                if (text[i] < '0' || text[i] > '9') fail();
                num = num * 10 + (text[i] - '0');
                den *= 10;
                frac_digit = true;
            }
            if (!any_digit && !frac_digit) fail();
        } else {
            fail();
        }
    } else if (!any_digit) {
        fail();
    }
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

// "0", "-3", "1/2"; integers carry no denominator.
inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline double to_double(const Rational& r) {
    return r.convert_to<double>();
}

} // namespace mdbell
