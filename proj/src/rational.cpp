#include "fairagg/rational.hpp"

#include <cctype>

namespace fairagg {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

} // namespace

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw invalid_input("empty rational literal");

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const std::string p = text.substr(0, slash);
        const std::string q = text.substr(slash + 1);
        if (!is_integer_token(p) || !is_integer_token(q))
            throw invalid_input("bad rational literal: " + text);
        const BigInt den(q);
        if (den == 0) throw invalid_input("zero denominator: " + text);
        return Rational(BigInt(p), den);
    }

    const auto dot = text.find('.');
    if (dot != std::string::npos) {
        const std::string whole = text.substr(0, dot);
        const std::string frac = text.substr(dot + 1);
        const bool neg = !whole.empty() && whole[0] == '-';
        const std::string digits = (neg || (!whole.empty() && whole[0] == '+'))
                                       ? whole.substr(1)
                                       : whole;
        if ((!digits.empty() && !is_integer_token(digits)) ||
            (frac.empty() ? digits.empty() : !is_integer_token(frac)))
            throw invalid_input("bad decimal literal: " + text);
        BigInt num = digits.empty() ? BigInt(0) : BigInt(digits);
        BigInt den = 1;
        for (char c : frac) {
            num = num * 10 + (c - '0');
            den *= 10;
        }
        Rational r(num, den);
        return neg ? -r : r;
    }

    if (!is_integer_token(text)) throw invalid_input("bad rational literal: " + text);
    return Rational(BigInt(text));
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += "/";
        s += denominator(r).str();
    }
    return s;
}

} // namespace fairagg
