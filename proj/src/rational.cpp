#include "ucp/rational.hpp"

#include <cctype>

namespace ucp {

namespace {

bool is_integer_token(const std::string& s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t i = start; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!is_integer_token(text)) {
            throw ParseError("bad rational literal: '" + text + "'");
        }
        return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_integer_token(num) || !is_integer_token(den)) {
        throw ParseError("bad rational literal: '" + text + "'");
    }
    BigInt d(den);
    if (d == 0) {
        throw ParseError("zero denominator in rational literal: '" + text + "'");
    }
    return Rational(BigInt(num), d);
}

std::string format_rational(const Rational& q) {
    const BigInt num = numerator(q);
    const BigInt den = denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& q) {
    return q.convert_to<double>();
}

}  // namespace ucp
