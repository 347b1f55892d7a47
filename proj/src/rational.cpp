#include "conifold/rational.hpp"

#include <cctype>

namespace conifold {

namespace {

bool looks_like_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// mpz_class(string) rejects a leading '+'
std::string strip_plus(const std::string& s) { return s.size() > 1 && s[0] == '+' ? s.substr(1) : s; }

}  // namespace

Rational rational(long p, long q) {
    if (q == 0) throw std::invalid_argument("rational: zero denominator");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!looks_like_integer(text))
            throw std::invalid_argument("parse_rational: malformed value '" + text + "'");
        return Rational(Integer(strip_plus(text)));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!looks_like_integer(num) || !looks_like_integer(den))
        throw std::invalid_argument("parse_rational: malformed value '" + text + "'");
    Integer d(strip_plus(den));
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    Rational r(Integer(strip_plus(num)), d);
    r.canonicalize();
    return r;
}

Integer parse_integer(const std::string& text) {
    if (!looks_like_integer(text))
        throw std::invalid_argument("parse_integer: malformed value '" + text + "'");
    return Integer(strip_plus(text));
}

std::string to_string(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

}  // namespace conifold
