#include "dk/rational.hpp"

#include <cctype>

namespace dk {

namespace {

bool plain_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!plain_integer(text)) throw Error("not a rational: '" + text + "'");
        return Rational(mpz_class(text));
    }
    std::string num = text.substr(0, slash);
    std::string den = text.substr(slash + 1);
    if (!plain_integer(num) || !plain_integer(den))
        throw Error("not a rational: '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw Error("zero denominator: '" + text + "'");
    Rational r(mpz_class(num), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace dk
