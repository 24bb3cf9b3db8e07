#include "fvst/rational.hpp"

#include <cctype>

#include "fvst/error.hpp"

namespace fvst {

Rational rational(long num, long den) {
    if (den == 0) raise(ErrorKind::validation, "rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto bad = [&]() -> Rational {
        raise(ErrorKind::parse, "malformed rational '" + s + "'");
    };

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!valid_integer(num) || !valid_integer(den)) return bad();
        Rational r(mpz_class(num), mpz_class(den));
        if (r.get_den() == 0) return bad();
        r.canonicalize();
        return r;
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
        std::string whole = s.substr(0, dot), frac = s.substr(dot + 1);
        if (whole.empty() || whole == "+" || whole == "-") whole += "0";
        if (!valid_integer(whole) || frac.empty() || !valid_integer(frac) ||
            frac[0] == '+' || frac[0] == '-')
            return bad();
        mpz_class scale = 1;
        for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
        mpz_class whole_z(whole), frac_z(frac);
        bool neg = whole[0] == '-';
        mpz_class num = whole_z * scale + (neg ? -frac_z : frac_z);
        Rational r(num, scale);
        r.canonicalize();
        return r;
    }
    if (!valid_integer(s)) return bad();
    return Rational(mpz_class(s));
}

std::string rational_str(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace fvst
