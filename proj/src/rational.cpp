#include "superber/rational.hpp"

#include <cctype>

namespace superber {

std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1)
        s += "/" + denominator(q).str();
    return s;
}

Rational rational_from_string(const std::string& s) {
    if (s.empty())
        throw ParseError("empty rational literal");
    std::size_t i = 0;
    if (s[i] == '+' || s[i] == '-')
        ++i;
    bool digits = false, slash = false;
    for (; i < s.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits = true;
        } else if (s[i] == '/' && digits && !slash && i + 1 < s.size()) {
            slash = true;
            digits = false;
        } else {
            throw ParseError("bad rational literal: " + s);
        }
    }
    if (!digits)
        throw ParseError("bad rational literal: " + s);
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

} // namespace superber
