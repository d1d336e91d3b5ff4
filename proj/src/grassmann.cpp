#include "superber/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "superber/errors.hpp"

namespace superber {

GrassmannElement::GrassmannElement(int num_generators) : num_generators_(num_generators) {
    if (num_generators < 0 || num_generators > kMaxGenerators)
        throw MismatchError("num_generators out of range");
}

GrassmannElement GrassmannElement::scalar(int num_generators, const Rational& c) {
    GrassmannElement a(num_generators);
    if (c != 0)
        a.terms_[0] = c;
    return a;
}

GrassmannElement GrassmannElement::generator(int num_generators, int i) {
    if (i < 1 || i > num_generators)
        throw MismatchError("generator index out of range");
    GrassmannElement a(num_generators);
    a.terms_[std::uint64_t(1) << (i - 1)] = 1;
    return a;
}

GrassmannElement GrassmannElement::monomial(int num_generators, const std::vector<int>& gens,
                                            const Rational& c) {
    return from_mask(num_generators, mask_from_indices(gens, num_generators), c);
}

GrassmannElement GrassmannElement::from_mask(int num_generators, std::uint64_t mask,
                                             const Rational& c) {
    GrassmannElement a(num_generators);
    if (num_generators < 64 && (mask >> num_generators) != 0)
        throw MismatchError("monomial uses a generator beyond num_generators");
    if (c != 0)
        a.terms_[mask] = c;
    return a;
}

bool GrassmannElement::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool GrassmannElement::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
}

Rational GrassmannElement::body() const {
    auto it = terms_.find(0);
    return it == terms_.end() ? Rational(0) : it->second;
}

GrassmannElement GrassmannElement::soul() const {
    GrassmannElement a = *this;
    a.terms_.erase(0);
    return a;
}

Parity GrassmannElement::parity() const {
    if (terms_.empty())
        return Parity::Even;
    int p = std::popcount(terms_.begin()->first) & 1;
    for (const auto& [mask, c] : terms_)
        if ((std::popcount(mask) & 1) != p)
            throw ParityError("inhomogeneous element has no parity");
    return Parity(p);
}

bool GrassmannElement::is_homogeneous() const {
    if (terms_.empty())
        return true;
    int p = std::popcount(terms_.begin()->first) & 1;
    for (const auto& [mask, c] : terms_)
        if ((std::popcount(mask) & 1) != p)
            return false;
    return true;
}

bool GrassmannElement::is_even_or_zero() const {
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) & 1)
            return false;
    return true;
}

bool GrassmannElement::is_odd_or_zero() const {
    for (const auto& [mask, c] : terms_)
        if (!(std::popcount(mask) & 1))
            return false;
    return true;
}

GrassmannElement GrassmannElement::even_part() const {
    GrassmannElement a(num_generators_);
    for (const auto& [mask, c] : terms_)
        if (!(std::popcount(mask) & 1))
            a.terms_[mask] = c;
    return a;
}

GrassmannElement GrassmannElement::odd_part() const {
    GrassmannElement a(num_generators_);
    for (const auto& [mask, c] : terms_)
        if (std::popcount(mask) & 1)
            a.terms_[mask] = c;
    return a;
}

GrassmannElement GrassmannElement::twisted(Parity p) const {
    if (p == Parity::Even)
        return *this;
    GrassmannElement a(num_generators_);
    for (const auto& [mask, c] : terms_)
        a.terms_[mask] = (std::popcount(mask) & 1) ? -c : c;
    return a;
}

GrassmannElement GrassmannElement::operator-() const {
    GrassmannElement a(num_generators_);
    for (const auto& [mask, c] : terms_)
        a.terms_[mask] = -c;
    return a;
}

void GrassmannElement::add_term(std::uint64_t mask, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(mask, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

void GrassmannElement::check_same_algebra(const GrassmannElement& o) const {
    if (num_generators_ != o.num_generators_)
        throw MismatchError("generator-count mismatch");
}

GrassmannElement GrassmannElement::operator+(const GrassmannElement& o) const {
    check_same_algebra(o);
    GrassmannElement a = *this;
    for (const auto& [mask, c] : o.terms_)
        a.add_term(mask, c);
    return a;
}

GrassmannElement GrassmannElement::operator-(const GrassmannElement& o) const {
    check_same_algebra(o);
    GrassmannElement a = *this;
    for (const auto& [mask, c] : o.terms_)
        a.add_term(mask, -c);
    return a;
}

GrassmannElement& GrassmannElement::operator+=(const GrassmannElement& o) {
    check_same_algebra(o);
    for (const auto& [mask, c] : o.terms_)
        add_term(mask, c);
    return *this;
}

GrassmannElement& GrassmannElement::operator-=(const GrassmannElement& o) {
    check_same_algebra(o);
    for (const auto& [mask, c] : o.terms_)
        add_term(mask, -c);
    return *this;
}

int merge_sign(std::uint64_t a, std::uint64_t b) {
    /* Each generator of b passes every generator of a with a larger index. */
    int swaps = 0;
    for (std::uint64_t rest = b; rest;) {
        int j = std::countr_zero(rest);
        rest &= rest - 1;
        swaps += std::popcount(a & ~((std::uint64_t(2) << j) - 1));
    }
    return (swaps & 1) ? -1 : 1;
}

GrassmannElement GrassmannElement::operator*(const GrassmannElement& o) const {
    check_same_algebra(o);
    GrassmannElement a(num_generators_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            if (ma & mb)
                continue; // repeated generator
            Rational c = ca * cb;
            if (merge_sign(ma, mb) < 0)
                c = -c;
            a.add_term(ma | mb, c);
        }
    }
    return a;
}

GrassmannElement GrassmannElement::operator*(const Rational& c) const {
    GrassmannElement a(num_generators_);
    if (c == 0)
        return a;
    for (const auto& [mask, t] : terms_)
        a.terms_[mask] = t * c;
    return a;
}

GrassmannElement& GrassmannElement::operator*=(const Rational& c) {
    *this = *this * c;
    return *this;
}

GrassmannElement GrassmannElement::inverse() const {
    Rational b = body();
    if (b == 0)
        throw NonInvertibleError("zero body");
    /* 1/(b + s) = (1/b) * sum_k (-s/b)^k; s is nilpotent so the series
       breaks off once the power vanishes. */
    GrassmannElement step = soul() * Rational(-1 / b);
    GrassmannElement acc = one(num_generators_);
    GrassmannElement power = acc;
    while (true) {
        power = power * step;
        if (power.is_zero())
            break;
        acc += power;
    }
    return acc * Rational(1 / b);
}

GrassmannElement GrassmannElement::pow(unsigned k) const {
    GrassmannElement r = one(num_generators_);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

std::uint64_t mask_from_indices(const std::vector<int>& gens, int num_generators) {
    std::uint64_t mask = 0;
    int prev = 0;
    for (int g : gens) {
        if (g <= prev)
            throw MismatchError("monomial indices must be strictly increasing");
        if (g < 1 || g > num_generators)
            throw MismatchError("generator index out of range");
        mask |= std::uint64_t(1) << (g - 1);
        prev = g;
    }
    return mask;
}

std::vector<int> indices_from_mask(std::uint64_t mask) {
    std::vector<int> v;
    while (mask) {
        int j = std::countr_zero(mask);
        v.push_back(j + 1);
        mask &= mask - 1;
    }
    return v;
}

bool monomial_less(std::uint64_t a, std::uint64_t b) {
    int la = std::popcount(a), lb = std::popcount(b);
    if (la != lb)
        return la < lb;
    /* Same length: lexicographic on the increasing index sequences.
       The first differing generator decides; it is the lowest set bit
       of the symmetric difference. */
    std::uint64_t diff = a ^ b;
    if (!diff)
        return false;
    std::uint64_t lowest = diff & (~diff + 1);
    return (a & lowest) != 0;
}

std::string GrassmannElement::to_text() const {
    if (terms_.empty())
        return "0";
    std::vector<std::uint64_t> order;
    order.reserve(terms_.size());
    for (const auto& [mask, c] : terms_)
        order.push_back(mask);
    std::sort(order.begin(), order.end(), monomial_less);

    std::ostringstream out;
    bool first = true;
    for (std::uint64_t mask : order) {
        const Rational& c = terms_.at(mask);
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (mask == 0) {
            out << rational_to_string(abs);
        } else {
            out << rational_to_string(abs) << "*";
            for (int g : indices_from_mask(mask))
                out << "g" << g;
        }
    }
    return out.str();
}

namespace {

/* One term of the text form: "coef*g<i>g<j>..." or a bare coefficient. */
GrassmannElement parse_term(int num_generators, const std::string& term) {
    auto star = term.find('*');
    std::string coef_part = star == std::string::npos ? term : term.substr(0, star);
    Rational c = rational_from_string(coef_part);
    std::vector<int> gens;
    if (star != std::string::npos) {
        const std::string rest = term.substr(star + 1);
        std::size_t i = 0;
        while (i < rest.size()) {
            if (rest[i] != 'g')
                throw ParseError("expected generator in term: " + term);
            ++i;
            std::size_t j = i;
            while (j < rest.size() && std::isdigit(static_cast<unsigned char>(rest[j])))
                ++j;
            if (j == i)
                throw ParseError("missing generator index in term: " + term);
            gens.push_back(std::stoi(rest.substr(i, j - i)));
            i = j;
        }
        if (gens.empty())
            throw ParseError("empty monomial in term: " + term);
    }
    return GrassmannElement::monomial(num_generators, gens, c);
}

} // namespace

GrassmannElement grassmann_from_text(int num_generators, const std::string& text) {
    GrassmannElement a(num_generators);
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch)))
            s += ch;
    if (s.empty())
        throw ParseError("empty grassmann literal");
    if (s == "0")
        return a;
    std::size_t i = 0;
    int sign = 1;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        i = 1;
    }
    std::size_t start = i;
    for (; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == '+' || s[i] == '-') {
            if (i == start)
                throw ParseError("bad grassmann literal: " + text);
            GrassmannElement term = parse_term(num_generators, s.substr(start, i - start));
            a += sign < 0 ? -term : term;
            if (i < s.size())
                sign = s[i] == '-' ? -1 : 1;
            start = i + 1;
        }
    }
    return a;
}

} // namespace superber
