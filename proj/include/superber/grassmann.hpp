#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "superber/rational.hpp"

namespace superber {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return Parity((int(a) + int(b)) % 2);
}

/* Element of the Grassmann algebra over the rationals on num_generators
   anticommuting generators g1,...,gN (N <= 64).

   Terms map a monomial bitmask (bit i-1 set <=> generator gi present)
   to a nonzero rational coefficient; the zero mask is the unit.
   Values are immutable in spirit: every operation returns a fresh
   element and drops zero coefficients, so equal elements always have
   equal term maps. */
class GrassmannElement {
public:
    static constexpr int kMaxGenerators = 64;

    explicit GrassmannElement(int num_generators = 0);

    static GrassmannElement scalar(int num_generators, const Rational& c);
    static GrassmannElement one(int num_generators) { return scalar(num_generators, 1); }
    /* Single generator gi, 1-based. */
    static GrassmannElement generator(int num_generators, int i);
    /* Monomial c * gi1 gi2 ... with strictly increasing 1-based indices. */
    static GrassmannElement monomial(int num_generators, const std::vector<int>& gens,
                                     const Rational& c);
    static GrassmannElement from_mask(int num_generators, std::uint64_t mask, const Rational& c);

    int num_generators() const { return num_generators_; }
    bool is_zero() const { return terms_.empty(); }
    /* True when the element is a plain rational (only the unit monomial). */
    bool is_rational() const;
    bool is_one() const;

    /* Coefficient of the unit monomial. */
    Rational body() const;
    /* The nilpotent remainder a - body(a). */
    GrassmannElement soul() const;

    /* Throws ParityError on a mixed-grade element; zero counts as even. */
    Parity parity() const;
    bool is_homogeneous() const;
    bool is_even_or_zero() const;
    bool is_odd_or_zero() const;

    GrassmannElement even_part() const;
    GrassmannElement odd_part() const;
    /* Negates the odd part when p is odd: the Koszul factor picked up by
       moving this coefficient past a homogeneous vector of parity p. */
    GrassmannElement twisted(Parity p) const;

    GrassmannElement operator-() const;
    GrassmannElement operator+(const GrassmannElement& o) const;
    GrassmannElement operator-(const GrassmannElement& o) const;
    GrassmannElement operator*(const GrassmannElement& o) const;
    GrassmannElement operator*(const Rational& c) const;
    GrassmannElement& operator+=(const GrassmannElement& o);
    GrassmannElement& operator-=(const GrassmannElement& o);
    GrassmannElement& operator*=(const Rational& c);

    /* Multiplicative inverse via the terminating Neumann series
       body^-1 * sum_k (-soul/body)^k; throws NonInvertibleError when the
       body vanishes. */
    GrassmannElement inverse() const;

    GrassmannElement pow(unsigned k) const;

    /* Equality compares term maps only; num_generators is a capacity. */
    bool operator==(const GrassmannElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const GrassmannElement& o) const { return !(*this == o); }

    const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

    /* Canonical text form: terms sorted by monomial length then
       lexicographically, e.g. "1 - 1*g1g2"; zero prints as "0". */
    std::string to_text() const;

    std::size_t term_count() const { return terms_.size(); }

private:
    void add_term(std::uint64_t mask, const Rational& c);
    void check_same_algebra(const GrassmannElement& o) const;

    int num_generators_;
    std::map<std::uint64_t, Rational> terms_;
};

inline GrassmannElement operator*(const Rational& c, const GrassmannElement& a) { return a * c; }

/* Sign of sorting the concatenation of two disjoint monomials:
   (-1)^(number of generator pairs out of order). */
int merge_sign(std::uint64_t a, std::uint64_t b);

std::uint64_t mask_from_indices(const std::vector<int>& gens, int num_generators);
std::vector<int> indices_from_mask(std::uint64_t mask);

/* Orders monomials by length, then lexicographically on the index
   sequence; the serialization order used everywhere downstream. */
bool monomial_less(std::uint64_t a, std::uint64_t b);

GrassmannElement grassmann_from_text(int num_generators, const std::string& text);

} // namespace superber
