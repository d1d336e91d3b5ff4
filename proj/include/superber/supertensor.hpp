#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "superber/grassmann.hpp"
#include "superber/supermatrix.hpp"
#include "superber/tableau.hpp"

namespace superber {

/* Variance layout of a tensor factor space: cov copies of V followed by
   contra copies of V*. Basis letters run 1..m+n; letters above m are
   odd in either block. */
struct Signature {
    int m = 0, n = 0;
    int cov = 0, contra = 0;

    int length() const { return cov + contra; }
    int letters() const { return m + n; }
    bool position_contravariant(int k) const { return k >= cov; }
    Parity letter_parity(int letter) const {
        return letter > m ? Parity::Odd : Parity::Even;
    }
    std::string variance() const {
        return std::string(std::size_t(cov), 'c') + std::string(std::size_t(contra), 'u');
    }
    bool operator==(const Signature& o) const {
        return m == o.m && n == o.n && cov == o.cov && contra == o.contra;
    }
};

Signature covariant_signature(int m, int n, int l);
Signature contravariant_signature(int m, int n, int l);

using Word = std::vector<std::uint8_t>;

/* Sparse tensor in right-normal form: a finite sum of basis words, each
   with its Grassmann coefficient standing to the right of the word.
   Coefficients are never zero and words always match the signature. */
class SuperTensor {
public:
    SuperTensor() = default;
    SuperTensor(Signature sig, int num_generators);

    /* Single decomposable basis word with coefficient c. */
    static SuperTensor basis_word(Signature sig, int num_generators, Word w,
                                  GrassmannElement c);
    static SuperTensor basis_word(Signature sig, int num_generators, Word w,
                                  const Rational& c = 1);

    const Signature& signature() const { return sig_; }
    int num_generators() const { return gens_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Word, GrassmannElement>& terms() const { return terms_; }

    /* True when every coefficient is a plain rational. */
    bool is_rational() const;

    void add_term(const Word& w, const GrassmannElement& c);

    SuperTensor operator+(const SuperTensor& o) const;
    SuperTensor operator-(const SuperTensor& o) const;
    SuperTensor operator-() const;
    SuperTensor operator*(const Rational& c) const;
    SuperTensor& operator+=(const SuperTensor& o);

    /* s * t with the scalar on the left: odd monomials of s pick up a
       sign against each odd word letter they cross. */
    SuperTensor scalar_mul_left(const GrassmannElement& s) const;
    /* t * s with the scalar on the right of every coefficient. */
    SuperTensor scalar_mul_right(const GrassmannElement& s) const;

    /* Number of odd letters in w, mod 2. */
    Parity word_parity(const Word& w) const;

    bool operator==(const SuperTensor& o) const {
        return sig_ == o.sig_ && terms_ == o.terms_;
    }
    bool operator!=(const SuperTensor& o) const { return !(*this == o); }

    std::string to_text() const;

private:
    void check_word(const Word& w) const;

    Signature sig_;
    int gens_ = 0;
    std::map<Word, GrassmannElement> terms_;
};

/* Left action of S_l on fully covariant tensors: position i of the
   result receives letter sigma^-1(i), with a sign for every pair of odd
   letters whose order flips. */
SuperTensor perm_action(const Permutation& sigma, const SuperTensor& t);

/* Right action on fully contravariant tensors: position i receives
   letter sigma(i), same sign rule. */
SuperTensor right_perm_action(const SuperTensor& t, const Permutation& sigma);

/* Applies a group-algebra element on the side matching the variance:
   left on covariant tensors, right on contravariant ones. */
SuperTensor apply_symmetrizer(const SymmetrizerElement& e, const SuperTensor& t);

/* Factorwise action of an invertible supermatrix: covariant letters
   transform by the columns of A, contravariant ones by the rows of
   A^-1; all produced coefficients are commuted to the right of the word
   with Koszul signs. The inverse is only computed when contravariant
   positions exist. */
SuperTensor gl_action(const SuperMatrix& a, const SuperTensor& t);

/* Duality pairing of a contravariant tensor against a covariant one of
   the same length: basis letters pair by Kronecker delta, with the sign
   counting interleaved odd pairs. */
GrassmannElement pairing(const SuperTensor& u, const SuperTensor& w);

/* Coefficients c_i with t = sum_i basis_i * c_i (coefficients on the
   right). Requires rational basis coefficients; solves one exact
   rational system per Grassmann monomial of t. Throws
   DependentBasisError or SpanViolationError. */
std::vector<GrassmannElement> express_in_basis(const SuperTensor& t,
                                               std::span<const SuperTensor> basis);

/* Word concatenation of a covariant and a contravariant tensor; the
   left coefficient crosses the right word with Koszul signs. */
SuperTensor tensor_concat(const SuperTensor& cov, const SuperTensor& contra);

} // namespace superber
