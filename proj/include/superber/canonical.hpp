#pragma once

#include <vector>

#include "superber/supertensor.hpp"

namespace superber {

enum class TensorKind { G, H };

/* One of the 2^(m*n) canonical fillings of the small rectangle together
   with everything derived from it: the filling words of the two
   rectangular shapes, the symmetrized basis tensors, and the counting
   statistics that normalize them.

   choice is the m x n grid read row-major: 1 puts the column's odd
   vector in that box, 0 the row's even vector. index is the grid read
   as a binary number, ascending. */
struct CanonicalPair {
    int m = 0, n = 0, gens = 0;
    int index = 0;
    std::vector<std::uint8_t> choice;

    Word h_word, g_word;

    Int kappa_h = 1, kappa_g = 1; // products of per-column odd factorials
    int rho = 0;                  // odd boxes inside the small rectangle
    Rational alpha = 1;           // (-1)^(n rho) kappa_h / kappa_g
    Int aut_h = 1, aut_g = 1;     // stabilizer orders of the filled tableaux
    int odd_h = 0, odd_g = 0;     // total odd letters in each tableau
    Rational zeta = 0, zeta_prime = 0; // closed-form diagonal pairing values

    SuperTensor h, g, h_prime;
};

/* All canonical pairs for the given dimensions in index order. */
std::vector<CanonicalPair> enumerate_canonical(int m, int n, int num_generators);

/* Symmetrized covariant basis tensors; these are what enumerate_canonical
   stores in h and g. */
SuperTensor build_h(const CanonicalPair& p);
SuperTensor build_g(const CanonicalPair& p);

/* The contravariant partner: the same filling word with starred letters,
   symmetrized from the right. */
SuperTensor dualize(const CanonicalPair& p, TensorKind kind);

/* Dual tensors normalized against the basis: (g*', g_j) = delta_ij and
   (h*', h'_j) = delta_ij. */
SuperTensor star_prime(const CanonicalPair& p, TensorKind kind);

} // namespace superber
