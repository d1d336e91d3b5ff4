#pragma once

#include <string>
#include <vector>

#include "superber/canonical.hpp"
#include "superber/supermatrix.hpp"
#include "superber/supertensor.hpp"

namespace superber {

enum class BasisKind { HPrime, G };

/* Matrix of the induced action on a canonical module: column j holds
   the coefficients of A(basis_j) in the basis, coefficients to the
   right of the basis vectors. */
class RepMatrix {
public:
    RepMatrix(BasisKind kind, int k, int num_generators);

    BasisKind kind() const { return kind_; }
    int size() const { return k_; }

    GrassmannElement& at(int i, int j) { return a_[std::size_t(i) * k_ + j]; }
    const GrassmannElement& at(int i, int j) const { return a_[std::size_t(i) * k_ + j]; }

    RepMatrix operator*(const RepMatrix& o) const;
    bool operator==(const RepMatrix& o) const;

    /* Every entry scaled from the left; entries commute with the even
       Berezinian, so this matches scaling either side. */
    RepMatrix scaled(const GrassmannElement& s) const;

    bool is_identity() const;

private:
    BasisKind kind_;
    int k_;
    int gens_;
    std::vector<GrassmannElement> a_;
};

/* Coefficients of the action of a on the chosen canonical basis. */
RepMatrix rep_matrix(const SuperMatrix& a, BasisKind kind,
                     const std::vector<CanonicalPair>& pairs);

struct CheckReport {
    std::string check;
    int m = 0, n = 0;
    bool pass = true;
    GrassmannElement berezinian;
    std::vector<std::string> failures;
};

/* Exact entrywise test of A_h' = Ber A * A_g for one matrix. */
CheckReport verify_character_identity(const SuperMatrix& a,
                                      const std::vector<CanonicalPair>& pairs);

/* Mixed tensor generating a one-dimensional module; its body carries
   the realized parity of the formal character element. */
struct BerezinTensor {
    int m = 0, n = 0;
    SuperTensor body;
    Parity realized_parity = Parity::Even;
};

/* sum_i h'_i (x) g*'_i: scales by the Berezinian under the group action. */
BerezinTensor build_btilde(int m, int n, int num_generators);

/* sum_i g_i (x) h*'_i: scales by the inverse Berezinian. */
BerezinTensor build_btilde_star(int m, int n, int num_generators);

/* sum_i g_i (x) g*'_i (kind G) or sum_i h'_i (x) h*'_i (kind H):
   fixed pointwise by every invertible matrix. */
SuperTensor build_invariant(int m, int n, int num_generators, TensorKind kind);

/* Positionwise contraction of the two character tensors; a rational
   invariant of the pair (it equals the number of canonical fillings). */
Rational contract_characters(const BerezinTensor& bt, const BerezinTensor& bt_star);

} // namespace superber
