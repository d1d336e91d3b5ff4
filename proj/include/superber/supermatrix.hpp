#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "superber/grassmann.hpp"

namespace superber {

/* Plain rectangular matrix over the Grassmann algebra, used for blocks
   and intermediate products. Row-major. */
class GMatrix {
public:
    GMatrix() : rows_(0), cols_(0) {}
    GMatrix(int rows, int cols, int num_generators);

    static GMatrix identity(int n, int num_generators);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int num_generators() const { return gens_; }

    GrassmannElement& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }
    const GrassmannElement& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }

    GMatrix operator*(const GMatrix& o) const;
    GMatrix operator+(const GMatrix& o) const;
    GMatrix operator-(const GMatrix& o) const;
    GMatrix operator-() const;
    bool operator==(const GMatrix& o) const;

    bool all_even_or_zero() const;
    bool all_odd_or_zero() const;

private:
    int rows_, cols_, gens_ = 0;
    std::vector<GrassmannElement> e_;
};

/* Leibniz determinant over the commutative even part; requires a square
   grid of even-or-zero entries. Division-free (minor expansion). */
GrassmannElement g0_det(const GMatrix& M);

/* Adjugate over determinant; throws NonInvertibleError when the
   determinant body vanishes. */
GMatrix g0_inverse(const GMatrix& M);

enum class BerFormula { First, Second, Checked };
enum class LduOrder { LowerFirst, UpperFirst };

/* Member of the full matrix superalgebra: even diagonal blocks of sizes
   m and n, odd off-diagonal blocks. Constructed only through validating
   factories, so a SuperMatrix always satisfies the block parity law. */
class SuperMatrix {
public:
    SuperMatrix(int m, int n, GMatrix entries);

    static SuperMatrix identity(int m, int n, int num_generators);

    int m() const { return m_; }
    int n() const { return n_; }
    int dim() const { return m_ + n_; }
    int num_generators() const { return a_.num_generators(); }

    const GrassmannElement& entry(int i, int j) const { return a_.at(i, j); }
    const GMatrix& grid() const { return a_; }

    GMatrix block11() const; // m x m, even
    GMatrix block12() const; // m x n, odd
    GMatrix block21() const; // n x m, odd
    GMatrix block22() const; // n x n, even

    SuperMatrix operator*(const SuperMatrix& o) const;
    bool operator==(const SuperMatrix& o) const;

    /* The superdeterminant. Checked mode evaluates both block formulas
       and insists they agree. */
    GrassmannElement berezinian(BerFormula f = BerFormula::Checked) const;

    /* Triangular factorization A = F0 * F1 * F2 with the diagonal factor
       in the middle; LowerFirst puts the lower-unitriangular factor
       first, UpperFirst the upper one. */
    std::array<SuperMatrix, 3> ldu(LduOrder order) const;

    /* Assembled from the triangular factors, so it exists exactly when
       both diagonal blocks are invertible. */
    SuperMatrix inverse() const;

private:
    int m_, n_;
    GMatrix a_;
};

enum class GenClass { OddLower, OddUpper, Diag, EvenUpperLeft, EvenLowerRight };

/* Elementary generator of the supergroup: identity plus a single entry
   at (i, j) (global 1-based indices). Index ranges and the parity of the
   parameter are enforced per class. */
SuperMatrix gen_matrix(GenClass cls, int m, int n, int i, int j, const GrassmannElement& param);

/* Invertible diagonal matrix diag(x_1..x_m, y_1..y_n); all parameters
   even with nonzero body. */
SuperMatrix gen_matrix_diag(int m, int n, const std::vector<GrassmannElement>& diag);

/* Deterministic seeded member of the invertible supermatrices: diagonal
   bodies drawn nonzero, off-diagonal entries pure soul, at most
   soul_terms soul monomials of degree <= 2 per entry. */
SuperMatrix random_invertible(int m, int n, int num_generators, std::uint64_t seed,
                              int soul_terms = 2);

} // namespace superber
