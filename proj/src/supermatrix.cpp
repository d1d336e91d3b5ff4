#include "superber/supermatrix.hpp"

#include <random>

#include "superber/errors.hpp"

namespace superber {

GMatrix::GMatrix(int rows, int cols, int num_generators)
    : rows_(rows), cols_(cols), gens_(num_generators),
      e_(std::size_t(rows) * cols, GrassmannElement(num_generators)) {
    if (rows < 0 || cols < 0)
        throw MismatchError("negative matrix dimension");
}

GMatrix GMatrix::identity(int n, int num_generators) {
    GMatrix I(n, n, num_generators);
    for (int i = 0; i < n; ++i)
        I.at(i, i) = GrassmannElement::one(num_generators);
    return I;
}

GMatrix GMatrix::operator*(const GMatrix& o) const {
    if (cols_ != o.rows_ || gens_ != o.gens_)
        throw MismatchError("shape mismatch in matrix product");
    GMatrix r(rows_, o.cols_, gens_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const GrassmannElement& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero())
                    continue;
                r.at(i, j) += aik * o.at(k, j);
            }
        }
    return r;
}

GMatrix GMatrix::operator+(const GMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || gens_ != o.gens_)
        throw MismatchError("shape mismatch in matrix sum");
    GMatrix r = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.at(i, j) += o.at(i, j);
    return r;
}

GMatrix GMatrix::operator-(const GMatrix& o) const { return *this + (-o); }

GMatrix GMatrix::operator-() const {
    GMatrix r = *this;
    for (auto& x : r.e_)
        x = -x;
    return r;
}

bool GMatrix::operator==(const GMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

bool GMatrix::all_even_or_zero() const {
    for (const auto& x : e_)
        if (!x.is_even_or_zero())
            return false;
    return true;
}

bool GMatrix::all_odd_or_zero() const {
    for (const auto& x : e_)
        if (!x.is_odd_or_zero())
            return false;
    return true;
}

namespace {

GrassmannElement det_rec(const GMatrix& M, std::vector<int>& cols, int row) {
    const int n = M.rows();
    if (row == n)
        return GrassmannElement::one(M.num_generators());
    GrassmannElement acc(M.num_generators());
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); ++k) {
        int c = cols[k];
        if (!M.at(row, c).is_zero()) {
            cols.erase(cols.begin() + k);
            GrassmannElement sub = det_rec(M, cols, row + 1);
            cols.insert(cols.begin() + k, c);
            GrassmannElement term = M.at(row, c) * sub;
            acc += sign < 0 ? -term : term;
        }
        sign = -sign;
    }
    return acc;
}

} // namespace

GrassmannElement g0_det(const GMatrix& M) {
    if (M.rows() != M.cols())
        throw MismatchError("determinant of a non-square matrix");
    if (!M.all_even_or_zero())
        throw ParityError("determinant requires even entries");
    std::vector<int> cols(M.cols());
    for (int j = 0; j < M.cols(); ++j)
        cols[j] = j;
    return det_rec(M, cols, 0);
}

GMatrix g0_inverse(const GMatrix& M) {
    if (M.rows() != M.cols())
        throw MismatchError("inverse of a non-square matrix");
    if (!M.all_even_or_zero())
        throw ParityError("inverse requires even entries");
    const int n = M.rows();
    GrassmannElement det = g0_det(M);
    GrassmannElement det_inv = det.inverse(); // throws NonInvertibleError on zero body
    GMatrix adj(n, n, M.num_generators());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            GMatrix minor(n - 1, n - 1, M.num_generators());
            for (int r = 0, rr = 0; r < n; ++r) {
                if (r == j)
                    continue;
                for (int c = 0, cc = 0; c < n; ++c) {
                    if (c == i)
                        continue;
                    minor.at(rr, cc) = M.at(r, c);
                    ++cc;
                }
                ++rr;
            }
            GrassmannElement cof = g0_det(minor) * det_inv;
            adj.at(i, j) = ((i + j) & 1) ? -cof : cof;
        }
    }
    return adj;
}

SuperMatrix::SuperMatrix(int m, int n, GMatrix entries) : m_(m), n_(n), a_(std::move(entries)) {
    if (m < 0 || n < 0)
        throw MismatchError("negative dimension");
    if (a_.rows() != m + n || a_.cols() != m + n)
        throw MismatchError("entry grid does not match m+n");
    for (int i = 0; i < m + n; ++i)
        for (int j = 0; j < m + n; ++j) {
            bool diag_block = (i < m) == (j < m);
            const GrassmannElement& x = a_.at(i, j);
            if (diag_block ? !x.is_even_or_zero() : !x.is_odd_or_zero())
                throw ParityError("entry violates the block parity law");
        }
}

SuperMatrix SuperMatrix::identity(int m, int n, int num_generators) {
    return SuperMatrix(m, n, GMatrix::identity(m + n, num_generators));
}

namespace {

GMatrix take_block(const GMatrix& a, int r0, int c0, int rows, int cols) {
    GMatrix b(rows, cols, a.num_generators());
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            b.at(i, j) = a.at(r0 + i, c0 + j);
    return b;
}

GMatrix assemble(int m, int n, int gens, const GMatrix& b11, const GMatrix& b12,
                 const GMatrix& b21, const GMatrix& b22) {
    GMatrix a(m + n, m + n, gens);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            a.at(i, j) = b11.at(i, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            a.at(i, m + j) = b12.at(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j)
            a.at(m + i, j) = b21.at(i, j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a.at(m + i, m + j) = b22.at(i, j);
    return a;
}

} // namespace

GMatrix SuperMatrix::block11() const { return take_block(a_, 0, 0, m_, m_); }
GMatrix SuperMatrix::block12() const { return take_block(a_, 0, m_, m_, n_); }
GMatrix SuperMatrix::block21() const { return take_block(a_, m_, 0, n_, m_); }
GMatrix SuperMatrix::block22() const { return take_block(a_, m_, m_, n_, n_); }

SuperMatrix SuperMatrix::operator*(const SuperMatrix& o) const {
    if (m_ != o.m_ || n_ != o.n_)
        throw MismatchError("supermatrix dimension mismatch");
    return SuperMatrix(m_, n_, a_ * o.a_);
}

bool SuperMatrix::operator==(const SuperMatrix& o) const {
    return m_ == o.m_ && n_ == o.n_ && a_ == o.a_;
}

GrassmannElement SuperMatrix::berezinian(BerFormula f) const {
    auto first = [&] {
        GMatrix a22 = block22();
        GMatrix schur = block11() - block12() * g0_inverse(a22) * block21();
        return g0_det(schur) * g0_det(a22).inverse();
    };
    auto second = [&] {
        GMatrix a11 = block11();
        GMatrix schur = block22() - block21() * g0_inverse(a11) * block12();
        return g0_det(a11) * g0_det(schur).inverse();
    };
    switch (f) {
    case BerFormula::First:
        return first();
    case BerFormula::Second:
        return second();
    case BerFormula::Checked: {
        GrassmannElement b1 = first();
        GrassmannElement b2 = second();
        if (b1 != b2)
            throw FormulaMismatchError("Berezinian block formulas disagree");
        return b1;
    }
    }
    throw Error("unreachable");
}

std::array<SuperMatrix, 3> SuperMatrix::ldu(LduOrder order) const {
    const int gens = num_generators();
    GMatrix im = GMatrix::identity(m_, gens);
    GMatrix in = GMatrix::identity(n_, gens);
    GMatrix zmn(m_, n_, gens), znm(n_, m_, gens);
    if (order == LduOrder::LowerFirst) {
        GMatrix a11 = block11();
        GMatrix a11inv = g0_inverse(a11);
        GMatrix b12 = a11inv * block12();
        GMatrix b21 = block21() * a11inv;
        GMatrix b22 = block22() - block21() * a11inv * block12();
        return {SuperMatrix(m_, n_, assemble(m_, n_, gens, im, zmn, b21, in)),
                SuperMatrix(m_, n_, assemble(m_, n_, gens, a11, zmn, znm, b22)),
                SuperMatrix(m_, n_, assemble(m_, n_, gens, im, b12, znm, in))};
    }
    GMatrix a22 = block22();
    GMatrix a22inv = g0_inverse(a22);
    GMatrix c12 = block12() * a22inv;
    GMatrix c21 = a22inv * block21();
    GMatrix c11 = block11() - block12() * a22inv * block21();
    return {SuperMatrix(m_, n_, assemble(m_, n_, gens, im, c12, znm, in)),
            SuperMatrix(m_, n_, assemble(m_, n_, gens, c11, zmn, znm, a22)),
            SuperMatrix(m_, n_, assemble(m_, n_, gens, im, zmn, c21, in))};
}

SuperMatrix SuperMatrix::inverse() const {
    /* A = L D U  =>  A^-1 = U^-1 D^-1 L^-1; unitriangular factors invert
       by negating the off-diagonal block. */
    auto [l, d, u] = ldu(LduOrder::LowerFirst);
    const int gens = num_generators();
    GMatrix im = GMatrix::identity(m_, gens);
    GMatrix in = GMatrix::identity(n_, gens);
    GMatrix zmn(m_, n_, gens), znm(n_, m_, gens);
    SuperMatrix linv(m_, n_, assemble(m_, n_, gens, im, zmn, -l.block21(), in));
    SuperMatrix uinv(m_, n_, assemble(m_, n_, gens, im, -u.block12(), znm, in));
    SuperMatrix dinv(m_, n_,
                     assemble(m_, n_, gens, g0_inverse(d.block11()), zmn, znm,
                              g0_inverse(d.block22())));
    return uinv * dinv * linv;
}

SuperMatrix gen_matrix(GenClass cls, int m, int n, int i, int j, const GrassmannElement& param) {
    const int gens = param.num_generators();
    bool odd_class = cls == GenClass::OddLower || cls == GenClass::OddUpper;
    if (odd_class ? !param.is_odd_or_zero() : !param.is_even_or_zero())
        throw ParityError("generator parameter has the wrong parity");
    bool range_ok = false;
    switch (cls) {
    case GenClass::OddLower:
        range_ok = i >= m + 1 && i <= m + n && j >= 1 && j <= m;
        break;
    case GenClass::OddUpper:
        range_ok = i >= 1 && i <= m && j >= m + 1 && j <= m + n;
        break;
    case GenClass::EvenUpperLeft:
        range_ok = i >= 1 && i <= m && j >= 1 && j <= m && i != j;
        break;
    case GenClass::EvenLowerRight:
        range_ok = i >= m + 1 && i <= m + n && j >= m + 1 && j <= m + n && i != j;
        break;
    case GenClass::Diag:
        throw MismatchError("use gen_matrix_diag for the diagonal class");
    }
    if (!range_ok)
        throw MismatchError("generator index out of range for its class");
    GMatrix a = GMatrix::identity(m + n, gens);
    a.at(i - 1, j - 1) += param;
    return SuperMatrix(m, n, a);
}

SuperMatrix gen_matrix_diag(int m, int n, const std::vector<GrassmannElement>& diag) {
    if (int(diag.size()) != m + n)
        throw MismatchError("diagonal length must be m+n");
    int gens = diag.empty() ? 0 : diag.front().num_generators();
    GMatrix a(m + n, m + n, gens);
    for (int i = 0; i < m + n; ++i) {
        if (!diag[i].is_even_or_zero())
            throw ParityError("diagonal entries must be even");
        if (diag[i].body() == 0)
            throw NonInvertibleError("diagonal entry with zero body");
        a.at(i, i) = diag[i];
    }
    return SuperMatrix(m, n, a);
}

namespace {

/* Soul monomial of the requested parity, degree 1 or 2. */
GrassmannElement random_soul_term(std::mt19937_64& rng, int gens, bool odd) {
    std::uniform_int_distribution<int> gen_pick(1, gens);
    std::uniform_int_distribution<int> coef_pick(-3, 3);
    int c = coef_pick(rng);
    if (c == 0)
        c = 1;
    if (odd || gens < 2)
        return GrassmannElement::generator(gens, gen_pick(rng)) * Rational(c);
    int a = gen_pick(rng), b = gen_pick(rng);
    while (b == a)
        b = gen_pick(rng);
    if (a > b)
        std::swap(a, b);
    return GrassmannElement::monomial(gens, {a, b}, Rational(c));
}

} // namespace

SuperMatrix random_invertible(int m, int n, int num_generators, std::uint64_t seed,
                              int soul_terms) {
    if (num_generators < 1)
        throw MismatchError("random_invertible needs at least one generator");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    std::uniform_int_distribution<int> body_pick(1, 3);
    std::uniform_int_distribution<int> sign_pick(0, 1);
    std::uniform_int_distribution<int> count_pick(0, soul_terms);
    const int d = m + n;
    GMatrix a(d, d, num_generators);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            bool diag_block = (i < m) == (j < m);
            GrassmannElement x(num_generators);
            if (i == j) {
                int b = body_pick(rng);
                x += GrassmannElement::scalar(num_generators, sign_pick(rng) ? b : -b);
            }
            int terms = count_pick(rng);
            for (int t = 0; t < terms; ++t)
                x += random_soul_term(rng, num_generators, !diag_block);
            a.at(i, j) = x;
        }
    /* Diagonal bodies are the only bodies in the diagonal blocks, so
       det A11 and det A22 have invertible bodies by construction. */
    return SuperMatrix(m, n, a);
}

} // namespace superber
