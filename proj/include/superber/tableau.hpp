#pragma once

#include <map>
#include <string>
#include <vector>

#include "superber/rational.hpp"

namespace superber {

/* Weakly decreasing positive parts; the empty partition is allowed. */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /* r x c rectangle; r == 0 or c == 0 gives the empty partition. */
    static Partition rectangle(int rows, int cols);

    const std::vector<int>& parts() const { return parts_; }
    int size() const; // number of boxes l
    int num_rows() const { return int(parts_.size()); }
    int num_cols() const { return parts_.empty() ? 0 : parts_[0]; }
    std::vector<int> column_heights() const;
    bool is_rectangle() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/* The shapes attached to a dimension pair (m|n). */
Partition lambda_h(int m, int n);          // m x (n+1)
Partition lambda_g(int m, int n);          // (m+1) x n
Partition lambda_small_rect(int m, int n); // m x n
Partition lambda_large_rect(int m, int n); // (m+1) x (n+1)

/* Young tableau with the fixed row-major numbering 1..l (left to right,
   top to bottom). Only this numbering is ever used. */
class Tableau {
public:
    explicit Tableau(Partition shape);

    const Partition& shape() const { return shape_; }
    int size() const { return l_; }

    /* 0-based position of box (row, col), both 0-based. */
    int position(int row, int col) const;
    std::pair<int, int> box_of(int position) const;

    std::vector<std::vector<int>> row_positions() const;
    std::vector<std::vector<int>> column_positions() const;

    std::string to_string() const;

private:
    Partition shape_;
    int l_;
    std::vector<int> row_start_;
};

/* Permutation of {0..l-1}; img[i] is the image of i. */
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int l);
    static Permutation transposition(int l, int a, int b);

    int size() const { return int(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    /* (a*b)(x) = a(b(x)). */
    Permutation operator*(const Permutation& o) const;
    Permutation inverse() const;
    int sign() const;

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

/* Rational group-algebra element of S_l; no zero coefficients stored. */
class SymmetrizerElement {
public:
    explicit SymmetrizerElement(int l) : l_(l) {}

    static SymmetrizerElement identity(int l);

    int degree() const { return l_; }
    const std::map<Permutation, Rational>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add(const Permutation& p, const Rational& c);

    SymmetrizerElement operator+(const SymmetrizerElement& o) const;
    SymmetrizerElement operator*(const SymmetrizerElement& o) const; // convolution
    SymmetrizerElement operator*(const Rational& c) const;
    bool operator==(const SymmetrizerElement& o) const;

private:
    int l_;
    std::map<Permutation, Rational> terms_;
};

/* Full enumerations of the row and column stabilizers of the numbering. */
std::vector<Permutation> row_group(const Tableau& t);
std::vector<Permutation> column_group(const Tableau& t);

/* e_T = sum over sigma in C(T), tau in R(T) of sgn(sigma) tau sigma. */
SymmetrizerElement young_symmetrizer(const Tableau& t);

enum class MuMethod { Squaring, ClosedForm };

/* The constant in e_T^2 = mu e_T. Squaring works for every shape;
   the closed form (a ratio of factorial products) covers exactly the
   rectangular shapes, which include every lambda_g and lambda_h. */
Rational mu_constant(const Partition& shape, MuMethod method);

} // namespace superber
