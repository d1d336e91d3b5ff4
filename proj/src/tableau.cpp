#include "superber/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "superber/errors.hpp"

namespace superber {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw MismatchError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw MismatchError("partition parts must be weakly decreasing");
    }
}

Partition Partition::rectangle(int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw MismatchError("negative rectangle");
    if (rows == 0 || cols == 0)
        return Partition();
    return Partition(std::vector<int>(rows, cols));
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::vector<int> Partition::column_heights() const {
    std::vector<int> h(num_cols(), 0);
    for (int r = 0; r < num_rows(); ++r)
        for (int c = 0; c < parts_[r]; ++c)
            ++h[c];
    return h;
}

bool Partition::is_rectangle() const {
    for (int p : parts_)
        if (p != parts_[0])
            return false;
    return true;
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        out << (i ? "," : "") << parts_[i];
    out << ")";
    return out.str();
}

Partition lambda_h(int m, int n) { return Partition::rectangle(m, n + 1); }
Partition lambda_g(int m, int n) { return Partition::rectangle(m + 1, n); }
Partition lambda_small_rect(int m, int n) { return Partition::rectangle(m, n); }
Partition lambda_large_rect(int m, int n) { return Partition::rectangle(m + 1, n + 1); }

Tableau::Tableau(Partition shape) : shape_(std::move(shape)), l_(shape_.size()) {
    row_start_.resize(shape_.num_rows() + 1, 0);
    for (int r = 0; r < shape_.num_rows(); ++r)
        row_start_[r + 1] = row_start_[r] + shape_.parts()[r];
}

int Tableau::position(int row, int col) const {
    if (row < 0 || row >= shape_.num_rows() || col < 0 || col >= shape_.parts()[row])
        throw MismatchError("box outside the diagram");
    return row_start_[row] + col;
}

std::pair<int, int> Tableau::box_of(int position) const {
    if (position < 0 || position >= l_)
        throw MismatchError("position outside the tableau");
    int row = 0;
    while (row_start_[row + 1] <= position)
        ++row;
    return {row, position - row_start_[row]};
}

std::vector<std::vector<int>> Tableau::row_positions() const {
    std::vector<std::vector<int>> rows(shape_.num_rows());
    for (int r = 0; r < shape_.num_rows(); ++r)
        for (int c = 0; c < shape_.parts()[r]; ++c)
            rows[r].push_back(position(r, c));
    return rows;
}

std::vector<std::vector<int>> Tableau::column_positions() const {
    std::vector<int> heights = shape_.column_heights();
    std::vector<std::vector<int>> cols(heights.size());
    for (std::size_t c = 0; c < heights.size(); ++c)
        for (int r = 0; r < heights[c]; ++r)
            cols[c].push_back(position(r, int(c)));
    return cols;
}

std::string Tableau::to_string() const {
    std::ostringstream out;
    out << "[";
    for (int r = 0; r < shape_.num_rows(); ++r) {
        out << (r ? "," : "") << "[";
        for (int c = 0; c < shape_.parts()[r]; ++c)
            out << (c ? "," : "") << position(r, c) + 1;
        out << "]";
    }
    out << "]";
    return out.str();
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (int x : img_) {
        if (x < 0 || x >= int(img_.size()) || seen[x])
            throw MismatchError("not a permutation");
        seen[x] = true;
    }
}

Permutation Permutation::identity(int l) {
    std::vector<int> img(l);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int l, int a, int b) {
    Permutation p = identity(l);
    std::swap(p.img_[a], p.img_[b]);
    return p;
}

Permutation Permutation::operator*(const Permutation& o) const {
    if (size() != o.size())
        throw MismatchError("permutation degree mismatch");
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i)
        img[i] = img_[o.img_[i]];
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> img(size());
    for (int i = 0; i < size(); ++i)
        img[img_[i]] = i;
    Permutation p;
    p.img_ = std::move(img);
    return p;
}

int Permutation::sign() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (img_[i] > img_[j])
                ++inv;
    return (inv & 1) ? -1 : 1;
}

SymmetrizerElement SymmetrizerElement::identity(int l) {
    SymmetrizerElement e(l);
    e.add(Permutation::identity(l), 1);
    return e;
}

void SymmetrizerElement::add(const Permutation& p, const Rational& c) {
    if (p.size() != l_)
        throw MismatchError("permutation degree mismatch");
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(p, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SymmetrizerElement SymmetrizerElement::operator+(const SymmetrizerElement& o) const {
    if (l_ != o.l_)
        throw MismatchError("group algebra degree mismatch");
    SymmetrizerElement r = *this;
    for (const auto& [p, c] : o.terms_)
        r.add(p, c);
    return r;
}

SymmetrizerElement SymmetrizerElement::operator*(const SymmetrizerElement& o) const {
    if (l_ != o.l_)
        throw MismatchError("group algebra degree mismatch");
    SymmetrizerElement r(l_);
    for (const auto& [p, c] : terms_)
        for (const auto& [q, d] : o.terms_)
            r.add(p * q, c * d);
    return r;
}

SymmetrizerElement SymmetrizerElement::operator*(const Rational& c) const {
    SymmetrizerElement r(l_);
    for (const auto& [p, d] : terms_)
        r.add(p, c * d);
    return r;
}

bool SymmetrizerElement::operator==(const SymmetrizerElement& o) const {
    return l_ == o.l_ && terms_ == o.terms_;
}

namespace {

/* All permutations of {0..l-1} that permute positions within each of the
   given disjoint cells and fix everything else. */
std::vector<Permutation> cell_stabilizer(int l, const std::vector<std::vector<int>>& cells) {
    std::vector<Permutation> result{Permutation::identity(l)};
    for (const auto& cell : cells) {
        if (cell.size() < 2)
            continue;
        std::vector<int> arrangement(cell.begin(), cell.end());
        std::vector<Permutation> extended;
        std::sort(arrangement.begin(), arrangement.end());
        do {
            std::vector<int> img(l);
            std::iota(img.begin(), img.end(), 0);
            for (std::size_t k = 0; k < cell.size(); ++k)
                img[cell[k]] = arrangement[k];
            Permutation cell_perm(std::move(img));
            for (const auto& base : result)
                extended.push_back(cell_perm * base);
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        result = std::move(extended);
    }
    return result;
}

} // namespace

std::vector<Permutation> row_group(const Tableau& t) {
    return cell_stabilizer(t.size(), t.row_positions());
}

std::vector<Permutation> column_group(const Tableau& t) {
    return cell_stabilizer(t.size(), t.column_positions());
}

SymmetrizerElement young_symmetrizer(const Tableau& t) {
    SymmetrizerElement e(t.size());
    std::vector<Permutation> rows = row_group(t);
    std::vector<Permutation> cols = column_group(t);
    for (const Permutation& sigma : cols) {
        Rational s = sigma.sign();
        for (const Permutation& tau : rows)
            e.add(tau * sigma, s);
    }
    return e;
}

Rational mu_constant(const Partition& shape, MuMethod method) {
    if (method == MuMethod::ClosedForm) {
        if (!shape.is_rectangle())
            throw MismatchError("closed form only covers rectangular shapes");
        const int rows = shape.num_rows();
        const int cols = shape.num_cols();
        Int num = 1, den = 1;
        for (int t = 1; t <= rows; ++t) {
            num *= factorial(rows + cols - t);
            den *= factorial(rows - t);
        }
        return Rational(num, den);
    }
    Tableau t(shape);
    SymmetrizerElement e = young_symmetrizer(t);
    SymmetrizerElement e2 = e * e;
    /* mu = ratio at any term of e; then e2 must equal mu * e exactly. */
    if (e.is_zero())
        throw NotProportionalError("zero symmetrizer");
    const auto& [p0, c0] = *e.terms().begin();
    auto it = e2.terms().find(p0);
    Rational mu = it == e2.terms().end() ? Rational(0) : Rational(it->second / c0);
    if (!(e2 == e * mu))
        throw NotProportionalError("e_T^2 is not proportional to e_T");
    return mu;
}

} // namespace superber
