#include "superber/canonical.hpp"

#include "superber/errors.hpp"

namespace superber {

namespace {

std::uint8_t even_letter(int row) { return std::uint8_t(row + 1); }
std::uint8_t odd_letter(int m, int col) { return std::uint8_t(m + col + 1); }

/* Filling word of lambda_h: the small rectangle follows the choice grid
   and the extra column holds the row's even vector. */
Word h_filling(int m, int n, const std::vector<std::uint8_t>& choice) {
    Word w;
    w.reserve(std::size_t(m) * (n + 1));
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < n; ++c)
            w.push_back(choice[std::size_t(r) * n + c] ? odd_letter(m, c) : even_letter(r));
        w.push_back(even_letter(r));
    }
    return w;
}

/* Filling word of lambda_g: the extra row holds the column's odd vector. */
Word g_filling(int m, int n, const std::vector<std::uint8_t>& choice) {
    Word w;
    w.reserve(std::size_t(m + 1) * n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            w.push_back(choice[std::size_t(r) * n + c] ? odd_letter(m, c) : even_letter(r));
    for (int c = 0; c < n; ++c)
        w.push_back(odd_letter(m, c));
    return w;
}

/* Per-column odd counts of a rectangular filling. */
std::vector<int> column_odd_counts(int rows, int cols, int m, const Word& w) {
    std::vector<int> odd(std::size_t(cols), 0);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            odd[std::size_t(c)] += int(w[std::size_t(r) * cols + c]) > m;
    return odd;
}

Int kappa_of(const std::vector<int>& odd_counts) {
    Int k = 1;
    for (int q : odd_counts)
        k *= factorial(q);
    return k;
}

/* Order of the stabilizer of the filling word under box permutations:
   equal letters repeat only along their own row (even) or column (odd),
   so the count factors into row-even and column-odd factorials. */
Int filling_stabilizer(int rows, int cols, int m, const Word& w) {
    Int s = kappa_of(column_odd_counts(rows, cols, m, w));
    for (int r = 0; r < rows; ++r) {
        int even = 0;
        for (int c = 0; c < cols; ++c)
            even += int(w[std::size_t(r) * cols + c]) <= m;
        s *= factorial(even);
    }
    return s;
}

SuperTensor symmetrized_covariant(int m, int n, int gens, const Partition& shape,
                                  const Word& w) {
    Tableau t(shape);
    SymmetrizerElement e = young_symmetrizer(t);
    SuperTensor base = SuperTensor::basis_word(covariant_signature(m, n, t.size()), gens, w);
    return apply_symmetrizer(e, base);
}

int parity_sign(long long exponent) { return (exponent & 1) ? -1 : 1; }

} // namespace

std::vector<CanonicalPair> enumerate_canonical(int m, int n, int num_generators) {
    if (m < 0 || n < 0)
        throw MismatchError("negative dimensions");
    const int bits = m * n;
    if (bits > 20)
        throw MismatchError("m*n too large to enumerate");
    const Rational mu_g = mu_constant(lambda_g(m, n), MuMethod::ClosedForm);
    const Rational mu_h = mu_constant(lambda_h(m, n), MuMethod::ClosedForm);

    std::vector<CanonicalPair> pairs;
    pairs.reserve(std::size_t(1) << bits);
    for (int index = 0; index < (1 << bits); ++index) {
        CanonicalPair p;
        p.m = m;
        p.n = n;
        p.gens = num_generators;
        p.index = index;
        p.choice.resize(std::size_t(bits));
        for (int b = 0; b < bits; ++b)
            p.choice[std::size_t(b)] = std::uint8_t((index >> (bits - 1 - b)) & 1);

        p.h_word = h_filling(m, n, p.choice);
        p.g_word = g_filling(m, n, p.choice);

        for (std::uint8_t bit : p.choice)
            p.rho += bit;
        p.kappa_h = kappa_of(column_odd_counts(m, n + 1, m, p.h_word));
        p.kappa_g = kappa_of(column_odd_counts(m + 1, n, m, p.g_word));
        p.alpha = Rational(p.kappa_h, p.kappa_g) * parity_sign((long long)n * p.rho);

        p.aut_h = filling_stabilizer(m, n + 1, m, p.h_word);
        p.aut_g = filling_stabilizer(m + 1, n, m, p.g_word);
        p.odd_h = p.rho;
        p.odd_g = p.rho + n;

        p.zeta = Rational(p.aut_g) * mu_g *
                 parity_sign((long long)p.odd_g * (p.odd_g - 1) / 2);
        p.zeta_prime = Rational(p.aut_h) * mu_h *
                       parity_sign((long long)p.odd_h * (p.odd_h - 1) / 2);

        p.h = symmetrized_covariant(m, n, num_generators, lambda_h(m, n), p.h_word);
        p.g = symmetrized_covariant(m, n, num_generators, lambda_g(m, n), p.g_word);
        p.h_prime = p.h * Rational(1 / p.alpha);

        pairs.push_back(std::move(p));
    }
    return pairs;
}

SuperTensor build_h(const CanonicalPair& p) {
    return symmetrized_covariant(p.m, p.n, p.gens, lambda_h(p.m, p.n), p.h_word);
}

SuperTensor build_g(const CanonicalPair& p) {
    return symmetrized_covariant(p.m, p.n, p.gens, lambda_g(p.m, p.n), p.g_word);
}

SuperTensor dualize(const CanonicalPair& p, TensorKind kind) {
    const Partition shape = kind == TensorKind::G ? lambda_g(p.m, p.n) : lambda_h(p.m, p.n);
    const Word& w = kind == TensorKind::G ? p.g_word : p.h_word;
    Tableau t(shape);
    SymmetrizerElement e = young_symmetrizer(t);
    SuperTensor base =
        SuperTensor::basis_word(contravariant_signature(p.m, p.n, t.size()), p.gens, w);
    return apply_symmetrizer(e, base);
}

SuperTensor star_prime(const CanonicalPair& p, TensorKind kind) {
    SuperTensor dual = dualize(p, kind);
    const SuperTensor& primal = kind == TensorKind::G ? p.g : p.h;
    GrassmannElement val = pairing(dual, primal);
    if (!val.is_rational() || val.is_zero())
        throw ZeroPairingError("dual normalization pairing must be a nonzero rational");
    Rational d = val.body();
    return dual * (kind == TensorKind::G ? Rational(1 / d) : Rational(p.alpha / d));
}

} // namespace superber
