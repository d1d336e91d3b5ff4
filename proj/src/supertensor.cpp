#include "superber/supertensor.hpp"

#include <algorithm>
#include <sstream>

#include "superber/errors.hpp"

namespace superber {

Signature covariant_signature(int m, int n, int l) { return Signature{m, n, l, 0}; }
Signature contravariant_signature(int m, int n, int l) { return Signature{m, n, 0, l}; }

SuperTensor::SuperTensor(Signature sig, int num_generators)
    : sig_(sig), gens_(num_generators) {}

SuperTensor SuperTensor::basis_word(Signature sig, int num_generators, Word w,
                                    GrassmannElement c) {
    SuperTensor t(sig, num_generators);
    t.add_term(w, c);
    return t;
}

SuperTensor SuperTensor::basis_word(Signature sig, int num_generators, Word w,
                                    const Rational& c) {
    return basis_word(sig, num_generators, std::move(w),
                      GrassmannElement::scalar(num_generators, c));
}

bool SuperTensor::is_rational() const {
    for (const auto& [w, c] : terms_)
        if (!c.is_rational())
            return false;
    return true;
}

void SuperTensor::check_word(const Word& w) const {
    if (int(w.size()) != sig_.length())
        throw MismatchError("word length does not match the signature");
    for (std::uint8_t letter : w)
        if (letter < 1 || int(letter) > sig_.letters())
            throw MismatchError("letter outside 1..m+n");
}

void SuperTensor::add_term(const Word& w, const GrassmannElement& c) {
    check_word(w);
    if (c.num_generators() != gens_)
        throw MismatchError("generator-count mismatch");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

SuperTensor SuperTensor::operator+(const SuperTensor& o) const {
    SuperTensor r = *this;
    r += o;
    return r;
}

SuperTensor& SuperTensor::operator+=(const SuperTensor& o) {
    if (!(sig_ == o.sig_) || gens_ != o.gens_)
        throw MismatchError("tensor signature mismatch");
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

SuperTensor SuperTensor::operator-(const SuperTensor& o) const { return *this + (-o); }

SuperTensor SuperTensor::operator-() const {
    SuperTensor r(sig_, gens_);
    for (const auto& [w, c] : terms_)
        r.terms_[w] = -c;
    return r;
}

SuperTensor SuperTensor::operator*(const Rational& c) const {
    SuperTensor r(sig_, gens_);
    if (c == 0)
        return r;
    for (const auto& [w, t] : terms_)
        r.terms_[w] = t * c;
    return r;
}

Parity SuperTensor::word_parity(const Word& w) const {
    int odd = 0;
    for (std::uint8_t letter : w)
        odd += letter > sig_.m;
    return Parity(odd & 1);
}

SuperTensor SuperTensor::scalar_mul_left(const GrassmannElement& s) const {
    SuperTensor r(sig_, gens_);
    for (const auto& [w, c] : terms_)
        r.add_term(w, s.twisted(word_parity(w)) * c);
    return r;
}

SuperTensor SuperTensor::scalar_mul_right(const GrassmannElement& s) const {
    SuperTensor r(sig_, gens_);
    for (const auto& [w, c] : terms_)
        r.add_term(w, c * s);
    return r;
}

std::string SuperTensor::to_text() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << "(" << c.to_text() << ")";
        for (int k = 0; k < sig_.length(); ++k) {
            out << " v" << int(w[k]);
            if (sig_.position_contravariant(k))
                out << "*";
        }
    }
    return out.str();
}

namespace {

/* Sign for rearranging a word: -1 for every pair of odd letters whose
   relative order flips. dest_of[i] is the destination of position i. */
int koszul_sign(const Signature& sig, const Word& w, const std::vector<int>& dest_of) {
    int crossings = 0;
    const int l = int(w.size());
    for (int i = 0; i < l; ++i) {
        if (int(w[i]) <= sig.m)
            continue;
        for (int j = i + 1; j < l; ++j)
            if (int(w[j]) > sig.m && dest_of[i] > dest_of[j])
                ++crossings;
    }
    return (crossings & 1) ? -1 : 1;
}

} // namespace

SuperTensor perm_action(const Permutation& sigma, const SuperTensor& t) {
    const Signature& sig = t.signature();
    if (sig.contra != 0)
        throw MismatchError("left permutation action needs a covariant tensor");
    if (sigma.size() != sig.length())
        throw MismatchError("permutation length mismatch");
    SuperTensor r(sig, t.num_generators());
    for (const auto& [w, c] : t.terms()) {
        Word v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            v[sigma(int(i))] = w[i]; // letter at i moves to sigma(i)
        int s = koszul_sign(sig, w, sigma.images());
        r.add_term(v, s < 0 ? -c : c);
    }
    return r;
}

SuperTensor right_perm_action(const SuperTensor& t, const Permutation& sigma) {
    const Signature& sig = t.signature();
    if (sig.cov != 0)
        throw MismatchError("right permutation action needs a contravariant tensor");
    if (sigma.size() != sig.length())
        throw MismatchError("permutation length mismatch");
    /* (u sigma)_i = u_{sigma(i)}: letter at position j lands at
       sigma^-1(j). */
    Permutation inv = sigma.inverse();
    SuperTensor r(sig, t.num_generators());
    for (const auto& [w, c] : t.terms()) {
        Word v(w.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            v[i] = w[sigma(int(i))];
        int s = koszul_sign(sig, w, inv.images());
        r.add_term(v, s < 0 ? -c : c);
    }
    return r;
}

SuperTensor apply_symmetrizer(const SymmetrizerElement& e, const SuperTensor& t) {
    const Signature& sig = t.signature();
    if (sig.cov != 0 && sig.contra != 0)
        throw MismatchError("symmetrizer application needs a pure-variance tensor");
    SuperTensor r(sig, t.num_generators());
    for (const auto& [p, c] : e.terms()) {
        SuperTensor part = sig.contra == 0 ? perm_action(p, t) : right_perm_action(t, p);
        r += part * c;
    }
    return r;
}

SuperTensor gl_action(const SuperMatrix& a, const SuperTensor& t) {
    const Signature& sig = t.signature();
    if (a.m() != sig.m || a.n() != sig.n)
        throw MismatchError("matrix dimension does not match the tensor");
    if (a.num_generators() != t.num_generators())
        throw MismatchError("generator-count mismatch");
    const int gens = t.num_generators();
    const int letters = sig.letters();

    GMatrix inv;
    if (sig.contra > 0)
        inv = a.inverse().grid(); // throws NonInvertibleError if singular

    SuperTensor result(sig, gens);
    for (const auto& [w, c] : t.terms()) {
        /* Expand factor by factor, keeping each partial coefficient to
           the right of the partial word. Appending basis letter v to a
           partial (u, acc) costs the twist of acc by the parity of v. */
        std::map<Word, GrassmannElement> partial{{Word{}, GrassmannElement::one(gens)}};
        for (int k = 0; k < sig.length(); ++k) {
            const int letter = w[k];
            std::map<Word, GrassmannElement> next;
            for (const auto& [prefix, acc] : partial) {
                for (int i = 1; i <= letters; ++i) {
                    const GrassmannElement& entry = sig.position_contravariant(k)
                                                        ? inv.at(letter - 1, i - 1)
                                                        : a.entry(i - 1, letter - 1);
                    if (entry.is_zero())
                        continue;
                    GrassmannElement acc2 =
                        sig.position_contravariant(k)
                            ? (acc * entry).twisted(sig.letter_parity(i))
                            : acc.twisted(sig.letter_parity(i)) * entry;
                    if (acc2.is_zero())
                        continue;
                    Word u = prefix;
                    u.push_back(std::uint8_t(i));
                    auto [it, inserted] = next.emplace(std::move(u), acc2);
                    if (!inserted) {
                        it->second += acc2;
                        if (it->second.is_zero())
                            next.erase(it);
                    }
                }
            }
            partial = std::move(next);
        }
        for (const auto& [u, acc] : partial)
            result.add_term(u, acc * c);
    }
    return result;
}

GrassmannElement pairing(const SuperTensor& u, const SuperTensor& w) {
    const Signature& su = u.signature();
    const Signature& sw = w.signature();
    if (su.cov != 0 || sw.contra != 0)
        throw MismatchError("pairing takes a contravariant then a covariant tensor");
    if (su.length() != sw.length() || su.m != sw.m || su.n != sw.n)
        throw MismatchError("pairing length mismatch");
    if (u.num_generators() != w.num_generators())
        throw MismatchError("generator-count mismatch");
    GrassmannElement acc(u.num_generators());
    for (const auto& [v, d] : u.terms()) {
        auto it = w.terms().find(v);
        if (it == w.terms().end())
            continue;
        int q = 0;
        for (std::uint8_t letter : v)
            q += letter > su.m;
        /* Interleaving the two equal words crosses every pair of odd
           letters once; the contravariant coefficient then crosses the
           covariant word. */
        bool flip = ((q * (q - 1) / 2) & 1) != 0;
        GrassmannElement term = d.twisted(Parity(q & 1)) * it->second;
        acc += flip ? -term : term;
    }
    return acc;
}

namespace {

struct RationalSolver {
    /* Row-reduce the basis matrix once; solve many right-hand sides. */
    std::vector<Word> words;
    std::map<Word, int> word_index;
    int k = 0;
    std::vector<std::vector<Rational>> b;      // |words| x k
    std::vector<int> pivot_rows;               // k rows forming an invertible minor
    std::vector<std::vector<Rational>> minor_inv; // k x k inverse of that minor
};

RationalSolver make_solver(std::span<const SuperTensor> basis) {
    RationalSolver s;
    s.k = int(basis.size());
    for (const SuperTensor& t : basis) {
        if (!t.is_rational())
            throw MismatchError("basis tensors must have rational coefficients");
        for (const auto& [w, c] : t.terms())
            if (s.word_index.emplace(w, int(s.words.size())).second)
                s.words.push_back(w);
    }
    s.b.assign(s.words.size(), std::vector<Rational>(s.k, 0));
    for (int j = 0; j < s.k; ++j)
        for (const auto& [w, c] : basis[j].terms())
            s.b[s.word_index.at(w)][j] = c.body();

    /* Gaussian elimination to pick k independent rows. */
    std::vector<std::vector<Rational>> work = s.b;
    std::vector<int> row_of(s.words.size());
    for (std::size_t i = 0; i < row_of.size(); ++i)
        row_of[i] = int(i);
    int rank = 0;
    for (int col = 0; col < s.k && rank < int(work.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < int(work.size()); ++r)
            if (work[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(work[pivot], work[rank]);
        std::swap(row_of[pivot], row_of[rank]);
        for (int r = 0; r < int(work.size()); ++r) {
            if (r == rank || work[r][col] == 0)
                continue;
            Rational f = work[r][col] / work[rank][col];
            for (int c2 = 0; c2 < s.k; ++c2)
                work[r][c2] -= f * work[rank][c2];
        }
        s.pivot_rows.push_back(row_of[rank]);
        ++rank;
    }
    if (rank < s.k)
        throw DependentBasisError("basis is linearly dependent over the rationals");

    /* Invert the k x k pivot minor by Gauss-Jordan. */
    std::vector<std::vector<Rational>> mat(s.k, std::vector<Rational>(2 * s.k, 0));
    for (int i = 0; i < s.k; ++i) {
        for (int j = 0; j < s.k; ++j)
            mat[i][j] = s.b[s.pivot_rows[i]][j];
        mat[i][s.k + i] = 1;
    }
    for (int col = 0; col < s.k; ++col) {
        int pivot = -1;
        for (int r = col; r < s.k; ++r)
            if (mat[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw DependentBasisError("pivot minor unexpectedly singular");
        std::swap(mat[pivot], mat[col]);
        Rational p = mat[col][col];
        for (int c2 = 0; c2 < 2 * s.k; ++c2)
            mat[col][c2] /= p;
        for (int r = 0; r < s.k; ++r) {
            if (r == col || mat[r][col] == 0)
                continue;
            Rational f = mat[r][col];
            for (int c2 = 0; c2 < 2 * s.k; ++c2)
                mat[r][c2] -= f * mat[col][c2];
        }
    }
    s.minor_inv.assign(s.k, std::vector<Rational>(s.k, 0));
    for (int i = 0; i < s.k; ++i)
        for (int j = 0; j < s.k; ++j)
            s.minor_inv[i][j] = mat[i][s.k + j];
    return s;
}

} // namespace

std::vector<GrassmannElement> express_in_basis(const SuperTensor& t,
                                               std::span<const SuperTensor> basis) {
    if (basis.empty())
        throw MismatchError("empty basis");
    const int gens = t.num_generators();
    for (const SuperTensor& bt : basis)
        if (!(bt.signature() == t.signature()))
            throw MismatchError("basis signature mismatch");
    RationalSolver s = make_solver(basis);

    /* Split t by Grassmann monomial: each mask gives a rational system. */
    std::map<std::uint64_t, std::map<Word, Rational>> components;
    for (const auto& [w, c] : t.terms()) {
        if (!s.word_index.contains(w))
            throw SpanViolationError("word outside the basis span");
        for (const auto& [mask, coef] : c.terms())
            components[mask][w] = coef;
    }

    std::vector<GrassmannElement> out(basis.size(), GrassmannElement(gens));
    for (const auto& [mask, rhs_map] : components) {
        std::vector<Rational> rhs(s.words.size(), 0);
        for (const auto& [w, coef] : rhs_map)
            rhs[std::size_t(s.word_index.at(w))] = coef;
        std::vector<Rational> x(std::size_t(s.k), 0);
        for (int i = 0; i < s.k; ++i) {
            Rational acc = 0;
            for (int j = 0; j < s.k; ++j)
                acc += s.minor_inv[i][j] * rhs[std::size_t(s.pivot_rows[j])];
            x[std::size_t(i)] = acc;
        }
        /* Solving on the pivot rows must reproduce every row. */
        for (std::size_t r = 0; r < s.words.size(); ++r) {
            Rational acc = 0;
            for (int j = 0; j < s.k; ++j)
                if (x[std::size_t(j)] != 0 && s.b[r][j] != 0)
                    acc += s.b[r][j] * x[std::size_t(j)];
            if (acc != rhs[r])
                throw SpanViolationError("component outside the rational span");
        }
        for (int j = 0; j < s.k; ++j)
            if (x[std::size_t(j)] != 0)
                out[std::size_t(j)] += GrassmannElement::from_mask(gens, mask, x[std::size_t(j)]);
    }
    return out;
}

SuperTensor tensor_concat(const SuperTensor& cov, const SuperTensor& contra) {
    const Signature& a = cov.signature();
    const Signature& b = contra.signature();
    if (a.contra != 0 || b.cov != 0)
        throw MismatchError("concat takes a covariant then a contravariant tensor");
    if (a.m != b.m || a.n != b.n)
        throw MismatchError("dimension mismatch");
    if (cov.num_generators() != contra.num_generators())
        throw MismatchError("generator-count mismatch");
    Signature sig{a.m, a.n, a.cov, b.contra};
    SuperTensor r(sig, cov.num_generators());
    for (const auto& [w, c] : cov.terms())
        for (const auto& [v, d] : contra.terms()) {
            Word u = w;
            u.insert(u.end(), v.begin(), v.end());
            r.add_term(u, c.twisted(contra.word_parity(v)) * d);
        }
    return r;
}

} // namespace superber
