#include "superber/berezin.hpp"

#include <algorithm>
#include <sstream>

#include "superber/errors.hpp"

namespace superber {

RepMatrix::RepMatrix(BasisKind kind, int k, int num_generators)
    : kind_(kind), k_(k), gens_(num_generators),
      a_(std::size_t(k) * k, GrassmannElement(num_generators)) {}

RepMatrix RepMatrix::operator*(const RepMatrix& o) const {
    if (k_ != o.k_ || kind_ != o.kind_)
        throw MismatchError("rep matrix mismatch");
    RepMatrix r(kind_, k_, gens_);
    for (int i = 0; i < k_; ++i)
        for (int t = 0; t < k_; ++t) {
            if (at(i, t).is_zero())
                continue;
            for (int j = 0; j < k_; ++j)
                r.at(i, j) += at(i, t) * o.at(t, j);
        }
    return r;
}

bool RepMatrix::operator==(const RepMatrix& o) const {
    return kind_ == o.kind_ && k_ == o.k_ && a_ == o.a_;
}

RepMatrix RepMatrix::scaled(const GrassmannElement& s) const {
    RepMatrix r(kind_, k_, gens_);
    for (std::size_t i = 0; i < a_.size(); ++i)
        r.a_[i] = s * a_[i];
    return r;
}

bool RepMatrix::is_identity() const {
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero())
                return false;
        }
    return true;
}

RepMatrix rep_matrix(const SuperMatrix& a, BasisKind kind,
                     const std::vector<CanonicalPair>& pairs) {
    const int k = int(pairs.size());
    std::vector<SuperTensor> basis;
    basis.reserve(pairs.size());
    for (const CanonicalPair& p : pairs)
        basis.push_back(kind == BasisKind::HPrime ? p.h_prime : p.g);
    RepMatrix r(kind, k, a.num_generators());
    for (int j = 0; j < k; ++j) {
        SuperTensor image = gl_action(a, basis[std::size_t(j)]);
        std::vector<GrassmannElement> col = express_in_basis(image, basis);
        for (int i = 0; i < k; ++i)
            r.at(i, j) = col[std::size_t(i)];
    }
    return r;
}

CheckReport verify_character_identity(const SuperMatrix& a,
                                      const std::vector<CanonicalPair>& pairs) {
    CheckReport rep;
    rep.check = "theorem21";
    rep.m = a.m();
    rep.n = a.n();
    rep.berezinian = a.berezinian(BerFormula::Checked);
    RepMatrix ah = rep_matrix(a, BasisKind::HPrime, pairs);
    RepMatrix ag = rep_matrix(a, BasisKind::G, pairs);
    const int k = ah.size();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (ah.at(i, j) != rep.berezinian * ag.at(i, j)) {
                rep.pass = false;
                std::ostringstream msg;
                msg << "entry (" << i + 1 << "," << j + 1 << "): " << ah.at(i, j).to_text()
                    << " != Ber * " << ag.at(i, j).to_text();
                rep.failures.push_back(msg.str());
            }
        }
    return rep;
}

namespace {

Parity checked_parity(const SuperTensor& t) {
    bool first = true;
    Parity p = Parity::Even;
    for (const auto& [w, c] : t.terms()) {
        Parity wp = t.word_parity(w);
        if (first) {
            p = wp;
            first = false;
        } else if (wp != p) {
            throw ParityError("character tensor mixes word parities");
        }
    }
    return p;
}

} // namespace

BerezinTensor build_btilde(int m, int n, int num_generators) {
    std::vector<CanonicalPair> pairs = enumerate_canonical(m, n, num_generators);
    Signature sig{m, n, m * (n + 1), (m + 1) * n};
    SuperTensor acc(sig, num_generators);
    for (const CanonicalPair& p : pairs)
        acc += tensor_concat(p.h_prime, star_prime(p, TensorKind::G));
    return BerezinTensor{m, n, acc, checked_parity(acc)};
}

BerezinTensor build_btilde_star(int m, int n, int num_generators) {
    std::vector<CanonicalPair> pairs = enumerate_canonical(m, n, num_generators);
    Signature sig{m, n, (m + 1) * n, m * (n + 1)};
    SuperTensor acc(sig, num_generators);
    for (const CanonicalPair& p : pairs)
        acc += tensor_concat(p.g, star_prime(p, TensorKind::H));
    return BerezinTensor{m, n, acc, checked_parity(acc)};
}

SuperTensor build_invariant(int m, int n, int num_generators, TensorKind kind) {
    std::vector<CanonicalPair> pairs = enumerate_canonical(m, n, num_generators);
    const int l = kind == TensorKind::G ? (m + 1) * n : m * (n + 1);
    Signature sig{m, n, l, l};
    SuperTensor acc(sig, num_generators);
    for (const CanonicalPair& p : pairs) {
        const SuperTensor& primal = kind == TensorKind::G ? p.g : p.h_prime;
        acc += tensor_concat(primal, star_prime(p, kind));
    }
    return acc;
}

Rational contract_characters(const BerezinTensor& bt, const BerezinTensor& bt_star) {
    if (bt.m != bt_star.m || bt.n != bt_star.n)
        throw MismatchError("dimension mismatch");
    if (!bt.body.is_rational() || !bt_star.body.is_rational())
        throw MismatchError("contraction expects rational coefficients");
    const int lh = bt.body.signature().cov;
    const int lg = bt.body.signature().contra;
    const int mm = bt.m;
    auto odd_pairs_sign = [mm](const Word& w, std::size_t from, std::size_t to) {
        int q = 0;
        for (std::size_t i = from; i < to; ++i)
            q += int(w[i]) > mm;
        return ((q * (q - 1) / 2) & 1) ? -1 : 1;
    };
    Rational acc = 0;
    for (const auto& [wu, c] : bt.body.terms()) {
        for (const auto& [wx, d] : bt_star.body.terms()) {
            /* Pair bt's contravariant tail against bt_star's covariant
               head, and bt_star's contravariant tail against bt's head. */
            bool match = std::equal(wu.begin() + lh, wu.end(), wx.begin()) &&
                         std::equal(wx.begin() + lg, wx.end(), wu.begin());
            if (!match)
                continue;
            int s = odd_pairs_sign(wu, std::size_t(lh), wu.size()) *
                    odd_pairs_sign(wx, std::size_t(lg), wx.size());
            acc += Rational(s) * c.body() * d.body();
        }
    }
    return acc;
}

} // namespace superber
