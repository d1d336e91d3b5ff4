#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superber/berezin.hpp"

namespace superber {

struct SuiteReport {
    std::string suite;
    int m = 0, n = 0;
    int checks = 0;
    bool pass = true;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what);
};

struct VerifyOptions {
    int gens = 4;
    std::uint64_t seed = 0;
    int trials = 20;
    bool extended = false;
};

/* Ring axioms, grading, inverses of the coefficient algebra. */
SuiteReport verify_grassmann(const VerifyOptions& opt);

/* Multiplicativity, the two block formulas, triangular factorizations. */
SuiteReport verify_berezinian(int m, int n, const VerifyOptions& opt);

/* Group algebra constants plus the structural identities of the signed
   actions: action laws, column skew-symmetry, the exchange identity,
   adjointness, pairing invariance, large-rectangle vanishing. */
SuiteReport verify_symmetrizer(int m, int n, const VerifyOptions& opt);

/* Canonical enumeration, ranks, statistics and dual normalizations. */
SuiteReport verify_basis(int m, int n, const VerifyOptions& opt);

/* A_h' = Ber A * A_g over the generator classes and random products. */
SuiteReport verify_theorem21(int m, int n, const VerifyOptions& opt);

/* Transformation laws of the character tensors and the fixed tensors. */
SuiteReport verify_theorem31(int m, int n, const VerifyOptions& opt);

/* Exact rank over the rationals of the word-coefficient matrix of a
   family of tensors with rational coefficients. */
int rational_rank(const std::vector<SuperTensor>& tensors);

/* Symbolic-random generator-class matrix: odd parameters are fresh
   generators, even ones 1 + a product of two fresh generators or a
   small integer. next_gen advances past the generators consumed. */
SuperMatrix random_generator_matrix(int m, int n, int gens, std::mt19937_64& rng,
                                    int& next_gen);

} // namespace superber
