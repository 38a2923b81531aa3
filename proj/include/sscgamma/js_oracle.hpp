#pragma once

#include "sscgamma/gamma.hpp"
#include "sscgamma/matfq.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace ssc {

struct CellCountEntry {
    std::string kind;  // "double_coset" or "nilpotent_intersection"
    int l = 0;
    std::vector<int> d;  // diagonal of d, empty for the nilpotent rows
    mpz_class expected;
    mpz_class actual;
};

struct LemmaReport {
    std::string lemma;
    int m = 0;
    int q = 0;
    long cases_checked = 0;
    std::vector<std::string> violations;
    std::vector<CellCountEntry> entries;

    bool ok() const { return violations.empty(); }
};

// sigma * [[I, X], [0, I]] * diag(g, g) * sigma^-1, sigma = (e1 e3 ... e2 e4 ...)
MatFq shalika_assembly(const MatFq& g, const MatFq& x);
MatFq interleave_permutation(int m, int q);

// Lower nilpotent X with x_ij = 0 whenever j < i and sigma_l^-1(j) < sigma_l^-1(i).
bool in_nilpotent_intersection(const MatFq& x, int l);

LemmaReport verify_cell_counts(int m, int q);
LemmaReport verify_support_lemma(int m, int q);

struct JsPair {
    RatFun J;
    RatFun J_tilde;

    RatFun ratio() const { return J_tilde / J; }
};

// Per-l constants of the even-rank integral, rebuilt from group counts and brute force.
struct EvenShellConstants {
    int m = 0;
    int q = 0;
    std::vector<mpq_class> shell;  // index l-1
    std::vector<int> det_w;        // det of the block antidiagonal w_l in F_q
};

const EvenShellConstants& even_shell_constants(int m, int q);

JsPair js_even_oracle(const SscDatum& d, const TameChar& mu, const AddChar& psi);
JsPair js_odd_oracle(const SscDatum& d, const TameChar& mu, const AddChar& psi);
JsPair js_oracle(const SscDatum& d, const TameChar& mu, const AddChar& psi);

// omega_0 in {trivial, generator} times omega(pi) in {1, zeta_4}, duplicates removed.
std::vector<TameChar> grid_central_chars(const PrimeField& field);

struct DerivationReport {
    long cases_checked = 0;
    std::vector<std::string> mismatches;

    bool ok() const { return mismatches.empty(); }
};

// J_tilde / J against the closed form for every class and every mu in the profile family.
DerivationReport verify_derivation(const std::vector<int>& ns, const std::vector<int>& qs, long psi_shift = 1);

}  // namespace ssc
