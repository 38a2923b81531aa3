#pragma once

#include "sscgamma/laurent.hpp"
#include "sscgamma/repdata.hpp"

#include <vector>

namespace ssc {

// Working conductor for a datum twisted by mu.
int twist_conductor(const SscDatum& d, const TameChar& mu);

// (1 - x Z) / (1 - x^-1 q^-1 Z^-1)
RatFun unramified_ratio(const CycloNumber& x, int q);

RatFun tate_gamma(const TameChar& lambda, const AddChar& psi);

RatFun gamma_even(const SscDatum& d, const TameChar& mu, const AddChar& psi);
RatFun gamma_odd(const SscDatum& d, const TameChar& mu, const AddChar& psi);
// Dispatches on the parity of n.
RatFun gamma_factor(const SscDatum& d, const TameChar& mu, const AddChar& psi);

// omega_0 * mu_0^m trivial
bool unramified_branch(const SscDatum& d, const TameChar& mu);

struct LocalFactors {
    RatFun gamma;
    RatFun L;
    RatFun L_dual;
    RatFun epsilon;
    LaurentPoly p1;
    LaurentPoly p2;
};

// Roots allowed in the L-factor polynomials: xi*eta and xi^-1*eta over eta^m = 1 for
// even n, none for odd n.
std::vector<CycloNumber> l_factor_candidates(const SscDatum& d, const TameChar& mu);

LocalFactors extract_l_eps(const RatFun& gamma, const SscDatum& d, const TameChar& mu);

// epsilon * L_dual(q^-1 Z^-1) / L(Z)
RatFun functional_equation_rhs(const LocalFactors& f, int q);

}  // namespace ssc
