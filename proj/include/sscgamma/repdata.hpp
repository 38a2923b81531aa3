#pragma once

#include "sscgamma/cyclotomic.hpp"
#include "sscgamma/finite_field.hpp"

#include <vector>

namespace ssc {

// Tamely ramified character of F^x: a character of the residue field on units and a
// root of unity at the uniformizer.
struct TameChar {
    MultChar res;
    CycloNumber pi_value;

    // value at pi^valuation * u where u reduces to unit
    CycloNumber eval(long valuation, long unit, int conductor = 0) const;
    // value at t^-1 * pi, where t is the Teichmuller lift of t0
    CycloNumber at_twisted_uniformizer(int t0, int conductor = 0) const;
};

// pi_value = zeta_order^index
TameChar make_tame_char(const PrimeField& field, long exponent, int pi_order = 1, long pi_index = 0);

// Multiplicative order of a root of unity.
int root_order(const CycloNumber& r);

struct SscDatum {
    int n = 0;
    TameChar omega;
    int t0 = 1;
    CycloNumber zeta;
    int zeta_index = 0;  // position among the n-th roots ordered by angle

    int q() const { return omega.res.field.q(); }
    int m() const { return n / 2; }
    bool even() const { return n % 2 == 0; }
    const PrimeField& field() const { return omega.res.field; }
};

// lcm(q, q-1, n * lcm(q-1, order of omega(pi)), extra orders)
int session_conductor(int n, int q, const TameChar& omega, const std::vector<int>& extra_orders = {});

// The n-th roots of target ordered by angle, i.e. by k in zeta_N^k ascending.
std::vector<CycloNumber> nth_roots(const CycloNumber& target, int n, int conductor);

// Throws DomainError when zeta^n differs from omega(t^-1 pi) or t0 is zero.
void validate(const SscDatum& d);

SscDatum make_datum(int n, const TameChar& omega, int t0, int zeta_index);

// All n(q-1) classes ordered by (dlog t0, zeta index).
std::vector<SscDatum> enumerate_ssc(int n, const TameChar& omega);

CycloNumber xi(const SscDatum& d, const TameChar& mu);

// Residue character omega_0 * mu_0^m and uniformizer value xi. Even n only.
TameChar exterior_char(const SscDatum& d, const TameChar& mu);

}  // namespace ssc
