#pragma once

#include "sscgamma/gamma.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ssc {

// Gamma factors of one class twisted by mu_a = (exponent a, mu(pi) = 1), a = 0 .. q-2.
struct GammaProfile {
    int n = 0;
    TameChar omega;
    AddChar psi;
    std::vector<RatFun> entries;

    int q() const { return omega.res.field.q(); }
};

GammaProfile profile(const SscDatum& d, const AddChar& psi);

bool same_entries(const GammaProfile& a, const GammaProfile& b);

// Classes over (n, omega) whose profile matches entry by entry.
// Throws InconsistentProfile when nothing matches.
std::vector<SscDatum> identify(const GammaProfile& p);

// gcd(m-1, q-1) = 1 for n = 2m, gcd(m, q-1) = 1 for n = 2m+1
bool gcd_hypothesis(int n, int q);

struct RecoveredParams {
    int t0 = 1;
    // zeta^2 for even n, zeta itself for odd n
    CycloNumber zeta_value;
    bool even = false;
};

// Reads t0 and zeta^2 (even) or zeta (odd) straight off the profile entries.
RecoveredParams recover_direct(const GammaProfile& p);

bool recovered_matches(const RecoveredParams& r, const SscDatum& d);

struct ProfileClass {
    std::vector<SscDatum> members;
    std::string profile_hash;
};

struct DistinguishabilityReport {
    int n = 0;
    int q = 0;
    TameChar omega;
    bool gcd_ok = false;
    std::vector<ProfileClass> classes;
    bool prediction_matched = false;
};

DistinguishabilityReport distinguishability_report(int n, const TameChar& omega, const AddChar& psi);

}  // namespace ssc
