#include "sscgamma/converse.hpp"

#include "sscgamma/error.hpp"
#include "sscgamma/serialize.hpp"

#include <map>

namespace ssc {

GammaProfile profile(const SscDatum& d, const AddChar& psi) {
    validate(d);
    GammaProfile p{d.n, d.omega, psi, {}};
    const int q = d.q();
    for (int a = 0; a < q - 1; ++a) p.entries.push_back(gamma_factor(d, make_tame_char(d.field(), a), psi));
    return p;
}

bool same_entries(const GammaProfile& a, const GammaProfile& b) {
    if (a.entries.size() != b.entries.size()) return false;
    for (size_t i = 0; i < a.entries.size(); ++i)
        if (a.entries[i] != b.entries[i]) return false;
    return true;
}

std::vector<SscDatum> identify(const GammaProfile& p) {
    if (static_cast<int>(p.entries.size()) != p.q() - 1) throw DomainError("a profile has exactly q-1 entries");
    std::vector<SscDatum> out;
    for (const auto& d : enumerate_ssc(p.n, p.omega))
        if (same_entries(profile(d, p.psi), p)) out.push_back(d);
    if (out.empty()) throw InconsistentProfile("profile matches no class");
    return out;
}

bool gcd_hypothesis(int n, int q) {
    const int m = n / 2;
    return gcd_l(n % 2 == 0 ? m - 1 : m, q - 1) == 1;
}

namespace {

// k with x = zeta_order^k
long root_index(const CycloNumber& x, int order) {
    for (long k = 0; k < order; ++k)
        if (x == CycloNumber::root_of_unity(order, k)) return k;
    throw InconsistentProfile("expected a root of unity of order dividing " + std::to_string(order));
}

long inverse_mod(long a, long mod) {
    a = mod_floor(a, mod);
    for (long x = 0; x < mod; ++x)
        if (a * x % mod == 1 % mod) return x;
    throw HypothesisViolated("exponent not invertible modulo q-1");
}

// xi_a^(m-1), read from the pole or from the Gauss-sum coefficient
CycloNumber even_reading(const GammaProfile& p, int a) {
    const int q = p.q();
    const int m = p.n / 2;
    const PrimeField& f = p.omega.res.field;
    const RatFun& g = p.entries[a];
    MultChar chi = p.omega.res * MultChar(f, a).pow(m);
    if (chi.is_trivial()) {
        // denominator normalizes to 1 - xi q Z
        const LaurentPoly& den = g.den();
        if (den.min_deg() != 0 || den.max_deg() != 1) throw InconsistentProfile("unramified entry without a simple pole");
        CycloNumber x = -den.coeff(1) / CycloNumber(q);
        return x.pow(m - 1);
    }
    auto mono = g.as_monomial();
    if (!mono || mono->second != m - 1) throw InconsistentProfile("ramified entry is not a monomial of degree m-1");
    CycloNumber gauss = gauss_sum(chi.inverse(), AddChar(f, -p.psi.shift));
    return mono->first / (CycloNumber::q_half_power(q, m - 2) * gauss);
}

}  // namespace

RecoveredParams recover_direct(const GammaProfile& p) {
    const int q = p.q();
    const int n = p.n;
    if (static_cast<int>(p.entries.size()) != q - 1) throw DomainError("a profile has exactly q-1 entries");
    if (!gcd_hypothesis(n, q))
        throw HypothesisViolated("gcd hypothesis fails for n=" + std::to_string(n) + " q=" + std::to_string(q) +
                                 "; use identify or report");
    const PrimeField& f = p.omega.res.field;
    const int m = n / 2;
    RecoveredParams r;
    r.even = n % 2 == 0;

    if (r.even) {
        std::vector<CycloNumber> rho;
        for (int a = 0; a < q - 1; ++a) rho.push_back(even_reading(p, a));
        // rho_a / rho_0 = mu_a(s)^(m-1) with s = (-1)^(m-1) t0^-1
        long dlog_s = 0;
        if (q > 2) dlog_s = mod_floor(root_index(rho[1] / rho[0], q - 1) * inverse_mod(m - 1, q - 1), q - 1);
        int s = f.exp(dlog_s);
        int sign = (m - 1) % 2 == 0 ? 1 : q - 1;
        r.t0 = f.mul(sign, f.inv(s));
        for (int a = 0; a < q - 1; ++a)
            if (rho[a] / rho[0] != char_eval(MultChar(f, a), s).pow(m - 1))
                throw InconsistentProfile("twist ratios disagree with a single t0");
        r.zeta_value = p.omega.at_twisted_uniformizer(r.t0) / rho[0];
        if (p.omega.res.is_trivial() && m >= 2) {
            const LaurentPoly& den = p.entries[0].den();
            if (-den.coeff(1) / CycloNumber(q) != r.zeta_value)
                throw InconsistentProfile("pole of the untwisted entry disagrees with zeta^2");
        }
    } else {
        std::vector<CycloNumber> kappa;
        for (int a = 0; a < q - 1; ++a) {
            auto mono = p.entries[a].as_monomial();
            if (!mono || mono->second != m) throw InconsistentProfile("odd entry is not a monomial of degree m");
            kappa.push_back(mono->first / CycloNumber::q_half_power(q, m));
        }
        // kappa_a / kappa_0 = mu_a(t0)^-m
        long dlog_t = 0;
        if (q > 2) dlog_t = mod_floor(-root_index(kappa[1] / kappa[0], q - 1) * inverse_mod(m, q - 1), q - 1);
        r.t0 = f.exp(dlog_t);
        for (int a = 0; a < q - 1; ++a)
            if (kappa[a] / kappa[0] != char_eval(MultChar(f, a), r.t0).pow(-m))
                throw InconsistentProfile("twist ratios disagree with a single t0");
        // zeta = zeta^(2m+1) / zeta^(2m)
        r.zeta_value = p.omega.at_twisted_uniformizer(r.t0) / kappa[0];
        if (r.zeta_value.pow(n) != p.omega.at_twisted_uniformizer(r.t0))
            throw InconsistentProfile("recovered zeta is not an n-th root of omega(t^-1 pi)");
    }
    return r;
}

bool recovered_matches(const RecoveredParams& r, const SscDatum& d) {
    if (r.t0 != d.t0) return false;
    return r.zeta_value == (r.even ? d.zeta * d.zeta : d.zeta);
}

DistinguishabilityReport distinguishability_report(int n, const TameChar& omega, const AddChar& psi) {
    const int q = omega.res.field.q();
    DistinguishabilityReport rep{n, q, omega, gcd_hypothesis(n, q), {}, false};
    std::map<std::string, size_t> slot;
    for (const auto& d : enumerate_ssc(n, omega)) {
        GammaProfile p = profile(d, psi);
        std::string bytes = dump(to_json(p));
        auto it = slot.find(bytes);
        if (it == slot.end()) {
            slot.emplace(bytes, rep.classes.size());
            rep.classes.push_back(ProfileClass{{d}, fnv1a_hex(bytes)});
        } else {
            rep.classes[it->second].members.push_back(d);
        }
    }
    bool matched = true;
    for (const auto& c : rep.classes) {
        if (n % 2 == 1) {
            matched = matched && c.members.size() == 1;
        } else {
            matched = matched && c.members.size() == 2 && c.members[0].t0 == c.members[1].t0 &&
                      c.members[0].zeta == -c.members[1].zeta;
        }
    }
    rep.prediction_matched = matched;
    return rep;
}

}  // namespace ssc
