#include "sscgamma/repdata.hpp"

#include "sscgamma/error.hpp"

#include <algorithm>
#include <string>

namespace ssc {

CycloNumber TameChar::eval(long valuation, long unit, int conductor) const {
    return char_eval(res, unit, conductor) * pi_value.pow(valuation);
}

CycloNumber TameChar::at_twisted_uniformizer(int t0, int conductor) const {
    return char_eval(res, res.field.inv(t0), conductor) * pi_value;
}

TameChar make_tame_char(const PrimeField& field, long exponent, int pi_order, long pi_index) {
    if (pi_order < 1) throw DomainError("uniformizer value order must be positive");
    return TameChar{MultChar(field, exponent), CycloNumber::root_of_unity(pi_order, pi_index)};
}

int root_order(const CycloNumber& r) {
    auto k = r.root_exponent();
    if (!k) throw DomainError("value is not a root of unity: " + r.to_string());
    int n = r.conductor();
    return static_cast<int>(n / gcd_l(n, *k));
}

int session_conductor(int n, int q, const TameChar& omega, const std::vector<int>& extra_orders) {
    long inner = lcm_l(q - 1, root_order(omega.pi_value));
    long big = lcm_l(lcm_l(q, q - 1), n * inner);
    for (int o : extra_orders) big = lcm_l(big, o);
    return static_cast<int>(big);
}

std::vector<CycloNumber> nth_roots(const CycloNumber& target, int n, int conductor) {
    CycloNumber t = target.embed(conductor);
    auto e = t.root_exponent();
    if (!e) throw DomainError("target is not a root of unity");
    if (*e % n != 0) throw DomainError("conductor too small for the requested roots");
    std::vector<long> ks;
    long step = conductor / n;
    for (int i = 0; i < n; ++i) ks.push_back(mod_floor(*e / n + i * step, conductor));
    std::sort(ks.begin(), ks.end());
    std::vector<CycloNumber> out;
    for (long k : ks) out.push_back(CycloNumber::root_of_unity(conductor, k));
    return out;
}

void validate(const SscDatum& d) {
    if (d.n < 2) throw DomainError("n must be at least 2");
    if (d.field().reduce(d.t0) == 0) throw DomainError("t0 must be nonzero");
    if (d.zeta.pow(d.n) != d.omega.at_twisted_uniformizer(d.t0))
        throw DomainError("zeta^n differs from omega(t^-1 pi)");
}

SscDatum make_datum(int n, const TameChar& omega, int t0, int zeta_index) {
    if (n < 2) throw DomainError("n must be at least 2");
    const PrimeField& f = omega.res.field;
    if (f.reduce(t0) == 0) throw DomainError("t0 must be a nonzero residue");
    if (zeta_index < 0 || zeta_index >= n)
        throw DomainError("zeta index " + std::to_string(zeta_index) + " out of range [0, " + std::to_string(n) + ")");
    int conductor = session_conductor(n, f.q(), omega);
    int t = f.reduce(t0);
    return SscDatum{n, omega, t, nth_roots(omega.at_twisted_uniformizer(t, conductor), n, conductor)[zeta_index],
                    zeta_index};
}

std::vector<SscDatum> enumerate_ssc(int n, const TameChar& omega) {
    if (n < 2) throw DomainError("n must be at least 2");
    const PrimeField& f = omega.res.field;
    int conductor = session_conductor(n, f.q(), omega);
    std::vector<SscDatum> out;
    for (int k = 0; k < f.q() - 1; ++k) {
        int t0 = f.exp(k);
        auto roots = nth_roots(omega.at_twisted_uniformizer(t0, conductor), n, conductor);
        for (int i = 0; i < n; ++i) out.push_back(SscDatum{n, omega, t0, roots[i], i});
    }
    return out;
}

CycloNumber xi(const SscDatum& d, const TameChar& mu) {
    const PrimeField& f = d.field();
    if (!(mu.res.field == f)) throw DomainError("twist character over a different field");
    int conductor = d.zeta.conductor();
    CycloNumber zeta2 = d.zeta * d.zeta;
    int unit = f.inv(d.t0);
    if (d.even() && (d.m() - 1) % 2 == 1) unit = f.reduce(-unit);
    return zeta2 * char_eval(mu.res, unit, conductor) * mu.pi_value;
}

TameChar exterior_char(const SscDatum& d, const TameChar& mu) {
    if (!d.even()) throw DomainError("exterior character is defined for even n only");
    return TameChar{d.omega.res * mu.res.pow(d.m()), xi(d, mu)};
}

}  // namespace ssc
