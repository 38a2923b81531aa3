#include "sscgamma/gamma.hpp"

#include "sscgamma/error.hpp"

namespace ssc {

int twist_conductor(const SscDatum& d, const TameChar& mu) {
    return static_cast<int>(lcm_l(lcm_l(d.zeta.conductor(), mu.pi_value.conductor()), lcm_l(d.q(), d.q() - 1)));
}

RatFun unramified_ratio(const CycloNumber& x, int q) {
    CycloNumber one = CycloNumber::rational(1, x.conductor());
    LaurentPoly num(0, {one, -x});
    LaurentPoly den(-1, {-(x.inverse() * CycloNumber::rational(mpq_class(1, q))), one});
    return RatFun(num, den);
}

namespace {

// (x q^(1/2) Z)^k
RatFun scaled_power(const CycloNumber& x, int q, long k) {
    return RatFun::monomial(x.pow(k) * CycloNumber::q_half_power(q, k), k);
}

// q^(-1/2) sum_lambda psi(lambda) chi(lambda)^-1
CycloNumber normalized_character_sum(const MultChar& chi, const AddChar& psi, int conductor) {
    const int q = chi.field.q();
    CycloNumber acc = CycloNumber::rational(0, conductor);
    MultChar inv = chi.inverse();
    for (int x = 1; x < q; ++x) acc += char_eval(psi, x, conductor) * char_eval(inv, x, conductor);
    return acc * CycloNumber::q_half_power(q, -1);
}

}  // namespace

RatFun tate_gamma(const TameChar& lambda, const AddChar& psi) {
    const int q = psi.field.q();
    int conductor = static_cast<int>(lcm_l(lambda.pi_value.conductor(), lcm_l(q, q - 1)));
    if (!lambda.res.is_trivial()) return RatFun(normalized_character_sum(lambda.res, psi, conductor));
    const CycloNumber x = lambda.pi_value.embed(conductor);
    return scaled_power(x, q, -1) * unramified_ratio(x, q);
}

bool unramified_branch(const SscDatum& d, const TameChar& mu) {
    return (d.omega.res * mu.res.pow(d.m())).is_trivial();
}

RatFun gamma_even(const SscDatum& d, const TameChar& mu, const AddChar& psi) {
    if (!d.even()) throw DomainError("gamma_even needs even n");
    const int q = d.q();
    const long m = d.m();
    const int conductor = twist_conductor(d, mu);
    const CycloNumber x = xi(d, mu).embed(conductor);
    if (!unramified_branch(d, mu)) {
        MultChar chi = d.omega.res * mu.res.pow(m);
        return scaled_power(x, q, m - 1) * RatFun(normalized_character_sum(chi, psi, conductor));
    }
    return scaled_power(x, q, m - 2) * unramified_ratio(x, q);
}

RatFun gamma_odd(const SscDatum& d, const TameChar& mu, const AddChar& psi) {
    if (d.even()) throw DomainError("gamma_odd needs odd n");
    if (!(psi.field == d.field())) throw DomainError("additive character over a different field");
    const int conductor = twist_conductor(d, mu);
    CycloNumber base = mu.at_twisted_uniformizer(d.t0, conductor) * d.zeta * d.zeta;
    return scaled_power(base.embed(conductor), d.q(), d.m());
}

RatFun gamma_factor(const SscDatum& d, const TameChar& mu, const AddChar& psi) {
    return d.even() ? gamma_even(d, mu, psi) : gamma_odd(d, mu, psi);
}

std::vector<CycloNumber> l_factor_candidates(const SscDatum& d, const TameChar& mu) {
    if (!d.even()) return {};
    const int m = d.m();
    const int conductor = static_cast<int>(lcm_l(twist_conductor(d, mu), m));
    const CycloNumber x = xi(d, mu).embed(conductor);
    const CycloNumber xinv = x.inverse();
    std::vector<CycloNumber> out;
    for (int i = 0; i < m; ++i) out.push_back(x * CycloNumber::root_of_unity(m, i, conductor));
    for (int i = 0; i < m; ++i) out.push_back(xinv * CycloNumber::root_of_unity(m, i, conductor));
    return out;
}

LocalFactors extract_l_eps(const RatFun& gamma, const SscDatum& d, const TameChar& mu) {
    auto dec = monomial_decompose(gamma, d.q(), l_factor_candidates(d, mu));
    if (!d.even() && (dec.p1.coeffs().size() != 1 || dec.p2.coeffs().size() != 1))
        throw DecompositionFailure("odd-rank gamma factor has a nontrivial L-factor");
    LocalFactors f;
    f.gamma = gamma;
    CycloNumber one(1L);
    f.L = RatFun(LaurentPoly(one), dec.p1);
    f.L_dual = RatFun(LaurentPoly(one), dec.p2);
    f.epsilon = RatFun::monomial(dec.c, dec.k);
    f.p1 = dec.p1;
    f.p2 = dec.p2;
    return f;
}

RatFun functional_equation_rhs(const LocalFactors& f, int q) {
    return f.epsilon * f.L_dual.substitute_inverse(CycloNumber::rational(mpq_class(1, q))) / f.L;
}

}  // namespace ssc
