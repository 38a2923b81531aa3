#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sscgamma/error.hpp"
#include "sscgamma/gamma.hpp"

using namespace ssc;

static CycloNumber z(int order, long k) { return CycloNumber::root_of_unity(order, k); }
static CycloNumber q_(long a, long b = 1) { return CycloNumber::rational(mpq_class(a, b)); }
static RatFun Zp(long k) { return RatFun::monomial(CycloNumber(1), k); }

TEST_CASE("even closed form examples") {
    PrimeField f3(3);
    AddChar psi(f3, 1);
    auto triv = make_tame_char(f3, 0);
    auto d = make_datum(4, triv, 1, 1);
    RatFun expected = (RatFun(q_(1)) + Zp(1)) / (RatFun(q_(1)) + RatFun(q_(1, 3)) * Zp(-1));
    CHECK(gamma_even(d, triv, psi) == expected);

    auto d2 = make_datum(4, make_tame_char(f3, 1), 1, 0);
    CHECK(gamma_even(d2, triv, psi) == RatFun::monomial(z(3, 1) - z(3, 2), 1));
    CHECK_THROWS_AS(gamma_even(make_datum(3, triv, 1, 0), triv, psi), DomainError);
}

TEST_CASE("odd closed form examples") {
    PrimeField f2(2);
    auto triv2 = make_tame_char(f2, 0);
    AddChar psi2(f2, 1);
    for (int i = 0; i < 3; ++i) {
        auto d = make_datum(3, triv2, 1, i);
        CHECK(gamma_odd(d, triv2, psi2) == RatFun::monomial(d.zeta * d.zeta * CycloNumber::q_half_power(2, 1), 1));
    }
    CHECK(gamma_odd(make_datum(3, triv2, 1, 1), triv2, psi2) ==
          RatFun::monomial(z(3, 2) * CycloNumber::q_half_power(2, 1), 1));
    PrimeField f5(5);
    auto triv5 = make_tame_char(f5, 0);
    CHECK(gamma_odd(make_datum(5, triv5, 1, 0), triv5, AddChar(f5, 1)) == RatFun::monomial(q_(5), 2));
    CHECK_THROWS_AS(gamma_odd(make_datum(4, triv5, 1, 0), triv5, AddChar(f5, 1)), DomainError);
}

TEST_CASE("tate gamma") {
    PrimeField f3(3);
    AddChar psi(f3, 1);
    TameChar quad{MultChar(f3, 1), z(5, 2)};
    CHECK(tate_gamma(quad, psi) == RatFun(CycloNumber::q_half_power(3, -1) * (z(3, 1) - z(3, 2))));
    for (int q : {2, 3, 7}) {
        PrimeField f(q);
        TameChar one{MultChar(f, 0), CycloNumber(1)};
        RatFun expected = RatFun::monomial(CycloNumber::q_half_power(q, -1), -1) * (RatFun(q_(1)) - Zp(1)) /
                          (RatFun(q_(1)) - RatFun(q_(1, q)) * Zp(-1));
        CHECK(tate_gamma(one, AddChar(f, 1)) == expected);
    }
}

TEST_CASE("local factor extraction examples") {
    PrimeField f3(3);
    AddChar psi(f3, 1);
    auto triv = make_tame_char(f3, 0);
    auto d = make_datum(4, triv, 1, 1);
    auto lf = extract_l_eps(gamma_even(d, triv, psi), d, triv);
    RatFun inv_one_plus_z = RatFun(q_(1)) / (RatFun(q_(1)) + Zp(1));
    CHECK(lf.L == inv_one_plus_z);
    CHECK(lf.L_dual == inv_one_plus_z);
    CHECK(lf.epsilon == RatFun(q_(1)));

    auto d2 = make_datum(4, make_tame_char(f3, 1), 1, 0);
    RatFun g2 = gamma_even(d2, triv, psi);
    auto lf2 = extract_l_eps(g2, d2, triv);
    CHECK(lf2.L == RatFun(q_(1)));
    CHECK(lf2.epsilon == g2);

    PrimeField f5(5);
    auto omega = make_tame_char(f5, 2, 4, 1);
    auto d3 = make_datum(5, omega, 3, 2);
    auto mu = make_tame_char(f5, 3);
    RatFun g3 = gamma_odd(d3, mu, AddChar(f5, 2));
    auto lf3 = extract_l_eps(g3, d3, mu);
    CHECK(lf3.L == RatFun(q_(1)));
    CHECK(lf3.L_dual == RatFun(q_(1)));
    CHECK(lf3.epsilon == g3);
}

TEST_CASE("grid laws") {
    for (int q : {2, 3, 5}) {
        PrimeField f(q);
        for (int n : {2, 3, 4, 5, 6})
            for (int pi_order : {1, 4}) {
                auto omega = make_tame_char(f, 1, pi_order, pi_order == 1 ? 0 : 1);
                for (const auto& d : enumerate_ssc(n, omega)) {
                    for (int a = 0; a < q - 1; ++a) {
                        auto mu = make_tame_char(f, a);
                        for (int b = 1; b < q; ++b) {
                            AddChar psi(f, b);
                            RatFun g = gamma_factor(d, mu, psi);
                            auto lf = extract_l_eps(g, d, mu);
                            CHECK(functional_equation_rhs(lf, q) == g);
                            CHECK(lf.epsilon.as_monomial().has_value());
                            if (!d.even()) continue;
                            SscDatum neg = d;
                            neg.zeta = -d.zeta;
                            CHECK(gamma_even(neg, mu, psi) == g);
                            CycloNumber x = xi(d, mu);
                            RatFun tate = RatFun::monomial(x.pow(d.m() - 1) * CycloNumber::q_half_power(q, d.m() - 1),
                                                           d.m() - 1) *
                                          tate_gamma(exterior_char(d, mu), psi);
                            CHECK(tate == g);
                            if (unramified_branch(d, mu)) {
                                CHECK(lf.L == RatFun(q_(1)) / (RatFun(q_(1)) - RatFun::monomial(x, 1)));
                                CHECK(lf.epsilon == RatFun::monomial(
                                                        x.pow(d.m() - 2) * CycloNumber::q_half_power(q, d.m() - 2),
                                                        d.m() - 2));
                            } else {
                                CHECK(lf.L == RatFun(q_(1)));
                                CHECK(lf.epsilon == g);
                            }
                        }
                    }
                }
            }
    }
}
