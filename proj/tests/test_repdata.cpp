#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sscgamma/error.hpp"
#include "sscgamma/repdata.hpp"

using namespace ssc;

static CycloNumber z(int order, long k) { return CycloNumber::root_of_unity(order, k); }

TEST_CASE("enumeration examples") {
    PrimeField f2(2);
    auto data = enumerate_ssc(3, make_tame_char(f2, 0));
    REQUIRE(data.size() == 3);
    CHECK(data[0].zeta == CycloNumber(1));
    CHECK(data[1].zeta == z(3, 1));
    CHECK(data[2].zeta == z(3, 2));
    for (const auto& d : data) CHECK(d.t0 == 1);

    PrimeField f3(3);
    auto quad = enumerate_ssc(2, make_tame_char(f3, 1));
    REQUIRE(quad.size() == 4);
    CHECK(quad[0].t0 == 1);
    CHECK(quad[0].zeta == CycloNumber(1));
    CHECK(quad[1].zeta == CycloNumber(-1));
    CHECK(quad[2].t0 == 2);
    CHECK(quad[2].zeta == z(4, 1));
    CHECK(quad[3].zeta == z(4, 3));
}

TEST_CASE("enumeration counts and invariants") {
    for (int q : {2, 3, 5, 7}) {
        PrimeField f(q);
        for (int n = 2; n <= 7; ++n)
            for (int pi_order : {1, 4})
                for (int e : {0, 1}) {
                    auto omega = make_tame_char(f, e, pi_order, pi_order == 1 ? 0 : 1);
                    auto data = enumerate_ssc(n, omega);
                    CHECK(data.size() == static_cast<size_t>(n * (q - 1)));
                    for (size_t i = 0; i < data.size(); ++i) {
                        CHECK_NOTHROW(validate(data[i]));
                        for (size_t j = 0; j < i; ++j)
                            CHECK_FALSE((data[i].t0 == data[j].t0 && data[i].zeta == data[j].zeta));
                    }
                    auto again = make_datum(n, omega, data.back().t0, data.back().zeta_index);
                    CHECK(again.zeta == data.back().zeta);
                }
    }
}

TEST_CASE("make_datum validation") {
    PrimeField f3(3);
    auto omega = make_tame_char(f3, 0);
    CHECK_THROWS_AS(make_datum(4, omega, 0, 0), DomainError);
    CHECK_THROWS_AS(make_datum(4, omega, 1, 4), DomainError);
    CHECK_THROWS_AS(make_datum(1, omega, 1, 0), DomainError);
    SscDatum bad = make_datum(4, omega, 1, 1);
    bad.zeta = z(8, 1);
    CHECK_THROWS_AS(validate(bad), DomainError);
}

TEST_CASE("xi and the exterior character") {
    PrimeField f3(3);
    auto triv = make_tame_char(f3, 0);
    auto d = make_datum(4, triv, 1, 1);
    CHECK(d.zeta == z(4, 1));
    CHECK(xi(d, triv) == CycloNumber(-1));
    auto lam = exterior_char(d, triv);
    CHECK(lam.res.is_trivial());
    CHECK(lam.pi_value == CycloNumber(-1));
    CHECK(lam.eval(2, 1) == xi(d, triv).pow(2));
    CHECK(xi(make_datum(4, triv, 1, 0), triv) == CycloNumber(1));

    auto omega = make_tame_char(f3, 1);
    auto d2 = make_datum(4, omega, 1, 0);
    CHECK(exterior_char(d2, triv).res.exponent == 1);
    CHECK_THROWS_AS(exterior_char(make_datum(3, triv, 1, 0), triv), DomainError);
}

TEST_CASE("xi identities on a grid") {
    for (int q : {3, 5}) {
        PrimeField f(q);
        for (int n : {2, 4, 6})
            for (int pi_order : {1, 4}) {
                auto omega = make_tame_char(f, 1, pi_order, pi_order == 1 ? 0 : 1);
                auto data = enumerate_ssc(n, omega);
                for (const auto& d : data)
                    for (int a = 0; a < q - 1; ++a) {
                        auto mu = make_tame_char(f, a);
                        SscDatum neg = d;
                        neg.zeta = -d.zeta;
                        CHECK(xi(d, mu) == xi(neg, mu));
                        if ((d.omega.res * mu.res.pow(d.m())).is_trivial())
                            CHECK(xi(d, mu).pow(d.m()) == d.omega.pi_value * mu.pi_value.pow(d.m()));
                        CHECK(xi(d, mu).root_exponent().has_value());
                    }
            }
    }
}
