#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sscgamma/converse.hpp"
#include "sscgamma/error.hpp"
#include "sscgamma/serialize.hpp"

using namespace ssc;

static CycloNumber q_(long a, long b = 1) { return CycloNumber::rational(mpq_class(a, b)); }
static RatFun Zp(long k) { return RatFun::monomial(CycloNumber(1), k); }

TEST_CASE("profile examples") {
    PrimeField f2(2);
    auto triv2 = make_tame_char(f2, 0);
    auto d = make_datum(3, triv2, 1, 1);
    auto p = profile(d, AddChar(f2, 1));
    REQUIRE(p.entries.size() == 1);
    CHECK(p.entries[0] == RatFun::monomial(d.zeta * d.zeta * CycloNumber::q_half_power(2, 1), 1));

    PrimeField f3(3);
    auto triv3 = make_tame_char(f3, 0);
    auto d4 = make_datum(4, triv3, 1, 1);
    auto p4 = profile(d4, AddChar(f3, 1));
    REQUIRE(p4.entries.size() == 2);
    // mu_0^2 is trivial for both exponents when q = 3, so both entries take the unramified branch
    CHECK(p4.entries[0] == (RatFun(q_(1)) + Zp(1)) / (RatFun(q_(1)) + RatFun(q_(1, 3)) * Zp(-1)));
    CHECK_FALSE(p4.entries[1].as_monomial().has_value());
    SscDatum neg = d4;
    neg.zeta = -d4.zeta;
    CHECK(dump(to_json(profile(neg, AddChar(f3, 1)))) == dump(to_json(p4)));
}

TEST_CASE("identify examples") {
    PrimeField f2(2);
    auto triv2 = make_tame_char(f2, 0);
    auto d = make_datum(3, triv2, 1, 1);
    auto found = identify(profile(d, AddChar(f2, 1)));
    REQUIRE(found.size() == 1);
    CHECK(found[0].zeta_index == 1);

    PrimeField f3(3);
    auto triv3 = make_tame_char(f3, 0);
    auto d4 = make_datum(4, triv3, 1, 1);
    auto p4 = profile(d4, AddChar(f3, 1));
    auto found4 = identify(p4);
    REQUIRE(found4.size() == 2);
    CHECK(found4[0].t0 == 1);
    CHECK(found4[1].t0 == 1);
    CHECK(found4[0].zeta == -found4[1].zeta);

    p4.entries[1] = RatFun();
    CHECK_THROWS_AS(identify(p4), InconsistentProfile);
}

TEST_CASE("recover examples") {
    PrimeField f2(2);
    auto triv2 = make_tame_char(f2, 0);
    auto d = make_datum(3, triv2, 1, 1);
    auto r = recover_direct(profile(d, AddChar(f2, 1)));
    CHECK(r.t0 == 1);
    CHECK(r.zeta_value == d.zeta);

    PrimeField f3(3);
    auto triv3 = make_tame_char(f3, 0);
    auto r4 = recover_direct(profile(make_datum(4, triv3, 1, 1), AddChar(f3, 1)));
    CHECK(r4.t0 == 1);
    CHECK(r4.zeta_value == q_(-1));

    auto r5 = recover_direct(profile(make_datum(4, triv3, 1, 0), AddChar(f3, 1)));
    CHECK(r5.t0 == 1);
    CHECK(r5.zeta_value == q_(1));

    CHECK_THROWS_AS(recover_direct(profile(make_datum(6, triv3, 1, 0), AddChar(f3, 1))), HypothesisViolated);
    CHECK_THROWS_AS(recover_direct(profile(make_datum(5, triv3, 1, 0), AddChar(f3, 1))), HypothesisViolated);
}

TEST_CASE("recovery agrees with identification") {
    for (auto [n, q] : {std::pair{4, 3}, std::pair{4, 5}, std::pair{3, 3}, std::pair{5, 2}, std::pair{7, 3},
                        std::pair{3, 5}, std::pair{6, 2}})
        for (int pi_order : {1, 4}) {
            PrimeField f(q);
            auto omega = make_tame_char(f, 1, pi_order, pi_order == 1 ? 0 : 1);
            AddChar psi(f, q - 1);
            for (const auto& d : enumerate_ssc(n, omega)) {
                auto p = profile(d, psi);
                auto found = identify(p);
                auto r = recover_direct(p);
                CHECK(recovered_matches(r, d));
                for (const auto& c : found) CHECK(recovered_matches(r, c));
                CHECK(found.size() == (n % 2 == 0 ? 2u : 1u));
            }
        }
}

TEST_CASE("distinguishability reports") {
    PrimeField f3(3);
    auto rep = distinguishability_report(4, make_tame_char(f3, 0), AddChar(f3, 1));
    CHECK(rep.gcd_ok);
    CHECK(rep.classes.size() == 4);
    CHECK(rep.prediction_matched);

    PrimeField f2(2);
    auto rep2 = distinguishability_report(3, make_tame_char(f2, 0), AddChar(f2, 1));
    CHECK(rep2.classes.size() == 3);
    CHECK(rep2.prediction_matched);

    auto rep6 = distinguishability_report(6, make_tame_char(f3, 0), AddChar(f3, 1));
    CHECK_FALSE(rep6.gcd_ok);
    auto again = distinguishability_report(6, make_tame_char(f3, 0), AddChar(f3, 1));
    CHECK(dump(to_json(rep6)) == dump(to_json(again)));
    CHECK(dump(to_json(rep6)).find("hypothesis violated") != std::string::npos);
}
