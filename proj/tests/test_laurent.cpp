#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sscgamma/error.hpp"
#include "sscgamma/laurent.hpp"

using ssc::CycloNumber;
using ssc::LaurentPoly;
using ssc::RatFun;

static CycloNumber q_(long a, long b = 1) { return CycloNumber::rational(mpq_class(a, b)); }
static RatFun Zp(long k) { return RatFun::monomial(CycloNumber(1), k); }
static RatFun C(const CycloNumber& c) { return RatFun(c); }

TEST_CASE("laurent arithmetic") {
    LaurentPoly a(-1, {q_(1), q_(2)});
    LaurentPoly b(0, {q_(1), q_(-1)});
    LaurentPoly prod = a * b;
    CHECK(prod.min_deg() == -1);
    CHECK(prod.max_deg() == 1);
    CHECK(prod.coeff(0) == q_(1));
    CHECK(prod.coeff(1) == q_(-2));
    CHECK((a - a).is_zero());
    CHECK(a.eval(q_(2)) == q_(5, 2));
    CHECK(LaurentPoly(0, {q_(0), q_(0), q_(3), q_(0)}).min_deg() == 2);
    auto d = LaurentPoly::divide_exact(prod, b);
    REQUIRE(d.has_value());
    CHECK(*d == a);
    CHECK_FALSE(LaurentPoly::divide_exact(a, b).has_value());
}

TEST_CASE("rational function canonical form") {
    RatFun one_plus_z = C(q_(1)) + Zp(1);
    CHECK(one_plus_z / one_plus_z == C(q_(1)));
    CHECK((one_plus_z / one_plus_z).den().coeffs().size() == 1);
    CHECK(Zp(1) * Zp(-1) == C(q_(1)));
    RatFun lhs = one_plus_z / (C(q_(1)) + C(q_(1, 3)) * Zp(-1));
    RatFun rhs = C(q_(3)) * Zp(1) * one_plus_z / (C(q_(1)) + C(q_(3)) * Zp(1));
    CHECK(lhs == rhs);
    CHECK(lhs.den().min_deg() == 0);
    CHECK(lhs.den().coeff(0) == q_(1));
    RatFun f = (Zp(2) - C(q_(1))) / (Zp(1) - C(q_(1)));
    CHECK(f.den().coeffs().size() == 1);
    CHECK(f == Zp(1) + C(q_(1)));
    CHECK((lhs / rhs) == C(q_(1)));
    CHECK(lhs * lhs.inverse() == C(q_(1)));
    CHECK_THROWS_AS(lhs / RatFun(), ssc::DivisionByZero);
}

TEST_CASE("geometric series tail") {
    RatFun r = ssc::geometric_series_tail(Zp(2), -1);
    CHECK(r == Zp(-2) / (C(q_(1)) - Zp(2)));
    CHECK((C(q_(1)) - Zp(2)) * r == Zp(-2));
    CHECK(ssc::geometric_series_tail(-Zp(1), 0) == C(q_(1)) / (C(q_(1)) + Zp(1)));
    CycloNumber i = CycloNumber::root_of_unity(4, 1);
    RatFun x = RatFun::monomial(i, 1);
    RatFun t = ssc::geometric_series_tail(x, -1);
    CHECK(t == RatFun::monomial(i.inverse(), -1) / (C(q_(1)) - x));
    CHECK((C(q_(1)) - x) * t == x.inverse());
    CHECK_THROWS_AS(ssc::geometric_series_tail(Zp(0), 0), ssc::DomainError);
    CHECK_THROWS_AS(ssc::geometric_series_tail(Zp(-1), 0), ssc::DomainError);
}

TEST_CASE("monomial decomposition") {
    RatFun g = (C(q_(1)) + Zp(1)) / (C(q_(1)) + C(q_(1, 3)) * Zp(-1));
    auto d = ssc::monomial_decompose(g, 3, {q_(-1), q_(1)});
    CHECK(d.c == q_(1));
    CHECK(d.k == 0);
    CHECK(d.p1 == LaurentPoly(0, {q_(1), q_(1)}));
    CHECK(d.p2 == LaurentPoly(0, {q_(1), q_(1)}));
    CHECK(ssc::reassemble(d, 3) == g);

    CycloNumber c = CycloNumber::root_of_unity(3, 1) - CycloNumber::root_of_unity(3, 2);
    auto m = ssc::monomial_decompose(RatFun::monomial(c, 1), 3, {q_(1)});
    CHECK(m.c == c);
    CHECK(m.k == 1);
    CHECK(m.p1 == LaurentPoly(q_(1)));
    CHECK(m.p2 == LaurentPoly(q_(1)));

    auto m2 = ssc::monomial_decompose(RatFun::monomial(q_(5), -3), 5, {});
    CHECK(m2.c == q_(5));
    CHECK(m2.k == -3);

    CHECK_THROWS_AS(ssc::monomial_decompose(C(q_(1)) + Zp(1), 3, {q_(1)}), ssc::DecompositionFailure);
}
