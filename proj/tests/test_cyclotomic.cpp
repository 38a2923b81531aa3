#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sscgamma/cyclotomic.hpp"
#include "sscgamma/error.hpp"

using ssc::CycloNumber;

static CycloNumber z(int order, long k) { return CycloNumber::root_of_unity(order, k); }

TEST_CASE("cyclotomic polynomials") {
    CHECK(ssc::cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(ssc::cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(ssc::cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(ssc::cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n : {15, 30, 105, 120, 168})
        CHECK(static_cast<long>(ssc::cyclotomic_polynomial(n).size()) - 1 == ssc::euler_phi(n));
}

TEST_CASE("small identities") {
    CHECK(z(4, 1) * z(4, 1) == CycloNumber(-1));
    CHECK(z(3, 1) + z(3, 2) == CycloNumber(-1));
    CHECK((z(3, 1) - z(3, 2)).conjugate() == z(3, 2) - z(3, 1));
    CHECK(z(1, 0) == CycloNumber(1));
    CHECK(z(2, 1) == CycloNumber(-1));
}

TEST_CASE("embedding") {
    CHECK(z(3, 1).embed(12) == CycloNumber::root_of_unity(12, 4));
    CHECK(CycloNumber(1).embed(35) == CycloNumber(1));
    CHECK(CycloNumber(-1).embed(8) == CycloNumber::root_of_unity(8, 4));
    CHECK(CycloNumber(-1).embed(8).root_exponent() == 4);
    CHECK_THROWS_AS(z(3, 1).embed(10), ssc::DomainError);
    auto x = (z(5, 2) + CycloNumber::rational(mpq_class(3, 7))).embed(60);
    CHECK(x.conductor() == 60);
    CHECK(x.reduce_conductor().conductor() == 5);
    CHECK(x.restrict_to(15).embed(60) == x);
    CHECK_FALSE(z(8, 1).embed(24).lies_in(12));
    CHECK(z(4, 1).embed(24).reduce_conductor().conductor() == 4);
    CHECK(z(6, 1).reduce_conductor().conductor() == 3);
}

TEST_CASE("mixed conductors") {
    auto s = z(3, 1) + z(4, 1);
    CHECK(s.conductor() == 12);
    CHECK(s - z(4, 1) == z(3, 1));
    CHECK(z(3, 1) * z(4, 1) == CycloNumber::root_of_unity(12, 7));
}

TEST_CASE("inversion") {
    for (int n : {5, 7, 12, 15, 24, 30}) {
        auto x = z(n, 1) + CycloNumber(2) + z(n, 3) * CycloNumber::rational(mpq_class(-5, 3));
        auto y = x.inverse();
        CHECK(x * y == CycloNumber(1));
        CHECK(y.inverse() == x);
    }
    CHECK(z(7, 3).inverse() == z(7, 4));
    CHECK_THROWS_AS(CycloNumber(0).inverse(), ssc::DivisionByZero);
}

TEST_CASE("formal square root") {
    auto r = CycloNumber::q_half_power(3, 1);
    CHECK(r.has_sqrt_part());
    CHECK(r * r == CycloNumber(3));
    CHECK(CycloNumber::q_half_power(3, -1) * r == CycloNumber(1));
    CHECK(CycloNumber::q_half_power(5, -3) == CycloNumber::q_half_power(5, 3).inverse());
    CHECK(CycloNumber::q_half_power(2, 4) == CycloNumber(4));
    // sqrt(3) is (zeta_12 - zeta_12^5 + ...) in Q(zeta_12), but the formal symbol stays separate
    auto x = z(3, 1) - z(3, 2);  // equals i*sqrt(3)
    CHECK(x != CycloNumber::q_half_power(3, 1) * z(4, 1));
    auto w = (x + CycloNumber::q_half_power(3, 1) * z(4, 1)).embed(12);
    auto w2 = x.embed(12) - CycloNumber::q_half_power(3, 1) * z(4, 1);
    CHECK_FALSE(w.is_zero());
    CHECK((w * w2).is_zero());
    CHECK_THROWS_AS(w.inverse(), ssc::DegenerateExtension);
    auto g = (x + CycloNumber::q_half_power(3, 1) * CycloNumber(2)).embed(15);
    CHECK(g * g.inverse() == CycloNumber(1));
    CHECK(r.conjugate() == r);
}

TEST_CASE("roots of unity and powers") {
    for (int d : {1, 2, 3, 4, 6, 10, 12}) {
        auto r = z(d, 1);
        CHECK(r.pow(d) == CycloNumber(1));
        for (int e = 1; e < d; ++e) CHECK(r.pow(e) != CycloNumber(1));
        CHECK(r.pow(-1) == r.conjugate());
    }
    CHECK(z(9, 4).root_exponent() == 4);
    CHECK_FALSE((z(9, 4) * CycloNumber(2)).root_exponent().has_value());
}

TEST_CASE("conjugation is a multiplicative involution") {
    auto a = z(15, 2) + CycloNumber::rational(mpq_class(1, 2)) * z(15, 7);
    auto b = z(15, 11) - CycloNumber(3);
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK(a.conjugate().conjugate() == a);
}

TEST_CASE("coefficient round trip") {
    auto a = z(12, 5) * CycloNumber::rational(mpq_class(2, 9)) + CycloNumber::q_half_power(7, 3) * z(12, 1);
    auto b = CycloNumber::from_coeffs(a.conductor(), a.coeffs(), a.sqrt_part(), a.q_tag());
    CHECK(a == b);
    CHECK(a.q_tag() == 7);
}
