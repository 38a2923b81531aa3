#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sscgamma/error.hpp"
#include "sscgamma/finite_field.hpp"
#include "sscgamma/js_oracle.hpp"
#include "sscgamma/matfq.hpp"

#include <random>
#include <set>

using namespace ssc;

static MatFq mat(int q, std::vector<std::vector<int>> rows) {
    MatFq a(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), q);
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows[i].size(); ++j) a.set(i, j, rows[i][j]);
    return a;
}

TEST_CASE("bruhat examples") {
    auto id = MatFq::identity(3, 5);
    auto b = bruhat_decompose(id);
    CHECK(b.u1 == id);
    CHECK(b.w == id);
    CHECK(b.d == id);
    CHECK(b.u2 == id);

    auto anti = mat(3, {{0, 1}, {1, 0}});
    auto b2 = bruhat_decompose(anti);
    CHECK(b2.w == anti);
    CHECK(b2.d.is_identity());
    CHECK(b2.u1.is_identity());
    CHECK(b2.u2.is_identity());

    auto b3 = bruhat_decompose(mat(3, {{0, 1}, {2, 0}}));
    CHECK(b3.w == anti);
    CHECK(b3.d == MatFq::diagonal({2, 1}, 3));

    CHECK_THROWS_AS(bruhat_decompose(mat(3, {{1, 2}, {2, 1}})), DomainError);
}

TEST_CASE("bruhat reconstruction and uniqueness") {
    std::mt19937 rng(7);
    for (auto [m, q] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{2, 5}}) {
        auto gl = enumerate_gl(m, q);
        CHECK(mpz_class(static_cast<long>(gl.size())) == group_orders(m, q).gl);
        auto unip = enumerate_upper_unipotent(m, q);
        std::uniform_int_distribution<size_t> pick(0, unip.size() - 1);
        for (const auto& g : gl) {
            auto b = bruhat_decompose(g);
            CHECK(b.u1 * b.w * b.d * b.u2 == g);
            CHECK(b.u1.is_upper_unipotent());
            CHECK(b.u2.is_upper_unipotent());
            CHECK(b.w.as_permutation().has_value());
            CHECK(b.d.is_diagonal());
            CHECK(b.d.det() != 0);
            auto other = bruhat_decompose(unip[pick(rng)] * g * unip[pick(rng)]);
            CHECK(other.w == b.w);
            CHECK(other.d == b.d);
        }
    }
}

TEST_CASE("matrix basics") {
    auto a = mat(5, {{1, 2, 0}, {0, 3, 1}, {4, 0, 1}});
    auto inv = a.inverse();
    REQUIRE(inv.has_value());
    CHECK((a * *inv).is_identity());
    CHECK(a.det() == (1 * 3 * 1 + 2 * 1 * 4 - 0) % 5);
    CHECK_FALSE(mat(2, {{1, 1}, {1, 1}}).inverse().has_value());
    CHECK(block_antidiag(3, 3, 2).is_identity());
    CHECK(block_antidiag(2, 1, 3) == mat(3, {{0, 1}, {1, 0}}));
    CHECK(block_antidiag(3, 1, 2) == mat(2, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
}

TEST_CASE("interleaving conjugates block antidiagonals") {
    for (int m : {1, 2, 3})
        for (int l = 1; l <= m; ++l) {
            MatFq s = interleave_permutation(m, 3);
            MatFq w = block_antidiag(m, l, 3);
            MatFq big(2 * m, 2 * m, 3);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    big.set(i, j, w(i, j));
                    big.set(m + i, m + j, w(i, j));
                }
            CHECK(s * big * s.transpose() == block_antidiag(2 * m, 2 * l, 3));
        }
}

TEST_CASE("budget") {
    CHECK_THROWS_AS(enumerate_gl(4, 5), BudgetExceeded);
    CHECK(enumeration_budget() > 0);
}
