#include <doctest.h>

#include "frob/oracle.hpp"
#include "frob/representability.hpp"
#include "frob/sequential.hpp"
#include "support.hpp"

using namespace frob;

TEST_CASE("f indicator") {
    CHECK(f_indicator(3, 6) == 0);
    CHECK(f_indicator(3, 7) == -1); // 3/7 - 1/2 = -1/14
    CHECK(f_indicator(5, 3) == -1); // R < alpha
    CHECK(f_indicator(3, 3) == 0);
    CHECK_THROWS_AS(f_indicator(3, 0), error);
}

TEST_CASE("f indicator range and divisibility") {
    for (integer alpha = 2; alpha <= 40; ++alpha)
        for (integer R = 1; R <= 400; ++R) {
            const int f = f_indicator(alpha, R);
            CHECK((f == 0 || f == -1));
            CHECK((f == 0) == (R >= alpha && R % alpha == 0));
        }
}

TEST_CASE("N indicator") {
    CHECK(n_indicator(Rational(0)) == 1);
    CHECK(n_indicator(Rational(-1, 2)) == 0);
    CHECK(n_indicator(Rational(1)) == 0);
    CHECK(n_indicator(Rational(7)) == 0); // outside [-1, 1]: exact zero test still applies
}

TEST_CASE("H for two generators") {
    CHECK(h_two(8, 3, 5) == 0);
    CHECK(h_two(7, 3, 5) != 0);
    CHECK(h_two(6, 3, 5) == 0);
    // 7 = 1*5 + 2: f(3,7) f(5,7) * (floor(2/3)*3 - 2) = (-1)(-1)(-2)
    CHECK(h_two(7, 3, 5) == -2);
    CHECK_THROWS_AS(h_two(0, 3, 5), error);
    CHECK_THROWS_AS(h_two(4, 5, 3), error);
}

TEST_CASE("H can exceed the unit interval when nonzero") {
    // residue term is -((R mod b2) mod b1), which reaches magnitude b1 - 1
    const Rational h = h_two(9, 5, 11);
    CHECK(h != 0);
    CHECK(abs(h) >= 1);
}

TEST_CASE("H over a general basis") {
    const Basis b = normalize_basis({7, 11, 13});
    CHECK(h_general(30, b) != 0);
    CHECK(h_general(31, b) == 0);
    CHECK(h_general(14, b) == 0);
    CHECK_FALSE(h_general_is_zero(30, b));
    CHECK(h_general_is_zero(31, b));
    CHECK(h_general(7, normalize_basis({3, 5})) == h_two(7, 3, 5));
}

TEST_CASE("H vanishes exactly on representable integers") {
    std::size_t checked = 0;
    for (const auto& raw : testing::random_coprime_bases(60, 60, 4, 77)) {
        const Basis b = normalize_basis(raw);
        const auto table = sieve(b, b.upper_bound());
        for (integer R = 1; R <= table.limit(); ++R) {
            REQUIRE_MESSAGE(h_general_is_zero(R, b) == table[R], "basis {" << join(b.elements()) << "} R=" << R);
            ++checked;
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("short-circuit zero test agrees with the full exact product") {
    for (const auto& raw : testing::random_coprime_bases(40, 14, 4, 5)) {
        const Basis b = normalize_basis(raw);
        for (integer R = 1; R <= std::min<integer>(b.upper_bound(), 60); ++R) {
            const Rational full = h_general(R, b);
            CHECK_MESSAGE((full == 0) == h_general_is_zero(R, b), "basis {" << join(b.elements()) << "} R=" << R);
            CHECK((full == 0) == testing::enumerate_representable(R, b.elements()));
        }
    }
}

TEST_CASE("delta marks non-representable integers") {
    const Basis b35 = normalize_basis({3, 5});
    CHECK(delta(7, b35) == 1);
    CHECK(delta(6, b35) == 0);
    CHECK(delta(30, normalize_basis({7, 11, 13})) == 1);
    CHECK_THROWS_AS(delta(0, b35), error);
    CHECK_THROWS_AS(delta(8, b35), error);
}

TEST_CASE("sequential trace") {
    const auto t = sequential_trace(normalize_basis({3, 5}), true);
    CHECK(t.upper == 7);
    CHECK(t.deltas == std::vector<int>{1, 1, 0, 1, 0, 0, 1});
    CHECK(t.result == 7);
    REQUIRE(t.h_values);
    for (std::size_t i = 0; i < t.deltas.size(); ++i)
        CHECK(((*t.h_values)[i] != 0) == (t.deltas[i] == 1));

    const auto t23 = sequential_trace(normalize_basis({2, 3}));
    CHECK(t23.deltas == std::vector<int>{1});
    CHECK(t23.result == 1);

    CHECK(sequential_trace(normalize_basis({7, 11, 13})).result == 30);
    CHECK_THROWS_AS(sequential_trace(normalize_basis({1, 3})), error);
}

TEST_CASE("frobenius_sequential examples") {
    CHECK(frobenius_sequential(normalize_basis({3, 5})).value == 7);
    CHECK(frobenius_sequential(normalize_basis({7, 11, 13})).value == 30);
    CHECK(frobenius_sequential(normalize_basis({2, 3})).value == 1);
    CHECK(frobenius_sequential(normalize_basis({3, 4, 5})).value == 2);
    CHECK_THROWS_AS(frobenius_sequential(normalize_basis({1, 3})), error);
}

TEST_CASE("early-stopping sum, full trace, parallel modes and the sieve agree") {
    for (const auto& raw : testing::random_coprime_bases(120, 90, 5, 303)) {
        const Basis b = normalize_basis(raw);
        const integer g = frobenius_oracle(b);
        INFO("basis {" << join(b.elements()) << "}");
        CHECK(frobenius_sequential(b).value == g);
        CHECK(frobenius_sequential(b, ScanMode::parallel).value == g);
        const auto serial = sequential_trace(b);
        const auto parallel = sequential_trace(b, false, ScanMode::parallel);
        CHECK(serial.result == g);
        CHECK(serial.deltas == parallel.deltas);
    }
}
