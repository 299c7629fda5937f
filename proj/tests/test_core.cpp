#include <doctest.h>

#include <limits>

#include "frob/core.hpp"
#include "support.hpp"

using namespace frob;

namespace {

errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const error& e) {
        return e.code();
    }
    FAIL("expected frob::error");
    return errc::invalid_input;
}

} // namespace

TEST_CASE("gcd_all") {
    const std::vector<integer> primes{7, 11, 13};
    const std::vector<integer> single{6};
    const std::vector<integer> row3{322, 654, 765};
    CHECK(gcd_all(primes) == 1);
    CHECK(gcd_all(single) == 6);
    CHECK(gcd_all(row3) == 1);
    CHECK(code_of([] { gcd_all(std::vector<integer>{}); }) == errc::invalid_input);
    CHECK(code_of([] { gcd_all(std::vector<integer>{4, 0}); }) == errc::invalid_input);
}

TEST_CASE("normalize_basis sorts and deduplicates") {
    const Basis b = normalize_basis({13, 7, 11, 7});
    CHECK(b.size() == 3);
    CHECK(b[0] == 7);
    CHECK(b[1] == 11);
    CHECK(b[2] == 13);
    CHECK(b.upper_bound() == 59);
}

TEST_CASE("normalize_basis rejects invalid input") {
    CHECK(code_of([] { normalize_basis({4, 6}); }) == errc::non_coprime);
    CHECK(code_of([] { normalize_basis({0, 3}); }) == errc::invalid_element);
    CHECK(code_of([] { normalize_basis({-5, 3}); }) == errc::invalid_element);
    CHECK(code_of([] { normalize_basis({5, 5}); }) == errc::arity);
    CHECK(code_of([] { normalize_basis({}); }) == errc::arity);

    try {
        normalize_basis({14, 21});
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("gcd = 7, expected 1") != std::string::npos);
    }
}

TEST_CASE("basis containing 1 is accepted") {
    const Basis b = normalize_basis({5, 1});
    CHECK(b.contains_one());
    CHECK(b.upper_bound() == -1);
}

TEST_CASE("normalize_basis is idempotent and preserves gcd 1") {
    for (const auto& raw : frob::testing::random_coprime_bases(200, 300, 6, 7)) {
        const Basis once = normalize_basis(raw);
        const std::vector<integer> again(once.elements().begin(), once.elements().end());
        CHECK(normalize_basis(again) == once);
        CHECK(gcd_all(once.elements()) == 1);
        CHECK(std::is_sorted(once.elements().begin(), once.elements().end()));
    }
}

TEST_CASE("checked arithmetic surfaces overflow") {
    constexpr integer big = std::numeric_limits<integer>::max();
    CHECK(code_of([] { checked_add(big, 1); }) == errc::overflow);
    CHECK(code_of([] { checked_mul(big / 2, 3); }) == errc::overflow);
    CHECK(code_of([] { checked_sub(-big, 2); }) == errc::overflow);
    CHECK(checked_mul(3'000'000'000LL, 3) == 9'000'000'000LL);
    // U itself overflows for huge generators
    CHECK(code_of([] { normalize_basis({3'000'000'000'000LL, 3'000'000'000'001LL}).upper_bound(); }) ==
          errc::overflow);
}

TEST_CASE("witness checker") {
    const std::vector<integer> gens{7, 11, 13};
    CHECK(RepresentationWitness{31, {1, 1, 1}}.check(gens));
    CHECK_FALSE(RepresentationWitness{30, {1, 1, 1}}.check(gens));
    CHECK_FALSE(RepresentationWitness{-4, {2, -2, 0}}.check(gens));
    CHECK_FALSE(RepresentationWitness{7, {1, 0}}.check(gens));
}
