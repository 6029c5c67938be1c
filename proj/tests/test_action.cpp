#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "qsing/action.hpp"

using namespace qsing;
using qsing::testing::for_each_valid_action;

TEST_CASE("make_action reduces weights mod n and keeps input order") {
    CHECK(make_action(4, {1, 1, 2}).weights() == std::vector<long>{1, 1, 2});
    CHECK(make_action(5, {6, 7, 9}).weights() == std::vector<long>{1, 2, 4});
    CHECK(make_action(5, {2, 1, 4}).weights() == std::vector<long>{2, 1, 4});
}

TEST_CASE("make_action rejects bad inputs") {
    CHECK_THROWS_AS(make_action(1, {1}), BadOrderError);
    CHECK_THROWS_AS(make_action(4, {1, 4, 2}), ZeroWeightError);
    CHECK_THROWS_AS(make_action(4, {}), ActionError);
    try {
        make_action(8, {4, 2, 2});
        FAIL("expected NotSmallError");
    } catch (const NotSmallError& e) {
        CHECK(e.subset == std::vector<int>{1, 2});  // gcd(2,2,8) = 2
    }
    // d = 1 can never be small: the empty (d-1)-subset has gcd n > 1
    CHECK_THROWS_AS(make_action(4, {3}), NotSmallError);
}

TEST_CASE("reduce_zero_weights") {
    auto r = reduce_zero_weights(4, {1, 1, 4});
    CHECK(r.kind == ReductionOutcome::Kind::ReducedAction);
    CHECK(r.action == make_action(4, {1, 1}));
    CHECK(!r.note.empty());

    auto s = reduce_zero_weights(4, {1, 1, 2});
    CHECK(s.kind == ReductionOutcome::Kind::AlreadyReduced);
    CHECK(s.action == make_action(4, {1, 1, 2}));

    CHECK_THROWS_AS(reduce_zero_weights(3, {3, 6}), AllZeroError);
}

TEST_CASE("canonical_form examples") {
    CHECK(canonical_form(make_action(8, {4, 5, 5})) == make_action(8, {1, 1, 4}));
    CHECK(canonical_form(make_action(3, {2, 2, 1})) == make_action(3, {1, 1, 2}));
    CHECK(canonical_form(make_action(5, {1, 2, 4})) == make_action(5, {1, 2, 3}));
}

TEST_CASE("canonical_form of 1/5(1,2,4) against unit-orbit brute force") {
    // all four units of Z/5, sorted images
    std::vector<std::vector<long>> orbit;
    for (long u = 1; u < 5; ++u) {
        std::vector<long> v = {(u * 1) % 5, (u * 2) % 5, (u * 4) % 5};
        std::sort(v.begin(), v.end());
        orbit.push_back(v);
    }
    auto best = *std::min_element(orbit.begin(), orbit.end());
    CHECK(canonical_form(make_action(5, {1, 2, 4})).weights() == best);
}

TEST_CASE("iso_equivalent") {
    CHECK(iso_equivalent(make_action(8, {4, 5, 5}), make_action(8, {1, 1, 4})));
    CHECK(!iso_equivalent(make_action(4, {1, 1, 2}), make_action(4, {1, 2, 3})));
    auto a = make_action(7, {1, 2, 4});
    CHECK(iso_equivalent(a, a));
    CHECK(!iso_equivalent(make_action(4, {1, 3}), make_action(8, {1, 3})));
}

TEST_CASE("canonical_form is idempotent, valid, and unit-stable (exhaustive)") {
    for_each_valid_action(10, 2, 4, [](const CyclicAction& a) {
        const CyclicAction c = canonical_form(a);
        CHECK(canonical_form(c) == c);
        CHECK(iso_equivalent(a, c));
        // smallness survives every unit multiple
        const long n = a.order();
        for (long u = 1; u < n; ++u) {
            if (std::gcd(u, n) != 1) continue;
            std::vector<long> v;
            for (long w : a.weights()) v.push_back((u * w) % n);
            CHECK(is_small(n, v));
        }
    });
}

TEST_CASE("canonical_form idempotence, randomized larger instances") {
    std::mt19937 rng(20240817);
    for (int it = 0; it < 3000; ++it) {
        long n = 2 + rng() % 39;  // up to 40
        int d = 2 + rng() % 5;    // up to 6
        std::vector<long> t(d);
        for (auto& w : t) w = 1 + rng() % (n - 1);
        if (!is_small(n, t)) continue;
        CyclicAction a(n, t);
        CyclicAction c = canonical_form(a);
        CHECK(canonical_form(c) == c);
        CHECK(iso_equivalent(a, c));
    }
}
