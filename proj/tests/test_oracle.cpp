#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "qsing/oracle.hpp"

using namespace qsing;
using qsing::testing::for_each_valid_action;

TEST_CASE("oracle trace membership on 1/5(1,2,4)") {
    auto a = make_action(5, {1, 2, 4});
    CHECK(oracle::trace_contains(a, {2, 2, 1}));
    CHECK(!oracle::trace_contains(a, {1, 0, 1}));
    CHECK(oracle::trace_contains(a, {5, 0, 0}));
    CHECK_THROWS_AS(oracle::trace_contains(a, {1, 1, 0}), NotInvariantError);
    CHECK_THROWS_AS(oracle::trace_contains(a, {0, 0, 0}), ZeroMonomialError);
}

TEST_CASE("truncated residue counts") {
    CHECK(oracle::residue_lower_bound(make_action(5, {1, 2, 4}), 20).count == 2);
    CHECK(oracle::residue_lower_bound(make_action(4, {1, 1, 2}), 20).count == 0);
    auto inf = oracle::residue_lower_bound(make_action(8, {1, 1, 4}), 32);
    CHECK(inf.count >= 5);
    CHECK(inf.truncated);
    // the failing set keeps growing with the bound
    CHECK(oracle::residue_lower_bound(make_action(8, {1, 1, 4}), 64).count > inf.count);
}

TEST_CASE("semigroup_members") {
    auto m = oracle::semigroup_members(make_action(4, {1, 3}), 4);
    CHECK(m == std::vector<ExponentVector>{{0, 0}, {1, 1}, {0, 4}, {2, 2}, {4, 0}});
    CHECK(oracle::semigroup_members(make_action(5, {1, 2, 4}), 0) ==
          std::vector<ExponentVector>{{0, 0, 0}});
    CHECK(oracle::semigroup_members(make_action(5, {1, 2, 4}), 2) ==
          std::vector<ExponentVector>{{0, 0, 0}, {1, 0, 1}});
}

TEST_CASE("full-support semigroup members are always in the trace") {
    auto a = make_action(6, {1, 2, 5});
    for (const auto& m : oracle::semigroup_members(a, 12)) {
        bool full = true;
        for (long e : m) full = full && e > 0;
        if (full) CHECK(oracle::trace_contains(a, m));
    }
}

TEST_CASE("oracle agrees with the reachability criterion (exhaustive small range)") {
    for_each_valid_action(6, 2, 3, [](const CyclicAction& a) {
        const long n = a.order();
        const int d = a.dim();
        ExponentVector m(d, 0);
        while (true) {
            long deg = 0, phase = 0;
            for (int k = 0; k < d; ++k) {
                deg += m[k];
                phase += m[k] * a.weight(k);
            }
            if (deg > 0 && phase % n == 0)
                CHECK(oracle::trace_contains(a, m) == trace_contains_monomial(a, m));
            int i = 0;
            while (i < d && m[i] == 2 * n) m[i++] = 0;
            if (i == d) break;
            ++m[i];
        }
    });
}

TEST_CASE("oracle membership is monotone on a fixed support") {
    std::mt19937 rng(4242);
    int done = 0;
    while (done < 200) {
        long n = 2 + rng() % 7;
        int d = 2 + rng() % 2;
        std::vector<long> t(d);
        for (auto& w : t) w = 1 + rng() % (n - 1);
        if (!is_small(n, t)) continue;
        CyclicAction a(n, t);
        ExponentVector m(d);
        long phase = 0, total = 0;
        for (int i = 0; i < d; ++i) {
            m[i] = rng() % (2 * n);
            phase += m[i] * t[i];
            total += m[i];
        }
        if (total == 0 || phase % n != 0) continue;
        ExponentVector m2 = m;
        for (int i = 0; i < d; ++i)
            if (m2[i] > 0) {
                m2[i] += n;
                break;
            }
        if (oracle::trace_contains(a, m)) CHECK(oracle::trace_contains(a, m2));
        ++done;
    }
}
