#pragma once

#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "qsing/action.hpp"

namespace qsing::testing {

// Calls fn on every small action with 2 <= n <= n_max, d_min <= d <= d_max,
// weights in {1..n-1}^d in odometer order (raw, not up to isomorphism).
inline void for_each_valid_action(long n_max, int d_min, int d_max,
                                  const std::function<void(const CyclicAction&)>& fn) {
    for (long n = 2; n <= n_max; ++n) {
        for (int d = d_min; d <= d_max; ++d) {
            std::vector<long> t(d, 1);
            while (true) {
                if (is_small(n, t)) fn(CyclicAction(n, t));
                int i = d - 1;
                while (i >= 0 && t[i] == n - 1) t[i--] = 1;
                if (i < 0) break;
                ++t[i];
            }
        }
    }
}

// Independent oracle for reachable_residues: full box enumeration.
inline std::set<long> brute_reachable(const std::vector<long>& weights,
                                      const std::vector<long>& bounds, long n) {
    std::set<long> out;
    std::vector<long> b(weights.size(), 1);
    while (true) {
        long s = 0;
        for (size_t j = 0; j < b.size(); ++j) s += b[j] * weights[j];
        out.insert(((s % n) + n) % n);
        size_t i = 0;
        while (i < b.size() && b[i] == bounds[i]) b[i++] = 1;
        if (i == b.size()) break;
        ++b[i];
    }
    return out;
}

struct GoldenRow {
    long n;
    std::vector<long> t;
    const char* verdict;
};

// The published d=3 (4<=n<=7) and d=4 (4<=n<=6) classification rows.
inline const std::vector<GoldenRow>& table1_rows() {
    static const std::vector<GoldenRow> rows = {
        {4, {1, 1, 1}, "NG"},    {4, {1, 1, 2}, "G"},     {4, {1, 1, 3}, "NG"},
        {4, {1, 2, 3}, "notNG"}, {5, {1, 1, 1}, "NG"},    {5, {1, 1, 2}, "NG"},
        {5, {1, 1, 3}, "G"},     {5, {1, 1, 4}, "NG"},    {5, {1, 2, 3}, "notNG"},
        {6, {1, 1, 1}, "NG"},    {6, {1, 1, 2}, "NG"},    {6, {1, 1, 3}, "notNG"},
        {6, {1, 1, 4}, "G"},     {6, {1, 1, 5}, "NG"},    {6, {1, 2, 3}, "G"},
        {6, {1, 2, 5}, "notNG"}, {6, {1, 3, 4}, "notNG"}, {6, {1, 3, 5}, "notNG"},
        {7, {1, 1, 1}, "NG"},    {7, {1, 1, 2}, "NG"},    {7, {1, 1, 3}, "notNG"},
        {7, {1, 1, 4}, "NG"},    {7, {1, 1, 5}, "G"},     {7, {1, 1, 6}, "NG"},
        {7, {1, 2, 3}, "notNG"}, {7, {1, 2, 4}, "G"},     {7, {1, 2, 5}, "notNG"},
        {7, {1, 2, 6}, "notNG"},
        {4, {1, 1, 1, 1}, "G"},     {4, {1, 1, 1, 2}, "notNG"}, {4, {1, 1, 1, 3}, "notNG"},
        {4, {1, 1, 2, 2}, "NG"},    {4, {1, 1, 2, 3}, "notNG"}, {4, {1, 1, 3, 3}, "G"},
        {4, {1, 2, 2, 3}, "G"},     {5, {1, 1, 1, 1}, "NG"},    {5, {1, 1, 1, 2}, "G"},
        {5, {1, 1, 1, 3}, "NG"},    {5, {1, 1, 1, 4}, "notNG"}, {5, {1, 1, 2, 2}, "NG"},
        {5, {1, 1, 2, 3}, "NG"},    {5, {1, 1, 2, 4}, "notNG"}, {5, {1, 1, 3, 4}, "NG"},
        {5, {1, 1, 4, 4}, "G"},     {5, {1, 2, 3, 4}, "G"},     {6, {1, 1, 1, 1}, "NG"},
        {6, {1, 1, 1, 2}, "notNG"}, {6, {1, 1, 1, 3}, "G"},     {6, {1, 1, 1, 4}, "notNG"},
        {6, {1, 1, 1, 5}, "notNG"}, {6, {1, 1, 2, 2}, "G"},     {6, {1, 1, 2, 3}, "notNG"},
        {6, {1, 1, 2, 4}, "NG"},    {6, {1, 1, 2, 5}, "notNG"}, {6, {1, 1, 3, 3}, "notNG"},
        {6, {1, 1, 3, 4}, "notNG"}, {6, {1, 1, 3, 5}, "notNG"}, {6, {1, 1, 4, 4}, "NG"},
        {6, {1, 1, 4, 5}, "notNG"}, {6, {1, 1, 5, 5}, "G"},     {6, {1, 2, 2, 3}, "notNG"},
        {6, {1, 2, 2, 5}, "notNG"}, {6, {1, 2, 3, 3}, "notNG"}, {6, {1, 2, 3, 4}, "notNG"},
        {6, {1, 2, 3, 5}, "notNG"}, {6, {1, 2, 4, 5}, "G"},     {6, {1, 3, 3, 4}, "notNG"},
        {6, {1, 3, 3, 5}, "G"},     {6, {1, 3, 4, 4}, "G"},
    };
    return rows;
}

}  // namespace qsing::testing
