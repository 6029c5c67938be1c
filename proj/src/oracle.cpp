#include "qsing/oracle.hpp"

#include <algorithm>

namespace qsing {
namespace oracle {

namespace {

long mod(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace

bool trace_contains(const CyclicAction& a, const ExponentVector& m) {
    const long n = a.order();
    const int d = a.dim();
    if (static_cast<int>(m.size()) != d) throw CriteriaError("monomial dimension mismatch");
    long phase = 0;
    bool all_zero = true;
    for (int i = 0; i < d; ++i) {
        if (m[i] < 0) throw CriteriaError("monomial exponents must be >= 0");
        phase = (phase + mod(m[i], n) * a.weight(i)) % n;
        if (m[i] != 0) all_zero = false;
    }
    if (all_zero) throw ZeroMonomialError("the unit monomial is not in the maximal ideal");
    if (phase != 0) throw NotInvariantError("monomial is not invariant under the action");

    // v ranges over [-1, m_i - 1]^d; u = m - v is then automatically >= 1 and
    // invariant whenever v is invariant.
    ExponentVector v(d, -1);
    while (true) {
        long vphase = 0;
        for (int i = 0; i < d; ++i) vphase += v[i] * a.weight(i);
        if (mod(vphase, n) == 0) return true;
        int i = 0;
        while (i < d && v[i] == m[i] - 1) v[i++] = -1;
        if (i == d) return false;
        ++v[i];
    }
}

TruncatedCount residue_lower_bound(const CyclicAction& a, long degree_bound) {
    const long n = a.order();
    const int d = a.dim();
    unsigned long long misses = 0;
    ExponentVector m(d, 0);
    while (true) {
        long deg = 0, phase = 0;
        for (int k = 0; k < d; ++k) {
            deg += m[k];
            phase += m[k] * a.weight(k);
        }
        if (deg > 0 && mod(phase, n) == 0 && !trace_contains(a, m)) ++misses;
        // odometer under the degree bound
        int i = 0;
        while (i < d) {
            if (deg + 1 <= degree_bound) {
                ++m[i];
                break;
            }
            deg -= m[i];
            m[i++] = 0;
        }
        if (i == d) break;
    }
    const bool unit_outside = !is_gorenstein(a);
    return {misses + (unit_outside ? 1u : 0u), true};
}

std::vector<ExponentVector> semigroup_members(const CyclicAction& a, long degree_bound) {
    const long n = a.order();
    const int d = a.dim();
    std::vector<ExponentVector> out;
    ExponentVector e(d, 0);
    // collect, then sort graded-lex
    std::vector<ExponentVector> all;
    while (true) {
        long phase = 0;
        for (int k = 0; k < d; ++k) phase += e[k] * a.weight(k);
        if (mod(phase, n) == 0) all.push_back(e);
        int i = 0;
        long deg = 0;
        for (int k = 0; k < d; ++k) deg += e[k];
        while (i < d) {
            if (deg + 1 <= degree_bound) {
                ++e[i];
                break;
            }
            deg -= e[i];
            e[i++] = 0;
        }
        if (i == d) break;
    }
    std::sort(all.begin(), all.end(), [](const ExponentVector& x, const ExponentVector& y) {
        long dx = 0, dy = 0;
        for (long v : x) dx += v;
        for (long v : y) dy += v;
        if (dx != dy) return dx < dy;
        return x < y;
    });
    return all;
}

}  // namespace oracle
}  // namespace qsing
