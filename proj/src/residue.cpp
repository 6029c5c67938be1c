#include "qsing/residue.hpp"

#include <numeric>

namespace qsing {

namespace {

long mod(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

bool next_combination(std::vector<int>& c, int d) {
    const int s = static_cast<int>(c.size());
    for (int i = s - 1; i >= 0; --i) {
        if (c[i] < d - (s - i)) {
            ++c[i];
            for (int j = i + 1; j < s; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Sweep over cap vectors c in {1..n-1}^J, lex order, carrying the reachable
// set for prefix bounds c_j + 1. Leaf handling decides finite vs infinite.
struct CapSweep {
    long n;
    int d;
    std::vector<long> tj;
    const std::vector<int>* support;
    long target;
    std::vector<long> caps;
    unsigned long long count = 0;
    std::vector<ExponentVector> failing;
    std::optional<InfinityWitness> infinity;

    bool sweep(int depth, const ResidueSet& S, long cong) {
        const int s = static_cast<int>(tj.size());
        if (depth == s) return leaf(S, cong);
        const long w = tj[depth];
        ResidueSet T(n);
        T.or_rotated(S, w % n);
        T.or_rotated(S, (2 * w) % n);  // cap 1 -> bound 2
        for (long c = 1; c < n; ++c) {
            if (c > 1) T.or_rotated(S, ((c + 1) * w) % n);
            caps[depth] = c;
            if (sweep(depth + 1, T, cong + c * w)) return true;
        }
        return false;
    }

    bool leaf(const ResidueSet& S, long cong) {
        if (S.contains(target)) return false;  // member of tr(omega)
        const int s = static_cast<int>(tj.size());
        std::vector<int> sat;
        for (int i = 0; i < s; ++i)
            if (caps[i] == n - 1) sat.push_back(i);
        if (sat.empty()) {
            if (cong % n != 0) return false;  // not an invariant monomial
            ExponentVector e(d, 0);
            for (int i = 0; i < s; ++i) e[(*support)[i]] = caps[i];
            failing.push_back(std::move(e));
            ++count;
            return false;
        }
        // Fiber over a saturated cap: the saturated exponents range over an
        // infinite progression; it is nonempty iff g | sum of the fixed part.
        long g = n;
        for (int i : sat) g = std::gcd(g, tj[i]);
        long fixed = 0;
        size_t p = 0;
        for (int i = 0; i < s; ++i) {
            if (p < sat.size() && sat[p] == i) {
                ++p;
                continue;
            }
            fixed += caps[i] * tj[i];
        }
        if (fixed % g == 0) {
            infinity = InfinityWitness{*support, caps, (*support)[sat[0]]};
            return true;
        }
        return false;
    }
};

}  // namespace

ResidueValue residue(const CyclicAction& a) {
    ResidueValue out;
    if (is_gorenstein(a)) return out;  // 0, empty ledger
    const long n = a.order();
    const int d = a.dim();
    unsigned long long count = 0;
    std::vector<ExponentVector> ledger;
    for (int s = 1; s < d; ++s) {
        std::vector<int> J(s);
        std::iota(J.begin(), J.end(), 0);
        do {
            CapSweep sweep;
            sweep.n = n;
            sweep.d = d;
            sweep.support = &J;
            sweep.caps.assign(s, 0);
            for (int j : J) sweep.tj.push_back(a.weight(j));
            long rest = 0;
            size_t p = 0;
            for (int k = 0; k < d; ++k) {
                if (p < J.size() && J[p] == k) {
                    ++p;
                    continue;
                }
                rest += a.weight(k);
            }
            sweep.target = mod(-rest, n);
            ResidueSet origin(n);
            origin.insert(0);
            if (sweep.sweep(0, origin, 0)) {
                out.infinite = true;
                out.witness = std::move(sweep.infinity);
                out.failing.clear();
                return out;
            }
            count += sweep.count;
            for (auto& e : sweep.failing) ledger.push_back(std::move(e));
        } while (next_combination(J, d));
    }
    out.value = 1 + count;  // the unit monomial contributes the +1
    out.failing = std::move(ledger);
    return out;
}

long residue_family_expected(long n, long m) {
    if (n < 3 || m < 1 || m >= (n + 1) / 2 || std::gcd(n, m) != 1)
        throw HypothesisViolatedError("need gcd(n,m)=1, n>=3, 1<=m<ceil(n/2)");
    return m;
}

}  // namespace qsing
