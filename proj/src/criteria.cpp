#include "qsing/criteria.hpp"

#include <algorithm>
#include <numeric>

namespace qsing {

namespace {

long mod(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

// Lex enumeration of size-s subsets of {0..d-1}; returns false when exhausted.
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

// Residue of -sum of weights outside `support` (sorted indices), mod n.
long complement_target(const CyclicAction& a, const std::vector<int>& support) {
    long s = 0;
    size_t p = 0;
    for (int k = 0; k < a.dim(); ++k) {
        if (p < support.size() && support[p] == k) {
            ++p;
            continue;
        }
        s += a.weight(k);
    }
    return mod(-s, a.order());
}

}  // namespace

std::string verdict_label(Verdict v) {
    switch (v) {
        case Verdict::Gorenstein: return "G";
        case Verdict::NearlyGorensteinNotGorenstein: return "NG";
        case Verdict::NotNearlyGorenstein: return "notNG";
    }
    return "?";
}

bool is_gorenstein(const CyclicAction& a) {
    return a.weight_sum_mod() == 0;
}

ResidueSet reachable_residues(const std::vector<long>& weights,
                              const std::vector<long>& upper_bounds, long n) {
    if (weights.empty() || weights.size() != upper_bounds.size())
        throw EmptyInputError("reachable_residues needs equal-length nonempty inputs");
    ResidueSet set(n);
    set.insert(0);
    for (size_t j = 0; j < weights.size(); ++j) {
        const long w = mod(weights[j], n);
        const long ub = std::min(upper_bounds[j], n);
        if (ub < 1) throw EmptyInputError("upper bounds must be >= 1");
        ResidueSet next(n);
        for (long b = 1; b <= ub; ++b) next.or_rotated(set, (b * w) % n);
        set = next;
    }
    return set;
}

bool trace_contains_monomial(const CyclicAction& a, const ExponentVector& m) {
    const long n = a.order();
    if (static_cast<int>(m.size()) != a.dim())
        throw CriteriaError("monomial dimension mismatch");
    long phase = 0;
    bool all_positive = true;
    bool all_zero = true;
    for (int i = 0; i < a.dim(); ++i) {
        if (m[i] < 0) throw CriteriaError("monomial exponents must be >= 0");
        phase = (phase + mod(m[i], n) * a.weight(i)) % n;
        if (m[i] == 0) all_positive = false;
        else all_zero = false;
    }
    if (all_zero) throw ZeroMonomialError("the unit monomial is not in the maximal ideal");
    if (phase != 0) throw NotInvariantError("monomial is not invariant under the action");
    if (all_positive) return true;

    std::vector<long> weights, bounds;
    std::vector<int> support;
    for (int i = 0; i < a.dim(); ++i)
        if (m[i] > 0) {
            support.push_back(i);
            weights.push_back(a.weight(i));
            bounds.push_back(m[i] + 1);
        }
    const long target = complement_target(a, support);
    return reachable_residues(weights, bounds, n).contains(target);
}

namespace {

// Depth-first enumeration of positive a-tuples on a fixed support, lex order,
// with sum <= n; the reachable set for bounds a_j + 1 is maintained
// incrementally (one rotation per increment of the trailing coordinate).
struct NGSearch {
    long n;
    std::vector<long> tj;   // weights on the support
    long target;
    int s;
    std::vector<long> a;
    std::optional<NGWitness> found;
    const std::vector<int>* support;

    // S: reachable sums over coordinates < depth; sum/cong: partials of a.
    bool descend(int depth, const ResidueSet& S, long sum, long cong) {
        if (depth == s) {
            if (cong % n == 0 && !S.contains(target)) {
                found = NGWitness{*support, a, target, S.to_vector()};
                return true;
            }
            return false;
        }
        const long w = tj[depth];
        const long remaining = s - 1 - depth;  // coordinates still needing >= 1
        ResidueSet T(n);
        T.or_rotated(S, w % n);
        T.or_rotated(S, (2 * w) % n);  // bounds start at a=1 -> b in {1,2}
        for (long av = 1; sum + av + remaining <= n; ++av) {
            if (av > 1) T.or_rotated(S, ((av + 1) * w) % n);
            a[depth] = av;
            if (descend(depth + 1, T, sum + av, cong + av * w)) return true;
        }
        return false;
    }
};

}  // namespace

std::pair<bool, std::optional<NGWitness>> is_nearly_gorenstein(const CyclicAction& a) {
    const long n = a.order();
    const int d = a.dim();
    for (int s = 1; s < d; ++s) {
        std::vector<int> J(s);
        std::iota(J.begin(), J.end(), 0);
        do {
            NGSearch search;
            search.n = n;
            search.s = s;
            search.support = &J;
            search.a.assign(s, 0);
            for (int j : J) search.tj.push_back(a.weight(j));
            search.target = complement_target(a, J);
            ResidueSet origin(n);
            origin.insert(0);
            if (search.descend(0, origin, 0, 0)) return {false, std::move(search.found)};
        } while (next_combination(J, d));
    }
    return {true, std::nullopt};
}

std::optional<RemarkWitness> remark_prefilter(const CyclicAction& a) {
    const long n = a.order();
    const int d = a.dim();
    for (int s = 1; s < d; ++s) {
        std::vector<int> J(s);
        std::iota(J.begin(), J.end(), 0);
        do {
            long g = n;
            for (int j : J) g = std::gcd(g, a.weight(j));
            if (g > 1) {
                long rest = 0;
                size_t p = 0;
                for (int k = 0; k < d; ++k) {
                    if (p < J.size() && J[p] == k) {
                        ++p;
                        continue;
                    }
                    rest += a.weight(k);
                }
                if (rest % g != 0) return RemarkWitness{J, g};
            }
        } while (next_combination(J, d));
    }
    return std::nullopt;
}

Classification classify(const CyclicAction& a) {
    if (is_gorenstein(a)) return {Verdict::Gorenstein, std::nullopt, std::nullopt};
    auto [ng, witness] = is_nearly_gorenstein(a);
    if (ng) return {Verdict::NearlyGorensteinNotGorenstein, std::nullopt, std::nullopt};
    return {Verdict::NotNearlyGorenstein, std::move(witness), std::nullopt};
}

Classification classify(long n, const std::vector<long>& raw_weights) {
    ReductionOutcome outcome = reduce_zero_weights(n, raw_weights);
    if (outcome.kind == ReductionOutcome::Kind::AlreadyReduced)
        return classify(outcome.action);
    // With a zero weight the original ring is a power series extension of the
    // reduced one: it is nearly Gorenstein iff the reduced ring is Gorenstein,
    // and Gorenstein under exactly the same condition (the weight sums agree
    // mod n). So the verdict is Gorenstein or not nearly Gorenstein, never NG.
    Classification c;
    c.verdict = is_gorenstein(outcome.action) ? Verdict::Gorenstein
                                              : Verdict::NotNearlyGorenstein;
    c.via_reduction = outcome.note + " [reduced: " + to_string(outcome.action) + "]";
    return c;
}

std::optional<FamilyPrediction> family_predict(const CyclicAction& a) {
    const long n = a.order();
    const int d = a.dim();
    const auto& t = a.weights();
    const Verdict ng_or_g = is_gorenstein(a) ? Verdict::Gorenstein
                                             : Verdict::NearlyGorensteinNotGorenstein;

    if (d == 2) return FamilyPrediction{ng_or_g, "dimension-two"};
    if (n <= 3) return FamilyPrediction{ng_or_g, "order-at-most-3"};
    if (std::all_of(t.begin(), t.end(), [](long w) { return w == 1; }))
        return FamilyPrediction{ng_or_g, "veronese"};

    // (1,...,1,t_d) with t_d == -d+2 mod n coprime to n
    if (d >= 3 && n >= 3 &&
        std::all_of(t.begin(), t.end() - 1, [](long w) { return w == 1; }) &&
        t.back() == mod(-d + 2, n) && std::gcd(mod(-d + 2, n), n) == 1) {
        return FamilyPrediction{Verdict::NearlyGorensteinNotGorenstein, "ones-then-complement"};
    }

    if (d == 3 && n >= 4 && iso_equivalent(a, CyclicAction(n, {1, n - 1, n - 2})))
        return FamilyPrediction{Verdict::NotNearlyGorenstein, "one-two-back"};

    // gcd construction: d-2 equal weights sharing a divisor m > 2 with n and
    // two weights equal to m + 1, with gcd(m+1, n) = 1; up to permutation.
    if (d >= 3) {
        std::vector<long> sorted = t;
        std::sort(sorted.begin(), sorted.end());
        // candidate value v = m + 1 must occur at least twice
        for (long v : sorted) {
            if (std::count(sorted.begin(), sorted.end(), v) < 2) continue;
            const long m = v - 1;
            if (m <= 2 || n % m != 0 || std::gcd(v, n) != 1) continue;
            std::vector<long> rest = sorted;
            for (int k = 0; k < 2; ++k)
                rest.erase(std::find(rest.begin(), rest.end(), v));
            if (rest.size() != static_cast<size_t>(d - 2)) continue;
            const bool equal_rest =
                std::all_of(rest.begin(), rest.end(), [&](long w) { return w == rest[0]; });
            if (equal_rest && std::gcd(n, rest[0]) == m)
                return FamilyPrediction{Verdict::NotNearlyGorenstein, "gcd-construction"};
        }
    }
    return std::nullopt;
}

}  // namespace qsing
