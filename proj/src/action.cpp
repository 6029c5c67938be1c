#include "qsing/action.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qsing {

namespace {

long mod(long x, long n) {
    long r = x % n;
    return r < 0 ? r + n : r;
}

}  // namespace

bool is_small(long n, const std::vector<long>& weights) {
    const int d = static_cast<int>(weights.size());
    for (int omit = 0; omit < d; ++omit) {
        long g = n;
        for (int j = 0; j < d; ++j)
            if (j != omit) g = std::gcd(g, mod(weights[j], n));
        if (g != 1) return false;
    }
    return true;
}

CyclicAction::CyclicAction(long n, const std::vector<long>& raw_weights) : n_(n) {
    if (n < 2) throw BadOrderError("group order must be at least 2, got " + std::to_string(n));
    if (raw_weights.empty()) throw ActionError("weight vector must be nonempty");
    t_.reserve(raw_weights.size());
    for (long w : raw_weights) {
        long r = mod(w, n);
        if (r == 0)
            throw ZeroWeightError("weight " + std::to_string(w) +
                                  " is 0 mod n; route through reduce_zero_weights");
        t_.push_back(r);
    }
    const int d = dim();
    for (int omit = 0; omit < d; ++omit) {
        long g = n;
        std::vector<int> subset;
        for (int j = 0; j < d; ++j)
            if (j != omit) {
                g = std::gcd(g, t_[j]);
                subset.push_back(j);
            }
        if (g != 1) {
            std::ostringstream msg;
            msg << "action is not small: gcd of weights {";
            for (size_t k = 0; k < subset.size(); ++k)
                msg << (k ? "," : "") << t_[subset[k]];
            msg << "} with n=" << n << " is " << g;
            throw NotSmallError(msg.str(), std::move(subset));
        }
    }
}

long CyclicAction::weight_sum_mod() const {
    long s = 0;
    for (long w : t_) s = (s + w) % n_;
    return s;
}

CyclicAction make_action(long n, const std::vector<long>& raw_weights) {
    return CyclicAction(n, raw_weights);
}

ReductionOutcome reduce_zero_weights(long n, const std::vector<long>& raw_weights) {
    if (n < 2) throw BadOrderError("group order must be at least 2, got " + std::to_string(n));
    std::vector<long> surviving;
    for (long w : raw_weights)
        if (mod(w, n) != 0) surviving.push_back(w);
    if (surviving.empty()) throw AllZeroError("every weight is 0 mod n: the action is trivial");
    if (surviving.size() == raw_weights.size())
        return {ReductionOutcome::Kind::AlreadyReduced, CyclicAction(n, surviving), ""};
    return {ReductionOutcome::Kind::ReducedAction, CyclicAction(n, surviving),
            "zero weights stripped: the original ring is nearly Gorenstein iff "
            "the reduced ring is Gorenstein"};
}

CyclicAction canonical_form(const CyclicAction& a) {
    const long n = a.order();
    std::vector<long> best;
    for (long u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        std::vector<long> v;
        v.reserve(a.dim());
        for (long w : a.weights()) v.push_back((u * w) % n);
        std::sort(v.begin(), v.end());
        if (best.empty() || v < best) best = std::move(v);
    }
    return CyclicAction(n, best);
}

bool iso_equivalent(const CyclicAction& a, const CyclicAction& b) {
    if (a.order() != b.order() || a.dim() != b.dim()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::string to_string(const CyclicAction& a) {
    std::ostringstream out;
    out << "1/" << a.order() << "(";
    for (int i = 0; i < a.dim(); ++i) out << (i ? "," : "") << a.weight(i);
    out << ")";
    return out.str();
}

}  // namespace qsing
