#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsing {

struct ActionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BadOrderError : ActionError {
    using ActionError::ActionError;
};

struct ZeroWeightError : ActionError {
    using ActionError::ActionError;
};

struct AllZeroError : ActionError {
    using ActionError::ActionError;
};

// Smallness failure; `subset` holds the offending (d-1)-subset of indices (0-based).
struct NotSmallError : ActionError {
    std::vector<int> subset;
    NotSmallError(const std::string& msg, std::vector<int> s)
        : ActionError(msg), subset(std::move(s)) {}
};

/// The cyclic group action 1/n(t_1,...,t_d): generated by diag(l^t1,...,l^td)
/// for a primitive n-th root of unity l. Weights are stored reduced to 1..n-1,
/// in input order. Immutable after construction.
class CyclicAction {
public:
    CyclicAction(long n, const std::vector<long>& raw_weights);

    long order() const { return n_; }
    int dim() const { return static_cast<int>(t_.size()); }
    const std::vector<long>& weights() const { return t_; }
    long weight(int i) const { return t_[i]; }

    // sum of weights mod n
    long weight_sum_mod() const;

    friend bool operator==(const CyclicAction&, const CyclicAction&) = default;

private:
    long n_;
    std::vector<long> t_;
};

CyclicAction make_action(long n, const std::vector<long>& raw_weights);

// True iff every (d-1)-subset of weights has gcd 1 with n. Weights are taken mod n.
bool is_small(long n, const std::vector<long>& weights);

struct ReductionOutcome {
    enum class Kind { AlreadyReduced, ReducedAction };
    Kind kind;
    CyclicAction action;
    std::string note;  // nonempty when kind == ReducedAction
};

// Strips weights == 0 mod n. When some are stripped, the classification question
// changes: the original ring is nearly Gorenstein iff the reduced one is Gorenstein.
ReductionOutcome reduce_zero_weights(long n, const std::vector<long>& raw_weights);

// Lex-min of { sort(u*t mod n) : u a unit of Z/n }. Deterministic and idempotent.
CyclicAction canonical_form(const CyclicAction& a);

bool iso_equivalent(const CyclicAction& a, const CyclicAction& b);

std::string to_string(const CyclicAction& a);

}  // namespace qsing
