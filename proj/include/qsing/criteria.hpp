#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsing/action.hpp"
#include "qsing/residue_set.hpp"

namespace qsing {

using ExponentVector = std::vector<long>;

struct CriteriaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct EmptyInputError : CriteriaError {
    using CriteriaError::CriteriaError;
};

struct NotInvariantError : CriteriaError {
    using CriteriaError::CriteriaError;
};

struct ZeroMonomialError : CriteriaError {
    using CriteriaError::CriteriaError;
};

/// Certificate that an action fails the nearly-Gorenstein criterion: on the
/// support J (0-based indices) the tuple `a` is invariant and sums to <= n,
/// yet `target` is not reachable as sum b_j t_j with 1 <= b_j <= a_j + 1.
struct NGWitness {
    std::vector<int> support;
    std::vector<long> a;
    long target;
    std::vector<long> reachable;
};

enum class Verdict { Gorenstein, NearlyGorensteinNotGorenstein, NotNearlyGorenstein };

std::string verdict_label(Verdict v);  // "G", "NG", "notNG"

struct Classification {
    Verdict verdict;
    std::optional<NGWitness> witness;       // present iff NotNearlyGorenstein via the Theorem
    std::optional<std::string> via_reduction;
};

bool is_gorenstein(const CyclicAction& a);

// { sum b_j w_j mod n : 1 <= b_j <= bounds_j }. Bounds >= n saturate: n
// consecutive values of b_j already realize every residue of b_j * w_j.
ResidueSet reachable_residues(const std::vector<long>& weights,
                              const std::vector<long>& upper_bounds, long n);

// Monomial membership in tr(omega): full support always passes; otherwise the
// complement residue must be reachable with bounds m_j + 1 on the support.
bool trace_contains_monomial(const CyclicAction& a, const ExponentVector& m);

// The full nearly-Gorenstein decision. Quantifies over nonempty proper index
// subsets J (size ascending, then lex) and positive tuples a with sum <= n and
// sum a_j t_j == 0 mod n (lex); the first failure becomes the witness.
std::pair<bool, std::optional<NGWitness>> is_nearly_gorenstein(const CyclicAction& a);

struct RemarkWitness {
    std::vector<int> support;
    long m;  // gcd of the support weights with n, > 1
};

// Necessary condition only: a witness certifies not nearly Gorenstein, but the
// converse fails (e.g. 1/n(1,n-1,n-2) for odd n > 3).
std::optional<RemarkWitness> remark_prefilter(const CyclicAction& a);

Classification classify(const CyclicAction& a);
Classification classify(long n, const std::vector<long>& raw_weights);

struct FamilyPrediction {
    Verdict expected;
    std::string family;
};

// Closed-form families with known verdicts; used as a test oracle for classify.
std::optional<FamilyPrediction> family_predict(const CyclicAction& a);

}  // namespace qsing
