#pragma once

#include <vector>

#include "qsing/criteria.hpp"

namespace qsing {

/// Brute-force route to trace membership, straight from the product formula
/// tr(omega) = (fR)^G (R : fR)^G with f = x_1...x_d. Colon-ideal elements are
/// exponent vectors with entries >= -1 (denominators divide f). Shares no
/// membership logic with the reachability criterion.
namespace oracle {

struct TruncatedCount {
    unsigned long long count;
    bool truncated;  // always true: this is a lower bound on the residue
};

// True iff m = u + v with u >= 1 entrywise and invariant, v >= -1 entrywise
// and invariant. Direct exhaustion of v over the box [-1, m_i - 1]^d.
bool trace_contains(const CyclicAction& a, const ExponentVector& m);

// Counts invariant monomials of degree <= degree_bound outside the trace,
// plus 1 for the unit when the ring is not Gorenstein.
TruncatedCount residue_lower_bound(const CyclicAction& a, long degree_bound);

// All e >= 0 with sum e_i <= degree_bound and sum e_i t_i == 0 mod n,
// graded-lex order.
std::vector<ExponentVector> semigroup_members(const CyclicAction& a, long degree_bound);

}  // namespace oracle
}  // namespace qsing
