#pragma once

#include <optional>
#include <vector>

#include "qsing/criteria.hpp"

namespace qsing {

struct HypothesisViolatedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Certificate of infinite residue: on support J the cap vector `caps` fails
/// trace membership, coordinate `saturated` sits at n-1, and the fiber of
/// monomials above the caps is a nonempty infinite arithmetic progression.
struct InfinityWitness {
    std::vector<int> support;   // 0-based indices
    std::vector<long> caps;     // caps on the support, in support order
    int saturated;              // first support coordinate with cap n-1
};

struct ResidueValue {
    bool infinite = false;
    unsigned long long value = 0;                 // meaningful iff !infinite
    std::vector<ExponentVector> failing;          // invariant monomials outside tr(omega)
    std::optional<InfinityWitness> witness;       // present iff infinite

    bool operator==(const ResidueValue& o) const {
        return infinite == o.infinite && (infinite || value == o.value);
    }
};

// Exact residue l(R^G / tr(omega)) by cap-vector enumeration: membership of a
// monomial depends only on its support and exponents capped at n-1, so each
// support is swept over {1..n-1}^J; a failing cap with a saturated coordinate
// and a nonempty fiber certifies infinitely many cokernel monomials.
ResidueValue residue(const CyclicAction& a);

// Test oracle for the family 1/n(1, m, n-1): residue equals m.
long residue_family_expected(long n, long m);

}  // namespace qsing
