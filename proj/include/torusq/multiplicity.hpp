#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

#include "torusq/rootdata.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

// Weight system of one irreducible highest-weight module L(lambda): dominant
// weights with multiplicities, stored as integer offsets beta = lambda - mu
// (mu runs over the dominant support, so beta has nonnegative integer root
// coordinates).  Full Weyl-orbit support is expanded on demand.
struct MultTable {
    Weight lambda;
    std::unordered_map<IVec, Int, IVecHash> offsets;

    // multiplicity of an arbitrary weight: fold to dominant, then look up
    Int mult(const RootDatum& d, const Weight& mu) const;

    // dominant weights with multiplicities, sorted by offset height then
    // lexicographically (deterministic order for reports)
    std::vector<std::pair<Weight, Int>> dominant_entries(const RootDatum& d) const;
};

// Freudenthal recursion down from lambda (production engine).
MultTable weight_system(const RootDatum& d, const Weight& lam);

// Full weight support with multiplicities, expanded over Weyl orbits.
// Keyed by exact root coordinates.
std::map<RVec, Int> full_support(const RootDatum& d, const WeylGroup& g,
                                 const MultTable& table);

// Number of ways to write beta as a nonnegative-integer combination of
// positive roots; 0 outside the positive root cone.
Int kostant_partition(const RootDatum& d, const Weight& beta);

// Alternating Weyl sum over the partition function (test oracle for
// weight_system; exponential in the Weyl group order).
Int kostant_mult(const RootDatum& d, const WeylGroup& g, const Weight& lam,
                 const Weight& mu);

// Product formula dimension of L(lambda).
Int weyl_dim(const RootDatum& d, const Weight& lam);

// Closed-form multiplicity of mu in the j-th symmetric-power family
// L(j*Lambda_1) for series B, C, D (generating-function binomials).
// Throws CosetMismatchError when mu is not in j*Lambda_1 + Q-bar and
// OutOfValidityWindowError when j is below the formula's validity threshold
// for this mu.
Int symmetric_power_mult(const RootDatum& d, long j, const Weight& mu);

// Least n0 = 1 mod step such that mu lies in the weight support of L(n*lam)
// for every admissible n >= n0 (the support is nested along admissible n,
// so the first hit is permanent).  Requires mu in lam + Q-bar.
long min_colour_index(const RootDatum& d, const Weight& lam, const Weight& mu,
                      long step);

} // namespace torusq
