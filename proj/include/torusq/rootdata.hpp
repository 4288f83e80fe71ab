#pragma once

#include <map>
#include <vector>

#include "torusq/lietype.hpp"
#include "torusq/numeric.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

// A weight written in the simple-root basis (exact rational coordinates).
// Elements of the weight lattice have integer fundamental-weight coordinates
// but typically fractional root coordinates.
struct Weight {
    RVec rc;

    Weight() = default;
    explicit Weight(RVec coords) : rc(std::move(coords)) {}

    size_t rank() const { return rc.size(); }
    bool operator==(const Weight&) const = default;
};

Weight operator+(const Weight& a, const Weight& b);
Weight operator-(const Weight& a, const Weight& b);
Weight operator-(const Weight& a);
Weight operator*(const Rat& c, const Weight& a);
Weight operator*(long c, const Weight& a);

// sigma_bar_j for an index j in J: the unique Weyl element mapping the
// simple system onto {alpha_1,...,alpha_j-hat,...,alpha_l,-theta}, its
// partner index i (sigma_j^{-1} Lambda_j = -Lambda_i) and its sign.
struct SigmaData {
    WeylElement elem;
    int i = 0;
    int sign = 1;
};

// Immutable root-system data for one finite simple type, normalized so the
// highest root theta has (theta, theta) = 2.  Safe for shared read-only use.
struct RootDatum {
    LieType type;
    size_t rank = 0;

    std::vector<IVec> cartan;       // C[i][j] = <alpha_j, alpha_i-vee>
    std::vector<RVec> cartan_inv;
    std::vector<RVec> gram;         // gram[i][j] = (alpha_i, alpha_j)
    RVec simple_norms;              // (alpha_i, alpha_i)

    std::vector<IVec> pos_roots;    // integer root coordinates, by height
    IVec theta;                     // highest root
    RVec rho_rc;                    // Weyl vector, root coordinates
    std::vector<RVec> fund_rc;      // fundamental weights, root coordinates

    IVec labels;                    // a_0..a_l (a_0 = 1)
    IVec colabels;                  // a_0-vee..a_l-vee
    long h = 0;                     // Coxeter number, sum of labels
    long hdual = 0;                 // dual Coxeter number, sum of colabels
    Rat d2;                         // squared length of a short root
    Int lattice_index;              // |P-bar / Q-bar| = det(cartan)

    std::vector<int> J;             // affine indices with a_j = a_j-vee = 1
    std::map<int, SigmaData> sigma; // keyed by j in J

    // --- bilinear form and coordinate plumbing -------------------------

    Rat inner(const RVec& x, const RVec& y) const;
    Rat inner(const Weight& x, const Weight& y) const { return inner(x.rc, y.rc); }
    Rat norm2(const Weight& x) const { return inner(x.rc, x.rc); }

    // <x, alpha_i-vee> = (C x)_i, i 1-based.
    Rat coroot_pairing(const RVec& x, int i) const;
    Rat coroot_pairing(const Weight& x, int i) const { return coroot_pairing(x.rc, i); }

    RVec weight_coords(const RVec& root_coords) const;      // x -> Cx
    RVec root_coords_of_weight(const RVec& weight_coords) const;

    Weight weight_from_fundamental(const RVec& weight_coords) const;
    Weight weight_from_root(RVec root_coords) const { return Weight(std::move(root_coords)); }

    // --- distinguished weights -----------------------------------------

    Weight zero() const { return Weight(RVec(rank, Rat(0))); }
    Weight rho() const { return Weight(rho_rc); }
    // fundamental weight Lambda_j; fweight(0) is the zero weight, matching
    // the convention Lambda_0-bar = 0 for the affine node.
    Weight fweight(int j) const;
    Weight highest_root() const;
    Weight simple_root(int i) const;

    // --- predicates ------------------------------------------------------

    bool is_dominant(const Weight& x) const;       // all <x, alpha_i-vee> >= 0
    bool is_integral(const Weight& x) const;       // x in P-bar
    bool in_root_lattice(const Weight& x) const;   // x in Q-bar
    bool in_positive_root_cone(const Weight& x) const;  // x in Q-bar-plus

    const SigmaData& sigma_data(int j) const;
};

RootDatum build_root_datum(const LieType& t);

// Additive order of (lam + Q-bar) in P-bar/Q-bar; colour multiples n*lam stay
// in lam's coset exactly for n = 1 mod this step.  Requires lam integral.
long coset_order(const RootDatum& d, const Weight& lam);

} // namespace torusq
