#pragma once

#include <vector>

#include "torusq/knotinv.hpp"
#include "torusq/qseries.hpp"
#include "torusq/rootdata.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

// Label for a truncated lattice character series: coprime positive torus
// parameters (p, pp), a node index j in the distinguished set J, and two
// optional finite parts.  nu must be dominant integral of level at most
// p - hdual and mu dominant integral of level at most pp - h; a weight with
// empty coordinates stands for the zero weight (the default).  The level
// bounds force p >= hdual and pp >= h for any constructible label.
struct WModuleLabel {
    long p = 2;
    long pp = 3;
    int j = 0;
    Weight nu{};
    Weight mu{};
};

// Exponent of the trailing term of theta_sum in closed form: the exponent
// map is uniquely minimized at the lattice point -Lambda_i paired with the
// inverse of the distinguished Weyl element for node j.
Rat theta_min_exponent(const RootDatum& d, const WModuleLabel& label);

// Sign prefactor of the lattice sum for node j: (-1)^{2(Lambda_j, rho)},
// equal to the sign of the distinguished Weyl element.
int theta_sign(const RootDatum& d, int j);

// Truncated lattice theta-sum over (root lattice - Lambda_i) x Weyl group:
//
//   theta_sign(j) * sum (-1)^{len(w)} q^{(p*pp/2) |alpha + (nu+rho)/p
//                                          - w (mu+rho)/pp|^2}
//
// complete for every exponent <= trailing + window and marked TRUNCATED
// there.  The trailing term is exactly 1 * q^{theta_min_exponent}.
// Simply-laced types only.
QSeries theta_sum(const RootDatum& d, const WeylGroup& g,
                  const WModuleLabel& label, const Rat& window);

// Certificate that the exponent map of theta_sum attains its minimum once.
struct UniqueMinReport {
    Rat min_exponent;     // value at the unique minimizer
    RVec alpha_rc;        // minimizing lattice point, root coordinates
    size_t weyl_index;    // index of the minimizing Weyl element
    Rat radius;           // certified enumeration radius actually scanned
    long points_scanned;  // (lattice point, Weyl element) pairs examined
};

// Brute-force scan of all lattice points with |alpha| <= radius (enlarged
// to the proven escape radius if the given one is smaller) against every
// Weyl element.  Throws PropositionViolated if the minimum is not attained
// uniquely at the predicted pair.
UniqueMinReport verify_unique_minimum(const RootDatum& d, const WeylGroup& g,
                                      const WModuleLabel& label,
                                      const Rat& radius);

// Limit series of the normalized invariant for colours in the coset of
// Lambda_j, simply-laced types: q^{-min exponent} * theta_sum / prod over
// positive roots of (1 - q^{(alpha, rho)}).  TRUNCATED(window); lies in
// 1 + q Z[[q]].
QSeries limit_rhs_simply_laced(const RootDatum& d, const WeylGroup& g,
                               const TorusKnot& k, int j, const Rat& window);

// Limit series for root-lattice colours of any type under the short-root
// bound (1/p + 1/pp) < |short root| / (2 |rho|): the analogous lattice sum
// over the full root lattice, shifted and divided the same way.
// TRUNCATED(window); constant term 1.
QSeries limit_rhs_non_simply_laced(const RootDatum& d, const WeylGroup& g,
                                   const TorusKnot& k, const Rat& window);

} // namespace torusq
