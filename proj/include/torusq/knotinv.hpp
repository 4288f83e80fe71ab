#pragma once

#include <string>

#include "torusq/plethysm.hpp"
#include "torusq/qseries.hpp"
#include "torusq/rootdata.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

// A torus knot T(p, p') with coprime positive parameters.  p = 1 or p' = 1
// gives the unknot; values are framing dependent and permitted.
struct TorusKnot {
    long p = 2;
    long pp = 3;

    TorusKnot(long p_, long pp_);
};

enum class TrailingRegime { SimplyLacedThm, ShortRootBoundThm };

// Predicted trailing monomial of the invariant coloured by n*lambda:
// sign * (multiplicity named by descriptor()) * q^exponent, valid for all
// large admissible n in the SimplyLacedThm regime and for the given colour
// itself in the ShortRootBoundThm regime.
struct TrailingPrediction {
    TrailingRegime regime = TrailingRegime::ShortRootBoundThm;
    Rat exponent;
    int sign = 1;
    int partner_index = 0; // i in "coefficient = m_{n lam}(-Lambda_i)"

    std::string descriptor() const;
};

// Exact graded dimension of L(mu): the positive-root product
// prod (q^{(mu+rho,a)/2} - q^{-(mu+rho,a)/2}) / (q^{(rho,a)/2} - q^{-(rho,a)/2}).
QSeries qdim_char(const RootDatum& d, const Weight& mu);

// Exponent of the ribbon twist: (lam, lam + 2*rho) / 2.
Rat ribbon_exponent(const RootDatum& d, const Weight& lam);

// Coloured invariant via the character-expansion form:
//   sum_mu c_{lam,p}^mu q^{(p'/p) * ribbon(mu)} qdim_char(mu).
// Exact Laurent polynomial; test oracle for jones_lattice.
QSeries jones_rosso(const RootDatum& d, const WeylGroup& g, const TorusKnot& k,
                    const Weight& lam);

// Coloured invariant via the lattice double sum:
//   q^{-(pp'/2)(1/p-1/p')^2 ||rho||^2} / prod(1 - q^{(a,rho)})
//   * sum_{mu in wt(lam), w} m_lam(mu) sign(w)
//                            q^{(pp'/2) ||mu + rho/p - w rho/p'||^2}.
// The division by the finite product is exact; production form.
QSeries jones_lattice(const RootDatum& d, const WeylGroup& g,
                      const TorusKnot& k, const Weight& lam);

// jones_lattice normalized by its trailing monomial (trailing term 1*q^0).
QSeries jones_hat(const RootDatum& d, const WeylGroup& g, const TorusKnot& k,
                  const Weight& lam);

// Predict the trailing monomial of the invariant coloured by n*lambda from
// the applicable theorem regime; throws NoTheoremAppliesError when neither
// regime's preconditions hold.
TrailingPrediction predict_trailing(const RootDatum& d, const TorusKnot& k,
                                    const Weight& lam);

} // namespace torusq
