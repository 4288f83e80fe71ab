#pragma once

#include <map>

#include "torusq/multiplicity.hpp"
#include "torusq/rootdata.hpp"
#include "torusq/weyl.hpp"

namespace torusq {

// Signed expansion of (p-th power-substituted character of L(lambda)) times
// the rho-shifted alternating Weyl denominator: coefficient at mu'' is
//   sum over (mu in wt(lambda), w) with p*mu + w(rho) = mu''
//   of sign(w) * m_lambda(mu).
// Nonzero coefficients sit only at Weyl-regular points and are antisymmetric
// across chamber walls through the rho-shift.
struct SignedSupport {
    Weight lambda;
    long p = 1;
    std::map<RVec, Int> coeffs; // root coordinates of mu'' -> signed coefficient
};

SignedSupport adams_signed_support(const RootDatum& d, const WeylGroup& g,
                                   const Weight& lam, long p);

// Expansion coefficients of the p-th power-substituted character in the
// irreducible-character basis: dominant mu (root coordinates) -> coefficient.
// Read off the signed support at regular dominant points mu' as the
// coefficient of ch L(mu' - rho).
std::map<RVec, Int> plethysm_coeffs(const RootDatum& d, const WeylGroup& g,
                                    const Weight& lam, long p);

} // namespace torusq
