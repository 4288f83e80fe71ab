#include "torusq/plethysm.hpp"

#include "torusq/errors.hpp"

namespace torusq {

SignedSupport adams_signed_support(const RootDatum& d, const WeylGroup& g,
                                   const Weight& lam, long p) {
    if (p < 1)
        throw PreconditionError("adams_signed_support: power must be >= 1");
    if (!d.is_integral(lam) || !d.is_dominant(lam))
        throw PreconditionError(
            "adams_signed_support: weight must be dominant and integral");

    SignedSupport out;
    out.lambda = lam;
    out.p = p;

    MultTable table = weight_system(d, lam);
    std::map<RVec, Int> support = full_support(d, g, table);

    std::vector<RVec> rho_images;
    rho_images.reserve(g.order());
    for (const WeylElement& w : g.elements) rho_images.push_back(act(w, d.rho_rc));

    const size_t n = d.rank;
    for (const auto& [mu, m] : support) {
        for (size_t k = 0; k < g.order(); ++k) {
            RVec target(n);
            for (size_t i = 0; i < n; ++i)
                target[i] = p * mu[i] + rho_images[k][i];
            Int& slot = out.coeffs[target];
            if (g.elements[k].sign > 0)
                slot += m;
            else
                slot -= m;
        }
    }
    for (auto it = out.coeffs.begin(); it != out.coeffs.end();) {
        if (it->second == 0)
            it = out.coeffs.erase(it);
        else
            ++it;
    }
    return out;
}

std::map<RVec, Int> plethysm_coeffs(const RootDatum& d, const WeylGroup& g,
                                    const Weight& lam, long p) {
    SignedSupport ss = adams_signed_support(d, g, lam, p);
    std::map<RVec, Int> out;
    for (const auto& [mu2, c] : ss.coeffs) {
        // keep only regular dominant points: every simple pairing >= 1
        bool regular_dominant = true;
        for (int i = 1; i <= static_cast<int>(d.rank); ++i) {
            if (d.coroot_pairing(mu2, i) <= 0) {
                regular_dominant = false;
                break;
            }
        }
        if (!regular_dominant) continue;
        RVec mu(d.rank);
        for (size_t i = 0; i < d.rank; ++i) mu[i] = mu2[i] - d.rho_rc[i];
        out.emplace(std::move(mu), c);
    }
    return out;
}

} // namespace torusq
