#include "torusq/knotinv.hpp"

#include <numeric>

#include "torusq/errors.hpp"
#include "torusq/multiplicity.hpp"

namespace torusq {

TorusKnot::TorusKnot(long p_, long pp_) : p(p_), pp(pp_) {
    if (p < 1 || pp < 1)
        throw PreconditionError("TorusKnot: parameters must be positive");
    if (std::gcd(p, pp) != 1)
        throw PreconditionError("TorusKnot: parameters must be coprime");
}

std::string TrailingPrediction::descriptor() const {
    if (regime == TrailingRegime::ShortRootBoundThm) return "m_lambda(0)";
    return "m_{n lambda}(-Lambda_" + std::to_string(partner_index) + ")";
}

namespace {

RVec root_as_rvec(const IVec& a) {
    RVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = Rat(a[i]);
    return v;
}

// prod over positive roots of (q^{(x,a)/2} - q^{-(x,a)/2})
QSeries half_power_product(const RootDatum& d, const RVec& x) {
    QSeries out = QSeries::one();
    for (const IVec& a : d.pos_roots) {
        Rat e = d.inner(x, root_as_rvec(a)) / 2;
        QSeries factor = QSeries::monomial(Rat(1), e);
        factor.add_term(-e, Rat(-1));
        out = mul(out, factor);
    }
    return out;
}

// prod over positive roots of (1 - q^{(a,rho)})
QSeries positive_root_product(const RootDatum& d) {
    QSeries out = QSeries::one();
    for (const IVec& a : d.pos_roots) {
        QSeries factor = QSeries::one();
        factor.add_term(d.inner(root_as_rvec(a), d.rho_rc), Rat(-1));
        out = mul(out, factor);
    }
    return out;
}

} // namespace

QSeries qdim_char(const RootDatum& d, const Weight& mu) {
    if (!d.is_integral(mu) || !d.is_dominant(mu))
        throw PreconditionError("qdim_char: weight must be dominant and integral");
    RVec shifted = mu.rc;
    for (size_t i = 0; i < shifted.size(); ++i) shifted[i] += d.rho_rc[i];
    return exact_div(half_power_product(d, shifted),
                     half_power_product(d, d.rho_rc));
}

Rat ribbon_exponent(const RootDatum& d, const Weight& lam) {
    return d.inner(lam, lam + 2 * d.rho()) / 2;
}

QSeries jones_rosso(const RootDatum& d, const WeylGroup& g, const TorusKnot& k,
                    const Weight& lam) {
    QSeries out;
    for (const auto& [mu, c] : plethysm_coeffs(d, g, lam, k.p)) {
        Weight w(mu);
        Rat twist = make_rat(k.pp, k.p) * ribbon_exponent(d, w);
        out = add(out, scalar_mul(Rat(c), shift(qdim_char(d, w), twist)));
    }
    return out;
}

QSeries jones_lattice(const RootDatum& d, const WeylGroup& g,
                      const TorusKnot& k, const Weight& lam) {
    MultTable table = weight_system(d, lam);
    std::map<RVec, Int> support = full_support(d, g, table);

    const size_t n = d.rank;
    RVec rho_over_p(n);
    for (size_t i = 0; i < n; ++i) rho_over_p[i] = d.rho_rc[i] / k.p;
    std::vector<RVec> rho_images(g.order());
    std::vector<int> signs(g.order());
    for (size_t w = 0; w < g.order(); ++w) {
        rho_images[w] = act(g.elements[w], d.rho_rc);
        for (size_t i = 0; i < n; ++i) rho_images[w][i] /= k.pp;
        signs[w] = g.elements[w].sign;
    }

    const Rat half_ppp = make_rat(Int(k.p) * k.pp, 2);
    QSeries numerator;
    RVec v(n);
    for (const auto& [mu, m] : support) {
        const Rat coeff(m);
        for (size_t w = 0; w < g.order(); ++w) {
            for (size_t i = 0; i < n; ++i)
                v[i] = mu[i] + rho_over_p[i] - rho_images[w][i];
            Rat e = half_ppp * d.inner(v, v);
            numerator.add_term(e, signs[w] > 0 ? coeff : -coeff);
        }
    }

    Rat gap = make_rat(1, k.p) - make_rat(1, k.pp);
    Rat prefactor_exp = -half_ppp * gap * gap * d.inner(d.rho_rc, d.rho_rc);
    return exact_div(shift(numerator, prefactor_exp), positive_root_product(d));
}

QSeries jones_hat(const RootDatum& d, const WeylGroup& g, const TorusKnot& k,
                  const Weight& lam) {
    return normalize_by_trailing(jones_lattice(d, g, k, lam));
}

TrailingPrediction predict_trailing(const RootDatum& d, const TorusKnot& k,
                                    const Weight& lam) {
    if (!d.is_integral(lam) || !d.is_dominant(lam))
        throw PreconditionError(
            "predict_trailing: colour must be dominant and integral");

    TrailingPrediction out;
    if (is_simply_laced(d.type) && k.p >= d.hdual && k.pp >= d.hdual) {
        int j = -1;
        for (int cand : d.J) {
            if (d.in_root_lattice(lam - d.fweight(cand))) {
                j = cand;
                break;
            }
        }
        if (j < 0)
            throw InternalError("predict_trailing: no matching weight coset");
        const SigmaData& sd = d.sigma_data(j);
        Weight v = -d.fweight(sd.i) + make_rat(1, k.p) * d.rho() -
                   make_rat(1, k.pp) * Weight(act(inverse(sd.elem), d.rho_rc));
        Rat half_ppp = make_rat(Int(k.p) * k.pp, 2);
        Rat gap = make_rat(1, k.p) - make_rat(1, k.pp);
        out.regime = TrailingRegime::SimplyLacedThm;
        out.exponent =
            -half_ppp * gap * gap * d.inner(d.rho_rc, d.rho_rc) +
            half_ppp * d.norm2(v);
        out.sign = sd.sign;
        out.partner_index = sd.i;
        return out;
    }
    if (d.in_root_lattice(lam)) {
        // short-root bound: (1/p + 1/p')^2 * 4 ||rho||^2 < (short root)^2
        Rat lhs = make_rat(1, k.p) + make_rat(1, k.pp);
        if (4 * lhs * lhs * d.inner(d.rho_rc, d.rho_rc) < d.d2) {
            out.regime = TrailingRegime::ShortRootBoundThm;
            out.exponent = 0;
            out.sign = 1;
            out.partner_index = 0;
            return out;
        }
    }
    throw NoTheoremAppliesError(
        "predict_trailing: neither the simply-laced regime (p, p' >= dual "
        "Coxeter number) nor the short-root bound applies");
}

} // namespace torusq
