#include "torusq/wcharacter.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

#include "torusq/errors.hpp"

namespace torusq {

namespace {

RVec root_as_rvec(const IVec& a) {
    RVec v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = Rat(a[i]);
    return v;
}

// Exact rational LDL^T factorization of the Gram matrix: G = L D L^T with
// L unit lower triangular and D positive (the form is positive definite).
struct LDL {
    size_t r = 0;
    std::vector<RVec> lower;
    RVec diag;
};

LDL decompose_gram(const RootDatum& d) {
    const size_t r = d.rank;
    LDL f;
    f.r = r;
    f.lower.assign(r, RVec(r, Rat(0)));
    f.diag.assign(r, Rat(0));
    for (size_t i = 0; i < r; ++i) {
        Rat di = d.gram[i][i];
        for (size_t k = 0; k < i; ++k)
            di -= f.lower[i][k] * f.lower[i][k] * f.diag[k];
        if (!(di > 0))
            throw InternalError("decompose_gram: form is not positive definite");
        f.diag[i] = di;
        f.lower[i][i] = 1;
        for (size_t j = i + 1; j < r; ++j) {
            Rat v = d.gram[j][i];
            for (size_t k = 0; k < i; ++k)
                v -= f.lower[j][k] * f.lower[i][k] * f.diag[k];
            f.lower[j][i] = v / di;
        }
    }
    return f;
}

long to_long(const Int& v) {
    if (!v.fits_slong_p())
        throw InternalError("lattice enumeration: coordinate overflow");
    return v.get_si();
}

// Visit every integer vector x with (x+t)^T G (x+t) <= bound together with
// the exact value of the form.  With z = L^T (x+t) the form is
// sum_i diag_i z_i^2, so coordinates are chosen from the last to the first
// inside certified rational interval bounds (sqrt upper bounds only ever
// widen an interval); exact comparisons discard the overshoot, so the
// visited set is exactly the ball.
void enumerate_rec(const LDL& f, const RVec& t, const Rat& bound,
                   const std::function<void(const IVec&, const Rat&)>& emit,
                   IVec& x, int level, const Rat& acc) {
    if (level < 0) {
        emit(x, acc);
        return;
    }
    const size_t i = static_cast<size_t>(level);
    Rat s = t[i];
    for (size_t k = i + 1; k < f.r; ++k)
        s += f.lower[k][i] * (Rat(x[k]) + t[k]);
    const Rat rem = bound - acc;
    const Rat radius = sqrt_upper_bound(rem / f.diag[i]);
    const Int lo = rat_ceil(-radius - s);
    const Int hi = rat_floor(radius - s);
    for (Int v = lo; v <= hi; ++v) {
        Rat z = Rat(v) + s;
        Rat contrib = f.diag[i] * z * z;
        if (contrib > rem) continue;
        x[i] = to_long(v);
        enumerate_rec(f, t, bound, emit, x, level - 1, acc + contrib);
    }
}

void enumerate_shifted(const LDL& f, const RVec& t, const Rat& bound,
                       const std::function<void(const IVec&, const Rat&)>& emit) {
    if (bound < 0) return;
    IVec x(f.r, 0);
    enumerate_rec(f, t, bound, emit, x, static_cast<int>(f.r) - 1, Rat(0));
}

struct LabelData {
    const SigmaData* sd = nullptr;
    Weight nu;
    Weight mu;
};

Weight finite_or_zero(const RootDatum& d, const Weight& w, const char* what) {
    if (w.rc.empty()) return d.zero();
    if (w.rc.size() != d.rank)
        throw PreconditionError(std::string("label: ") + what +
                                " has the wrong rank");
    if (!d.is_integral(w) || !d.is_dominant(w))
        throw PreconditionError(std::string("label: ") + what +
                                " must be dominant and integral");
    return w;
}

LabelData validate_label(const RootDatum& d, const WModuleLabel& label) {
    if (label.p < 1 || label.pp < 1)
        throw PreconditionError("label: torus parameters must be positive");
    if (std::gcd(label.p, label.pp) != 1)
        throw PreconditionError("label: torus parameters must be coprime");
    if (std::find(d.J.begin(), d.J.end(), label.j) == d.J.end())
        throw PreconditionError("label: node index is not in the "
                                "distinguished set J");
    LabelData out;
    out.sd = &d.sigma_data(label.j);
    out.nu = finite_or_zero(d, label.nu, "first finite part");
    out.mu = finite_or_zero(d, label.mu, "second finite part");
    Weight theta = d.highest_root();
    if (d.inner(out.nu, theta) > Rat(label.p - d.hdual))
        throw PreconditionError(
            "label: first finite part exceeds its level bound p - hdual");
    if (d.inner(out.mu, theta) > Rat(label.pp - d.h))
        throw PreconditionError(
            "label: second finite part exceeds its level bound pp - h");
    return out;
}

std::vector<Rat> positive_root_exponents(const RootDatum& d) {
    std::vector<Rat> exps;
    exps.reserve(d.pos_roots.size());
    for (const IVec& a : d.pos_roots)
        exps.push_back(d.inner(root_as_rvec(a), d.rho_rc));
    return exps;
}

// Merged signed lattice sum: for every Weyl element w and every lattice
// point x, one term of sign(w) at exponent half_ppp * |x + base - w(b)/pp|^2,
// complete through valid_to and TRUNCATED there.  base and b are given in
// root coordinates; enumeration parallelizes over Weyl elements.
QSeries signed_lattice_sum(const RootDatum& d, const WeylGroup& g,
                           const RVec& base, const RVec& b, long pp,
                           const Rat& half_ppp, const Rat& valid_to) {
    const LDL f = decompose_gram(d);
    const Rat qbound = valid_to / half_ppp;
    std::vector<std::map<Rat, long>> partial(g.order());
    parallel_for_index(g.order(), [&](size_t w) {
        RVec img = act(g.elements[w], b);
        RVec t(d.rank);
        for (size_t i = 0; i < d.rank; ++i)
            t[i] = base[i] - img[i] / pp;
        const int sign = g.elements[w].sign;
        enumerate_shifted(f, t, qbound,
                          [&](const IVec&, const Rat& value) {
                              partial[w][half_ppp * value] += sign;
                          });
    });
    QSeries out;
    for (const auto& m : partial)
        for (const auto& [e, c] : m)
            if (c != 0) out.add_term(e, Rat(c));
    out.truncate(valid_to);
    return out;
}

} // namespace

Rat theta_min_exponent(const RootDatum& d, const WModuleLabel& label) {
    if (!is_simply_laced(d.type))
        throw UnsupportedTypeError(
            "theta_min_exponent: requires a simply-laced type");
    LabelData lab = validate_label(d, label);
    Weight vmin = -d.fweight(lab.sd->i) +
                  make_rat(1, label.p) * (lab.nu + d.rho()) -
                  make_rat(1, label.pp) *
                      act(inverse(lab.sd->elem), lab.mu + d.rho());
    return make_rat(Int(label.p) * label.pp, 2) * d.norm2(vmin);
}

int theta_sign(const RootDatum& d, int j) { return d.sigma_data(j).sign; }

QSeries theta_sum(const RootDatum& d, const WeylGroup& g,
                  const WModuleLabel& label, const Rat& window) {
    if (!is_simply_laced(d.type))
        throw UnsupportedTypeError("theta_sum: requires a simply-laced type");
    if (window < 0)
        throw PreconditionError("theta_sum: window must be nonnegative");
    LabelData lab = validate_label(d, label);
    const Rat half_ppp = make_rat(Int(label.p) * label.pp, 2);
    const Rat e_min = theta_min_exponent(d, label);

    Weight base = -d.fweight(lab.sd->i) +
                  make_rat(1, label.p) * (lab.nu + d.rho());
    Weight b = lab.mu + d.rho();
    QSeries out = signed_lattice_sum(d, g, base.rc, b.rc, label.pp, half_ppp,
                                     e_min + window);
    if (lab.sd->sign != 1) out = scalar_mul(Rat(lab.sd->sign), out);
    if (out.is_zero() || out.trailing_exponent() != e_min ||
        out.trailing_coeff() != 1)
        throw InternalError(
            "theta_sum: trailing term does not match its closed form");
    return out;
}

UniqueMinReport verify_unique_minimum(const RootDatum& d, const WeylGroup& g,
                                      const WModuleLabel& label,
                                      const Rat& radius) {
    if (!is_simply_laced(d.type))
        throw UnsupportedTypeError(
            "verify_unique_minimum: requires a simply-laced type");
    LabelData lab = validate_label(d, label);
    const Rat half_ppp = make_rat(Int(label.p) * label.pp, 2);
    const Rat e_min = theta_min_exponent(d, label);

    Weight a = make_rat(1, label.p) * (lab.nu + d.rho());
    Weight b = make_rat(1, label.pp) * (lab.mu + d.rho());
    Weight lam_i = d.fweight(lab.sd->i);
    Weight vmin = -lam_i + a - act(inverse(lab.sd->elem), b);

    // No point with |alpha| beyond |vmin| + 2|a| + 2|b| can reach the
    // minimum: |alpha + a - w b| >= |alpha| - |a| - |b| by the triangle
    // inequality, and w is an isometry.
    Rat escape = sqrt_upper_bound(d.norm2(vmin)) +
                 2 * sqrt_upper_bound(d.norm2(a)) +
                 2 * sqrt_upper_bound(d.norm2(b));
    const Rat used = std::max(radius, escape);

    std::vector<IVec> points;
    const LDL f = decompose_gram(d);
    enumerate_shifted(f, (-lam_i).rc, used * used,
                      [&](const IVec& x, const Rat&) { points.push_back(x); });

    std::optional<Rat> best;
    IVec best_x;
    size_t best_w = 0;
    long ties = 0;
    long scanned = 0;
    RVec v(d.rank);
    for (size_t w = 0; w < g.order(); ++w) {
        RVec img = act(g.elements[w], b.rc);
        for (const IVec& x : points) {
            for (size_t i = 0; i < d.rank; ++i)
                v[i] = Rat(x[i]) - lam_i.rc[i] + a.rc[i] - img[i];
            Rat e = half_ppp * d.inner(v, v);
            ++scanned;
            if (!best || e < *best) {
                best = e;
                best_x = x;
                best_w = w;
                ties = 1;
            } else if (e == *best) {
                ++ties;
            }
        }
    }

    const bool at_predicted =
        best && *best == e_min &&
        std::all_of(best_x.begin(), best_x.end(),
                    [](long c) { return c == 0; }) &&
        g.elements[best_w].same_element(inverse(lab.sd->elem));
    if (!at_predicted || ties != 1)
        throw PropositionViolatedError(
            "verify_unique_minimum: exponent map minimum is not attained "
            "uniquely at the predicted point");

    UniqueMinReport report;
    report.min_exponent = *best;
    report.alpha_rc = (-lam_i).rc;
    report.weyl_index = best_w;
    report.radius = used;
    report.points_scanned = scanned;
    return report;
}

QSeries limit_rhs_simply_laced(const RootDatum& d, const WeylGroup& g,
                               const TorusKnot& k, int j, const Rat& window) {
    if (!is_simply_laced(d.type))
        throw UnsupportedTypeError(
            "limit_rhs_simply_laced: requires a simply-laced type");
    if (k.p < d.hdual || k.pp < d.hdual)
        throw PreconditionError(
            "limit_rhs_simply_laced: both torus parameters must be at least "
            "the dual Coxeter number");
    WModuleLabel label;
    label.p = k.p;
    label.pp = k.pp;
    label.j = j;
    QSeries theta = theta_sum(d, g, label, window);
    const Rat e_min = theta_min_exponent(d, label);

    // the same exponent written through the node-j data; the two must agree
    const SigmaData& sd = d.sigma_data(j);
    Weight u = d.fweight(j) + make_rat(1, k.p) * act(sd.elem, d.rho()) -
               make_rat(1, k.pp) * d.rho();
    if (make_rat(Int(k.p) * k.pp, 2) * d.norm2(u) != e_min)
        throw InternalError("limit_rhs_simply_laced: exponent mismatch");

    QSeries out = mul(shift(theta, -e_min),
                      inv_poch_product(positive_root_exponents(d), window));
    if (out.trailing_exponent() != 0 || out.trailing_coeff() != 1)
        throw InternalError(
            "limit_rhs_simply_laced: constant term is not one");
    return out;
}

QSeries limit_rhs_non_simply_laced(const RootDatum& d, const WeylGroup& g,
                                   const TorusKnot& k, const Rat& window) {
    const Rat sum = make_rat(1, k.p) + make_rat(1, k.pp);
    if (!(4 * sum * sum * d.inner(d.rho_rc, d.rho_rc) < d.d2))
        throw ShortRootBoundError(
            "limit_rhs_non_simply_laced: torus parameters violate the "
            "short-root bound");
    if (window < 0)
        throw PreconditionError(
            "limit_rhs_non_simply_laced: window must be nonnegative");
    const Rat half_ppp = make_rat(Int(k.p) * k.pp, 2);
    const Rat gap = make_rat(1, k.p) - make_rat(1, k.pp);
    const Rat e_min = half_ppp * gap * gap * d.inner(d.rho_rc, d.rho_rc);

    RVec base(d.rank);
    for (size_t i = 0; i < d.rank; ++i) base[i] = d.rho_rc[i] / k.p;
    QSeries theta = signed_lattice_sum(d, g, base, d.rho_rc, k.pp, half_ppp,
                                       e_min + window);
    if (theta.is_zero() || theta.trailing_exponent() != e_min ||
        theta.trailing_coeff() != 1)
        throw InternalError(
            "limit_rhs_non_simply_laced: trailing term does not match the "
            "short-root-bound minimum");

    QSeries out = mul(shift(theta, -e_min),
                      inv_poch_product(positive_root_exponents(d), window));
    if (out.trailing_exponent() != 0 || out.trailing_coeff() != 1)
        throw InternalError(
            "limit_rhs_non_simply_laced: constant term is not one");
    return out;
}

} // namespace torusq
