#include "torusq/verify.hpp"

#include <algorithm>

#include "torusq/numeric.hpp"

namespace torusq {

namespace {

void require_colour(const RootDatum& d, const Weight& lam, const char* who) {
    if (lam.rank() != d.rank)
        throw PreconditionError(std::string(who) + ": weight rank mismatch");
    if (!d.is_dominant(lam) || !d.is_integral(lam))
        throw PreconditionError(std::string(who) +
                                ": lambda must be dominant integral");
}

bool is_zero_weight(const Weight& w) {
    return std::all_of(w.rc.begin(), w.rc.end(),
                       [](const Rat& c) { return c == 0; });
}

std::vector<long> admissible_range(long step, long n_max) {
    std::vector<long> ns;
    for (long n = 1; n <= n_max; n += step) ns.push_back(n);
    return ns;
}

Int factorial(long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Int binomial(long n, long k) {
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return b;
}

// First exponent <= window where the two series fail the relative-tolerance
// match, or window itself (full = true) when every exponent passes.
Rat agreement_depth(const QSeries& jhat, const QSeries& target,
                    const Rat& window, const Rat& tolerance, bool& full) {
    auto matches = [&](const Rat& c, const Rat& t) {
        if (t == 0) return rat_abs(c) <= tolerance;
        return rat_abs(c / t - 1) <= tolerance;
    };
    auto it = jhat.terms().begin();
    auto jt = target.terms().begin();
    const auto ie = jhat.terms().end();
    const auto je = target.terms().end();
    while (it != ie || jt != je) {
        Rat e;
        Rat c = 0;
        Rat t = 0;
        bool take_i = it != ie && (jt == je || it->first <= jt->first);
        bool take_j = jt != je && (it == ie || jt->first <= it->first);
        if (take_i) e = it->first;
        if (take_j) e = jt->first;
        if (take_i) c = (it++)->second;
        if (take_j) t = (jt++)->second;
        if (e > window) break;
        if (!matches(c, t)) {
            full = false;
            return e;
        }
    }
    full = true;
    return window;
}

} // namespace

RatioReport ratio_table(const RootDatum& d, const Weight& lam,
                        const Weight& mu1, const Weight& mu2, long n_max) {
    require_colour(d, lam, "ratio_table");
    if (is_zero_weight(lam))
        throw PreconditionError("ratio_table: lambda must be nonzero");
    if (n_max < 1) throw PreconditionError("ratio_table: n_max must be >= 1");
    for (const Weight* mu : {&mu1, &mu2}) {
        if (mu->rank() != d.rank)
            throw PreconditionError("ratio_table: weight rank mismatch");
        if (!d.is_integral(*mu))
            throw PreconditionError("ratio_table: mu must be integral");
        if (!d.in_root_lattice(*mu - lam))
            throw CosetMismatchError(
                "ratio_table: mu does not lie in the coset of lambda");
    }

    RatioReport rep;
    rep.lambda = lam;
    rep.mu1 = mu1;
    rep.mu2 = mu2;
    rep.step = coset_order(d, lam);

    std::vector<long> ns = admissible_range(rep.step, n_max);
    rep.rows.resize(ns.size());
    parallel_for_index(ns.size(), [&](size_t t) {
        RatioRow row;
        row.n = ns[t];
        MultTable table = weight_system(d, ns[t] * lam);
        row.mult1 = table.mult(d, mu1);
        row.mult2 = table.mult(d, mu2);
        row.defined = row.mult1 != 0 && row.mult2 != 0;
        if (row.defined) {
            row.ratio = make_rat(row.mult1, row.mult2);
            row.deviation = rat_abs(row.ratio - 1);
        }
        rep.rows[t] = row;
    });

    rep.monotone = false;
    const Rat* prev = nullptr;
    for (const RatioRow& row : rep.rows) {
        if (!row.defined) continue;
        if (prev == nullptr)
            rep.monotone = true;
        else if (row.deviation > *prev)
            rep.monotone = false;
        prev = &row.deviation;
        rep.final_deviation = row.deviation;
    }
    return rep;
}

StabilizationReport stabilization(const RootDatum& d, const WeylGroup& g,
                                  const TorusKnot& k, const Weight& lam,
                                  const Rat& window, long n_max,
                                  const Rat& tolerance) {
    require_colour(d, lam, "stabilization");
    if (window < 0)
        throw PreconditionError("stabilization: window must be nonnegative");
    if (n_max < 1)
        throw PreconditionError("stabilization: n_max must be >= 1");
    if (tolerance < 0)
        throw PreconditionError("stabilization: tolerance must be nonnegative");

    StabilizationReport rep;
    rep.knot = k;
    rep.lambda = lam;
    rep.window = window;
    rep.tolerance = tolerance;
    rep.step = coset_order(d, lam);

    QSeries target;
    if (is_simply_laced(d.type) && k.p >= d.hdual && k.pp >= d.hdual) {
        int node = -1;
        for (int j : d.J)
            if (d.in_root_lattice(lam - d.fweight(j))) {
                node = j;
                break;
            }
        if (node < 0)
            throw InternalError("stabilization: coset without a marked node");
        rep.regime = LimitRegime::SimplyLaced;
        rep.node = node;
        target = limit_rhs_simply_laced(d, g, k, node, window);
    } else if (d.in_root_lattice(lam)) {
        try {
            target = limit_rhs_non_simply_laced(d, g, k, window);
        } catch (const ShortRootBoundError& e) {
            throw NoTheoremAppliesError(e.what());
        }
        rep.regime = LimitRegime::ShortRootBound;
        rep.node = 0;
    } else {
        throw NoTheoremAppliesError(
            "stabilization: no limit series applies to this colour and knot");
    }

    std::vector<long> ns = admissible_range(rep.step, n_max);
    rep.rows.resize(ns.size());
    parallel_for_index(ns.size(), [&](size_t t) {
        StabilizationRow row;
        row.n = ns[t];
        QSeries jhat = jones_hat(d, g, k, ns[t] * lam);
        row.depth = agreement_depth(jhat, target, window, tolerance, row.full);
        rep.rows[t] = row;
    });

    rep.nondecreasing = true;
    const Rat* prev = nullptr;
    for (const StabilizationRow& row : rep.rows) {
        if (prev != nullptr && row.depth < *prev) rep.nondecreasing = false;
        prev = &row.depth;
        if (row.full && !rep.stabilized_at) rep.stabilized_at = row.n;
    }
    return rep;
}

LeadingTermFit leading_term_fit(const RootDatum& d, const Weight& lam,
                                const Weight& mu, long degree, long n_max) {
    require_colour(d, lam, "leading_term_fit");
    if (is_zero_weight(lam))
        throw PreconditionError("leading_term_fit: lambda must be nonzero");
    if (degree < 1)
        throw PreconditionError("leading_term_fit: degree must be >= 1");
    if (mu.rank() != d.rank)
        throw PreconditionError("leading_term_fit: weight rank mismatch");
    if (!d.is_integral(mu))
        throw PreconditionError("leading_term_fit: mu must be integral");
    if (!d.in_root_lattice(mu - lam))
        throw CosetMismatchError(
            "leading_term_fit: mu does not lie in the coset of lambda");

    long step = coset_order(d, lam);
    long anchor = (n_max >= 1) ? n_max - ((n_max - 1) % step) : 0;
    if (anchor < 1 + degree * step)
        throw PreconditionError(
            "leading_term_fit: n_max admits too few sample points for this degree");
    long stride = step * ((anchor - 1) / (step * degree));

    LeadingTermFit fit;
    fit.degree = degree;
    fit.stride = stride;
    fit.anchor = anchor;
    fit.points.resize(static_cast<size_t>(degree) + 1);
    for (long i = 0; i <= degree; ++i)
        fit.points[static_cast<size_t>(i)] = anchor - (degree - i) * stride;

    fit.samples.resize(fit.points.size());
    parallel_for_index(fit.points.size(), [&](size_t t) {
        MultTable table = weight_system(d, fit.points[t] * lam);
        fit.samples[t] = table.mult(d, mu);
    });

    Int num = 0;
    for (long i = 0; i <= degree; ++i) {
        Int term = binomial(degree, i) * fit.samples[static_cast<size_t>(degree - i)];
        if (i % 2 == 0)
            num += term;
        else
            num -= term;
    }
    Int denom = factorial(degree);
    for (long i = 0; i < degree; ++i) denom *= stride;
    fit.estimate = make_rat(num, denom);
    return fit;
}

} // namespace torusq
