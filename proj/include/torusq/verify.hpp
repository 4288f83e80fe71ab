#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torusq/knotinv.hpp"
#include "torusq/multiplicity.hpp"
#include "torusq/wcharacter.hpp"

namespace torusq {

// One row of a ratio table: the multiplicities of two fixed weights in
// L(n*lambda) and their exact quotient when both are nonzero.
struct RatioRow {
    long n = 0;
    Int mult1;
    Int mult2;
    bool defined = false; // both multiplicities nonzero
    Rat ratio;            // mult1 / mult2, exact, when defined
    Rat deviation;        // |ratio - 1| when defined
};

// Empirical trend table for the multiplicity quotient
// m_{n lambda}(mu1) / m_{n lambda}(mu2) along admissible n (n = 1 mod step,
// step = order of lambda's coset in weight/root lattice quotient, so that
// n*lambda stays in the coset of lambda).  The harness observes a finite
// range and never proves an asymptotic statement; `label` says so.
struct RatioReport {
    Weight lambda;
    Weight mu1;
    Weight mu2;
    long step = 1;
    std::vector<RatioRow> rows;         // one per admissible n <= n_max
    bool monotone = false;              // deviations nonincreasing over defined rows
    std::optional<Rat> final_deviation; // deviation at the last defined row
    std::string label = "EMPIRICAL";
};

// Exact ratio table for admissible n <= n_max.  Rows with a zero
// multiplicity on either side are kept but flagged undefined.
// Throws CosetMismatchError unless mu1, mu2 lie in lambda's coset.
RatioReport ratio_table(const RootDatum& d, const Weight& lam,
                        const Weight& mu1, const Weight& mu2, long n_max);

enum class LimitRegime { SimplyLaced, ShortRootBound };

// Agreement depth of the normalized invariant against the limit series:
// depth = window when every exponent <= window matches (full), otherwise the
// first non-matching exponent.  Coefficients c (invariant) and t (target)
// match when t != 0 and |c/t - 1| <= tolerance, or t == 0 and |c| <= tolerance;
// the invariant's coefficients converge to the target's ratio-wise, so exact
// equality is the tolerance-0 special case, not the general situation.
struct StabilizationRow {
    long n = 0;
    Rat depth;
    bool full = false;
};

struct StabilizationReport {
    TorusKnot knot{2, 3};
    Weight lambda;
    LimitRegime regime = LimitRegime::SimplyLaced;
    int node = 0; // marked node selecting the target in the simply-laced regime
    Rat window;
    Rat tolerance;
    long step = 1;
    std::vector<StabilizationRow> rows;
    bool nondecreasing = false;        // depths nondecreasing in n (observed, not assumed)
    std::optional<long> stabilized_at; // least admissible n with full-window agreement
    std::string label = "EMPIRICAL";
};

// Compare jones_hat(n*lambda) against the applicable limit series through
// the window, for admissible n <= n_max, under the relative tolerance
// described at StabilizationRow.  The target is the simply-laced limit at
// lambda's marked node when that regime applies, else the short-root-bound
// limit; throws NoTheoremAppliesError when neither does.
StabilizationReport stabilization(const RootDatum& d, const WeylGroup& g,
                                  const TorusKnot& k, const Weight& lam,
                                  const Rat& window, long n_max,
                                  const Rat& tolerance = make_rat(1, 10));

// Finite-difference estimate of the degree-th leading coefficient of
// n -> m_{n lambda}(mu): sample at anchor - k*stride (k = 0..degree) along
// the admissible subsequence with the widest stride keeping every sample
// >= 1, and return  (forward difference of order `degree`) / (degree! * stride^degree).
struct LeadingTermFit {
    long degree = 1;
    long stride = 1;
    long anchor = 1;          // largest admissible n <= n_max
    std::vector<long> points; // sample positions, increasing
    std::vector<Int> samples; // m_{points[i] * lambda}(mu)
    Rat estimate;
};

LeadingTermFit leading_term_fit(const RootDatum& d, const Weight& lam,
                                const Weight& mu, long degree, long n_max);

} // namespace torusq
