#include "torusq/multiplicity.hpp"

#include <algorithm>
#include <cstdlib>

#include "torusq/errors.hpp"

namespace torusq {

namespace {

// Fold an arbitrary weight (root coordinates) into the dominant chamber by
// repeated simple reflections.  Tracks only the vector, not the group element.
RVec fold_dominant(const RootDatum& d, RVec x) {
    const int n = d.rank;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int i = 1; i <= n; ++i) {
            Rat p = d.coroot_pairing(x, i);
            if (p < 0) {
                x[static_cast<size_t>(i) - 1] -= p; // s_i acts on root coords
                moved = true;
            }
        }
    }
    return x;
}

// Offset beta = lam - mu as integer coordinates; false when mu is not in
// lam + Q-bar or the offset leaves the nonnegative cone.
bool offset_of(const Weight& lam, const RVec& mu, IVec& beta) {
    const size_t n = lam.rc.size();
    for (size_t i = 0; i < n; ++i) {
        Rat diff = lam.rc[i] - mu[i];
        if (!is_integer(diff)) return false;
        Int z = num(diff);
        if (z < 0 || !z.fits_slong_p()) return false;
        beta[i] = z.get_si();
    }
    return true;
}

long height_of(const IVec& beta) {
    long h = 0;
    for (long b : beta) h += b;
    return h;
}

unsigned long checked_ulong(const Int& v, const char* what) {
    if (v < 0 || !v.fits_ulong_p())
        throw PreconditionError(std::string(what) + ": value out of range");
    return v.get_ui();
}

Int binom(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

Int MultTable::mult(const RootDatum& d, const Weight& mu) const {
    RVec folded = fold_dominant(d, mu.rc);
    IVec beta(lambda.rc.size(), 0);
    if (!offset_of(lambda, folded, beta)) return 0;
    auto it = offsets.find(beta);
    return it == offsets.end() ? Int(0) : it->second;
}

std::vector<std::pair<Weight, Int>>
MultTable::dominant_entries(const RootDatum& d) const {
    (void)d;
    std::vector<std::pair<IVec, Int>> rows(offsets.begin(), offsets.end());
    std::sort(rows.begin(), rows.end(),
              [](const std::pair<IVec, Int>& a, const std::pair<IVec, Int>& b) {
                  long ha = height_of(a.first), hb = height_of(b.first);
                  if (ha != hb) return ha < hb;
                  return a.first < b.first;
              });
    std::vector<std::pair<Weight, Int>> out;
    out.reserve(rows.size());
    for (const auto& [beta, m] : rows) {
        RVec rc = lambda.rc;
        for (size_t i = 0; i < rc.size(); ++i) rc[i] -= beta[i];
        out.emplace_back(Weight(std::move(rc)), m);
    }
    return out;
}

MultTable weight_system(const RootDatum& d, const Weight& lam) {
    if (lam.rank() != d.rank)
        throw PreconditionError("weight_system: rank mismatch");
    if (!d.is_integral(lam) || !d.is_dominant(lam))
        throw PreconditionError(
            "weight_system: highest weight must be dominant and integral");
    const int n = d.rank;

    MultTable table;
    table.lambda = lam;

    // Dominant support lives in {lam - beta : beta integer, 0 <= beta <= lam}
    // coordinatewise, because dominant weights have nonnegative root
    // coordinates.
    std::vector<long> box(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        Int f = rat_floor(lam.rc[static_cast<size_t>(i)]);
        if (f < 0) f = 0;
        if (!f.fits_slong_p())
            throw PreconditionError("weight_system: highest weight too large");
        box[static_cast<size_t>(i)] = f.get_si();
    }

    std::vector<std::pair<long, IVec>> order; // (height, offset)
    IVec beta(static_cast<size_t>(n), 0);
    while (true) {
        RVec mu = lam.rc;
        for (int i = 0; i < n; ++i) mu[static_cast<size_t>(i)] -= beta[static_cast<size_t>(i)];
        if (d.is_dominant(Weight(mu)))
            order.emplace_back(height_of(beta), beta);
        int pos = 0;
        while (pos < n && beta[static_cast<size_t>(pos)] == box[static_cast<size_t>(pos)]) {
            beta[static_cast<size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == n) break;
        ++beta[static_cast<size_t>(pos)];
    }
    std::sort(order.begin(), order.end());

    std::vector<RVec> roots;
    roots.reserve(d.pos_roots.size());
    for (const IVec& a : d.pos_roots) {
        RVec v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = Rat(a[static_cast<size_t>(i)]);
        roots.push_back(std::move(v));
    }

    RVec lamrho = lam.rc;
    for (int i = 0; i < n; ++i) lamrho[static_cast<size_t>(i)] += d.rho_rc[static_cast<size_t>(i)];
    const Rat top2 = d.inner(lamrho, lamrho);

    auto& M = table.offsets;
    IVec bp(static_cast<size_t>(n), 0);
    for (const auto& [h, off] : order) {
        if (h == 0) {
            M[off] = 1;
            continue;
        }
        RVec mu = lam.rc;
        for (int i = 0; i < n; ++i) mu[static_cast<size_t>(i)] -= off[static_cast<size_t>(i)];

        Rat rhs = 0;
        for (const RVec& alpha : roots) {
            RVec nu = mu;
            while (true) {
                for (int i = 0; i < n; ++i) nu[static_cast<size_t>(i)] += alpha[static_cast<size_t>(i)];
                RVec folded = fold_dominant(d, nu);
                if (!offset_of(lam, folded, bp)) break;
                auto it = M.find(bp);
                if (it == M.end()) break; // left the weight support
                rhs += d.inner(nu, alpha) * Rat(it->second);
            }
        }

        RVec murho = mu;
        for (int i = 0; i < n; ++i) murho[static_cast<size_t>(i)] += d.rho_rc[static_cast<size_t>(i)];
        Rat denom = top2 - d.inner(murho, murho);
        if (!(denom > 0))
            throw InternalError("weight_system: nonpositive recursion denominator");
        Rat value = 2 * rhs / denom;
        if (!is_integer(value) || num(value) <= 0)
            throw InternalError("weight_system: recursion produced a non-positive "
                                "or non-integer multiplicity");
        M[off] = num(value);
    }
    return table;
}

std::map<RVec, Int> full_support(const RootDatum& d, const WeylGroup& g,
                                 const MultTable& table) {
    (void)d;
    std::map<RVec, Int> out;
    for (const auto& [beta, m] : table.offsets) {
        RVec mu = table.lambda.rc;
        for (size_t i = 0; i < mu.size(); ++i) mu[i] -= beta[i];
        for (const WeylElement& w : g.elements) out[act(w, mu)] = m;
    }
    return out;
}

Int kostant_partition(const RootDatum& d, const Weight& beta) {
    const int n = d.rank;
    if (static_cast<int>(beta.rank()) != n)
        throw PreconditionError("kostant_partition: rank mismatch");
    std::vector<long> b(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Rat& c = beta.rc[static_cast<size_t>(i)];
        if (!is_integer(c)) return 0;
        Int z = num(c);
        if (z < 0) return 0;
        if (!z.fits_slong_p())
            throw PreconditionError("kostant_partition: vector too large");
        b[static_cast<size_t>(i)] = z.get_si();
    }

    std::vector<size_t> stride(static_cast<size_t>(n));
    size_t total = 1;
    for (int i = 0; i < n; ++i) {
        stride[static_cast<size_t>(i)] = total;
        total *= static_cast<size_t>(b[static_cast<size_t>(i)] + 1);
    }

    std::vector<Int> dp(total, Int(0));
    dp[0] = 1;
    IVec cell(static_cast<size_t>(n), 0);
    for (const IVec& a : d.pos_roots) {
        size_t off = 0;
        for (int i = 0; i < n; ++i) off += static_cast<size_t>(a[static_cast<size_t>(i)]) * stride[static_cast<size_t>(i)];
        std::fill(cell.begin(), cell.end(), 0);
        for (size_t idx = 0; idx < total; ++idx) {
            bool ge = true;
            for (int i = 0; i < n; ++i) {
                if (cell[static_cast<size_t>(i)] < a[static_cast<size_t>(i)]) {
                    ge = false;
                    break;
                }
            }
            if (ge) dp[idx] += dp[idx - off];
            int pos = 0;
            while (pos < n && cell[static_cast<size_t>(pos)] == b[static_cast<size_t>(pos)]) {
                cell[static_cast<size_t>(pos)] = 0;
                ++pos;
            }
            if (pos < n) ++cell[static_cast<size_t>(pos)];
        }
    }
    return dp[total - 1];
}

Int kostant_mult(const RootDatum& d, const WeylGroup& g, const Weight& lam,
                 const Weight& mu) {
    Weight lamrho = lam + d.rho();
    Weight murho = mu + d.rho();
    Int total = 0;
    for (const WeylElement& w : g.elements) {
        Weight v = act(w, lamrho) - murho;
        Int p = kostant_partition(d, v);
        if (w.sign > 0)
            total += p;
        else
            total -= p;
    }
    return total;
}

Int weyl_dim(const RootDatum& d, const Weight& lam) {
    if (!d.is_integral(lam) || !d.is_dominant(lam))
        throw PreconditionError("weyl_dim: weight must be dominant and integral");
    Weight lamrho = lam + d.rho();
    Rat prod = 1;
    for (const IVec& a : d.pos_roots) {
        RVec alpha(a.size());
        for (size_t i = 0; i < a.size(); ++i) alpha[i] = Rat(a[i]);
        prod *= d.inner(lamrho.rc, alpha) / d.inner(d.rho_rc, alpha);
    }
    if (!is_integer(prod) || num(prod) <= 0)
        throw InternalError("weyl_dim: product formula gave a non-integer");
    return num(prod);
}

Int symmetric_power_mult(const RootDatum& d, long j, const Weight& mu) {
    const char s = d.type.series;
    const int r = d.rank;
    if (s != 'B' && s != 'C' && s != 'D')
        throw UnsupportedTypeError(
            "symmetric_power_mult: closed form covers series B, C, D only");
    if (static_cast<int>(mu.rank()) != r)
        throw PreconditionError("symmetric_power_mult: rank mismatch");
    if (j < 0)
        throw PreconditionError("symmetric_power_mult: power must be nonnegative");

    // Orthogonal-coordinate exponents of mu (coordinates of the character
    // monomial), derived from root coordinates c_1..c_r with c_0 = 0:
    //   B: e_k = c_k - c_{k-1}
    //   C: e_k = c_k - c_{k-1} (k < r),  e_r = 2c_r - c_{r-1}
    //   D: e_k = c_k - c_{k-1} (k <= r-2),  e_{r-1} = c_{r-1} + c_r - c_{r-2},
    //      e_r = c_r - c_{r-1}
    auto c = [&](int k) -> Rat { // 1-based, c(0) = 0
        return k == 0 ? Rat(0) : mu.rc[static_cast<size_t>(k) - 1];
    };
    std::vector<Rat> eps(static_cast<size_t>(r));
    if (s == 'B') {
        for (int k = 1; k <= r; ++k) eps[static_cast<size_t>(k) - 1] = c(k) - c(k - 1);
    } else if (s == 'C') {
        for (int k = 1; k < r; ++k) eps[static_cast<size_t>(k) - 1] = c(k) - c(k - 1);
        eps[static_cast<size_t>(r) - 1] = 2 * c(r) - c(r - 1);
    } else {
        for (int k = 1; k <= r - 2; ++k) eps[static_cast<size_t>(k) - 1] = c(k) - c(k - 1);
        eps[static_cast<size_t>(r) - 2] = c(r - 1) + c(r) - c(r - 2);
        eps[static_cast<size_t>(r) - 1] = c(r) - c(r - 1);
    }

    Int S = 0;
    for (const Rat& e : eps) {
        if (!is_integer(e))
            throw CosetMismatchError(
                "symmetric_power_mult: weight is not in the required coset");
        S += abs(num(e));
    }
    unsigned long s_abs = checked_ulong(S, "symmetric_power_mult");

    if (s == 'C') {
        if ((j - static_cast<long>(s_abs)) % 2 != 0)
            throw CosetMismatchError(
                "symmetric_power_mult: weight is not in the required coset");
        if (j < static_cast<long>(s_abs))
            throw OutOfValidityWindowError(
                "symmetric_power_mult: power below the validity window");
        unsigned long t = (static_cast<unsigned long>(j) - s_abs) / 2;
        return binom(t + static_cast<unsigned long>(r) - 1,
                     static_cast<unsigned long>(r) - 1);
    }
    if (s == 'B') {
        long e = (j + static_cast<long>(s_abs)) % 2;
        if (j - 2 < static_cast<long>(s_abs) + e)
            throw OutOfValidityWindowError(
                "symmetric_power_mult: power below the validity window");
        unsigned long t =
            (static_cast<unsigned long>(j) - s_abs - static_cast<unsigned long>(e)) / 2;
        return binom(t + static_cast<unsigned long>(r) - 1,
                     static_cast<unsigned long>(r) - 1);
    }
    // series D
    if ((j - static_cast<long>(s_abs)) % 2 != 0)
        throw CosetMismatchError(
            "symmetric_power_mult: weight is not in the required coset");
    if (j < static_cast<long>(s_abs) + 2)
        throw OutOfValidityWindowError(
            "symmetric_power_mult: power below the validity window");
    unsigned long t = (static_cast<unsigned long>(j) - s_abs) / 2;
    return binom(t + static_cast<unsigned long>(r) - 2,
                 static_cast<unsigned long>(r) - 2);
}

long min_colour_index(const RootDatum& d, const Weight& lam, const Weight& mu,
                      long step) {
    if (step < 1)
        throw PreconditionError("min_colour_index: step must be positive");
    if (!d.is_integral(lam) || !d.is_dominant(lam))
        throw PreconditionError(
            "min_colour_index: colour must be dominant and integral");
    bool zero = true;
    for (const Rat& c : lam.rc)
        if (c != 0) zero = false;
    if (zero)
        throw PreconditionError("min_colour_index: colour must be nonzero");
    if (!d.in_root_lattice(mu - lam))
        throw CosetMismatchError(
            "min_colour_index: weight is not in the colour's coset");

    Weight folded(fold_dominant(d, mu.rc));
    // Dominant nonzero weights have strictly positive root coordinates, so
    // membership n*lam - folded >= 0 is eventually reached; bound the scan.
    Rat ratio = 0;
    for (size_t i = 0; i < folded.rc.size(); ++i) {
        Rat r = folded.rc[i] / lam.rc[i];
        if (r > ratio) ratio = r;
    }
    Int bound_i = rat_ceil(ratio) + step + 1;
    if (!bound_i.fits_slong_p())
        throw PreconditionError("min_colour_index: weight too large");
    long bound = bound_i.get_si();

    for (long n = 1; n <= bound; n += step) {
        if (d.in_positive_root_cone(n * lam - folded)) return n;
    }
    throw InternalError("min_colour_index: scan bound exceeded");
}

} // namespace torusq
