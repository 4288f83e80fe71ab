#include "torusq/weyl.hpp"

#include <algorithm>
#include <deque>

#include "torusq/rootdata.hpp"

namespace torusq {

namespace {

IVec identity_matrix(size_t n) {
    IVec m(n * n, 0);
    for (size_t i = 0; i < n; ++i) m[i * n + i] = 1;
    return m;
}

IVec mat_mul(size_t n, const IVec& a, const IVec& b) {
    IVec c(n * n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            long aik = a[i * n + k];
            if (aik == 0) continue;
            for (size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
        }
    return c;
}

} // namespace

WeylElement weyl_identity(size_t rank) {
    WeylElement w;
    w.rank = rank;
    w.mat = identity_matrix(rank);
    w.sign = 1;
    return w;
}

WeylElement simple_reflection(const RootDatum& d, int i) {
    if (i < 1 || static_cast<size_t>(i) > d.rank)
        throw PreconditionError("simple_reflection: index out of range");
    size_t n = d.rank;
    WeylElement w;
    w.rank = n;
    w.mat = identity_matrix(n);
    // r_i(x) = x - <x, alpha_i-vee> alpha_i; only root coordinate i changes.
    size_t r = static_cast<size_t>(i - 1);
    for (size_t j = 0; j < n; ++j) w.mat[r * n + j] -= d.cartan[r][j];
    w.word = {i};
    w.sign = -1;
    return w;
}

WeylElement compose(const WeylElement& a, const WeylElement& b) {
    if (a.rank != b.rank) throw PreconditionError("compose: rank mismatch");
    WeylElement c;
    c.rank = a.rank;
    c.mat = mat_mul(a.rank, a.mat, b.mat);
    c.word = a.word;
    c.word.insert(c.word.end(), b.word.begin(), b.word.end());
    c.sign = a.sign * b.sign;
    return c;
}

WeylElement inverse(const WeylElement& w) {
    WeylElement r;
    r.rank = w.rank;
    // reflections are involutions, so the reversed word evaluates to the
    // inverse; the matrix is inverted directly (unimodular, so exact)
    r.word.assign(w.word.rbegin(), w.word.rend());
    r.sign = w.sign;
    r.mat = identity_matrix(w.rank);
    size_t n = w.rank;
    std::vector<RVec> aug(n, RVec(2 * n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) aug[i][j] = Rat(w.mat[i * n + j]);
        aug[i][n + i] = 1;
    }
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug[piv][col] == 0) ++piv;
        if (piv == n) throw InternalError("inverse: singular Weyl matrix");
        std::swap(aug[col], aug[piv]);
        Rat p = aug[col][col];
        for (size_t j = 0; j < 2 * n; ++j) aug[col][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (size_t j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (!is_integer(aug[i][n + j]))
                throw InternalError("inverse: non-integral inverse");
            r.mat[i * n + j] = static_cast<long>(aug[i][n + j].get_num().get_si());
        }
    return r;
}

RVec act(const WeylElement& w, const RVec& x) {
    if (x.size() != w.rank) throw PreconditionError("act: rank mismatch");
    size_t n = w.rank;
    RVec y(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (w.mat[i * n + j] != 0) y[i] += Rat(w.mat[i * n + j]) * x[j];
    return y;
}

Weight act(const WeylElement& w, const Weight& x) { return Weight(act(w, x.rc)); }

size_t WeylGroup::find(const WeylElement& w) const {
    auto it = index_of.find(w.mat);
    if (it == index_of.end()) throw InternalError("WeylGroup::find: unknown element");
    return it->second;
}

WeylGroup enumerate_weyl(const RootDatum& d) {
    size_t n = d.rank;
    std::vector<WeylElement> gens;
    gens.reserve(n);
    for (size_t i = 1; i <= n; ++i) gens.push_back(simple_reflection(d, static_cast<int>(i)));

    WeylGroup g;
    g.elements.push_back(weyl_identity(n));
    g.index_of.emplace(g.elements[0].mat, 0);

    // Breadth-first over right multiplication.  Parents are visited in
    // (length, lex-word) order and generators in increasing index, so the
    // first discovery of an element carries its lexicographically least
    // reduced word and its true length.
    size_t level_begin = 0;
    while (level_begin < g.elements.size()) {
        size_t level_end = g.elements.size();
        for (size_t p = level_begin; p < level_end; ++p) {
            for (size_t s = 0; s < n; ++s) {
                IVec m = mat_mul(n, g.elements[p].mat, gens[s].mat);
                if (g.index_of.count(m)) continue;
                WeylElement w;
                w.rank = n;
                w.mat = std::move(m);
                w.word = g.elements[p].word;
                w.word.push_back(static_cast<int>(s + 1));
                w.sign = -g.elements[p].sign;
                g.index_of.emplace(w.mat, g.elements.size());
                g.elements.push_back(std::move(w));
            }
        }
        level_begin = level_end;
    }
    return g;
}

std::pair<Weight, WeylElement> dominant_representative(const RootDatum& d, const Weight& x) {
    if (x.rank() != d.rank) throw PreconditionError("dominant_representative: rank mismatch");
    RVec v = x.rc;
    std::vector<int> applied;  // reflections in application order
    for (;;) {
        int neg = 0;
        for (size_t i = 1; i <= d.rank; ++i) {
            if (d.coroot_pairing(v, static_cast<int>(i)) < 0) {
                neg = static_cast<int>(i);
                break;
            }
        }
        if (neg == 0) break;
        // r_i changes only root coordinate i
        Rat pairing = d.coroot_pairing(v, neg);
        v[neg - 1] -= pairing;
        applied.push_back(neg);
    }
    WeylElement w = weyl_identity(d.rank);
    for (int i : applied) w = compose(simple_reflection(d, i), w);
    // word built by compose is (last applied, ..., first applied) and is
    // reduced: each ascent step strictly drops the count of violated walls
    w.word.clear();
    w.word.assign(applied.rbegin(), applied.rend());
    return {Weight(std::move(v)), std::move(w)};
}

} // namespace torusq
