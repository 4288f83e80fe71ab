#include "torusq/rootdata.hpp"

#include <algorithm>
#include <unordered_set>

namespace torusq {

Weight operator+(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw PreconditionError("weight addition: rank mismatch");
    RVec r(a.rank());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.rc[i] + b.rc[i];
    return Weight(std::move(r));
}

Weight operator-(const Weight& a, const Weight& b) {
    if (a.rank() != b.rank()) throw PreconditionError("weight subtraction: rank mismatch");
    RVec r(a.rank());
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.rc[i] - b.rc[i];
    return Weight(std::move(r));
}

Weight operator-(const Weight& a) {
    RVec r(a.rank());
    for (size_t i = 0; i < r.size(); ++i) r[i] = -a.rc[i];
    return Weight(std::move(r));
}

Weight operator*(const Rat& c, const Weight& a) {
    RVec r(a.rank());
    for (size_t i = 0; i < r.size(); ++i) r[i] = c * a.rc[i];
    return Weight(std::move(r));
}

Weight operator*(long c, const Weight& a) { return Rat(c) * a; }

namespace {

using Mat = std::vector<RVec>;

// Gauss-Jordan inverse of a nonsingular rational matrix.
Mat invert(Mat a) {
    size_t n = a.size();
    Mat inv(n, RVec(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InternalError("invert: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(inv[col], inv[piv]);
        Rat p = a[col][col];
        for (size_t j = 0; j < n; ++j) {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Solve A v = b for nonsingular rational A.
RVec solve(Mat a, RVec b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw InternalError("solve: singular matrix");
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        Rat p = a[col][col];
        for (size_t j = 0; j < n; ++j) a[col][j] /= p;
        b[col] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    return b;
}

Rat determinant(Mat a) {
    size_t n = a.size();
    Rat det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return Rat(0);
        if (piv != col) {
            std::swap(a[col], a[piv]);
            det = -det;
        }
        det *= a[col][col];
        Rat p = a[col][col];
        for (size_t i = col + 1; i < n; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] / p;
            for (size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
        }
    }
    return det;
}

// One-dimensional kernel of a square rational matrix, normalized so the
// first coordinate equals 1.  Throws InternalError if the kernel dimension
// is not exactly 1 or the normalization divides by zero.
RVec kernel_vector(Mat a) {
    size_t n = a.size();
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < n && row < n; ++col) {
        size_t piv = row;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) continue;
        std::swap(a[row], a[piv]);
        Rat p = a[row][col];
        for (size_t j = 0; j < n; ++j) a[row][j] /= p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rat f = a[i][col];
            for (size_t j = 0; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (pivot_col.size() != n - 1)
        throw InternalError("kernel_vector: kernel dimension is not 1");
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;
    RVec v(n, Rat(0));
    v[free_col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r) v[pivot_col[r]] = -a[r][free_col];
    if (v[0] == 0) throw InternalError("kernel_vector: cannot normalize first entry");
    Rat scale = Rat(1) / v[0];
    for (auto& x : v) x *= scale;
    return v;
}

std::vector<IVec> cartan_matrix(const LieType& t) {
    size_t n = static_cast<size_t>(t.rank);
    std::vector<IVec> c(n, IVec(n, 0));
    for (size_t i = 0; i < n; ++i) c[i][i] = 2;
    auto bond = [&](size_t i, size_t j, long cij, long cji) {
        c[i - 1][j - 1] = cij;
        c[j - 1][i - 1] = cji;
    };
    auto chain = [&](size_t from, size_t to) {
        for (size_t i = from; i < to; ++i) bond(i, i + 1, -1, -1);
    };
    switch (t.series) {
        case 'A':
            chain(1, n);
            break;
        case 'B':  // alpha_n short: row n carries the -2
            chain(1, n - 1);
            bond(n - 1, n, -1, -2);
            break;
        case 'C':  // alpha_n long: row n-1 carries the -2
            chain(1, n - 1);
            bond(n - 1, n, -2, -1);
            break;
        case 'D':
            chain(1, n - 1);
            bond(n - 2, n, -1, -1);
            break;
        case 'E':  // chain 1-3-4-5-..., node 2 hangs off node 4
            bond(1, 3, -1, -1);
            bond(3, 4, -1, -1);
            bond(2, 4, -1, -1);
            chain(4, n);
            break;
        case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            bond(1, 2, -1, -1);
            bond(2, 3, -1, -2);
            bond(3, 4, -1, -1);
            break;
        case 'G':  // alpha_1 short: row 1 carries the -3
            bond(1, 2, -3, -1);
            break;
        default:
            throw PreconditionError("cartan_matrix: unknown series");
    }
    return c;
}

} // namespace

Rat RootDatum::inner(const RVec& x, const RVec& y) const {
    if (x.size() != rank || y.size() != rank)
        throw PreconditionError("inner: rank mismatch");
    Rat s(0);
    for (size_t i = 0; i < rank; ++i) {
        if (x[i] == 0) continue;
        Rat row(0);
        for (size_t j = 0; j < rank; ++j)
            if (y[j] != 0) row += gram[i][j] * y[j];
        s += x[i] * row;
    }
    return s;
}

Rat RootDatum::coroot_pairing(const RVec& x, int i) const {
    if (i < 1 || static_cast<size_t>(i) > rank)
        throw PreconditionError("coroot_pairing: index out of range");
    Rat s(0);
    const IVec& row = cartan[static_cast<size_t>(i - 1)];
    for (size_t j = 0; j < rank; ++j)
        if (x[j] != 0) s += Rat(row[j]) * x[j];
    return s;
}

RVec RootDatum::weight_coords(const RVec& root_coords) const {
    RVec w(rank, Rat(0));
    for (size_t i = 0; i < rank; ++i)
        w[i] = coroot_pairing(root_coords, static_cast<int>(i + 1));
    return w;
}

RVec RootDatum::root_coords_of_weight(const RVec& wc) const {
    if (wc.size() != rank) throw PreconditionError("root_coords_of_weight: rank mismatch");
    RVec x(rank, Rat(0));
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < rank; ++j)
            if (wc[j] != 0) x[i] += cartan_inv[i][j] * wc[j];
    return x;
}

Weight RootDatum::weight_from_fundamental(const RVec& wc) const {
    return Weight(root_coords_of_weight(wc));
}

Weight RootDatum::fweight(int j) const {
    if (j == 0) return zero();
    if (j < 0 || static_cast<size_t>(j) > rank)
        throw PreconditionError("fweight: index out of range");
    return Weight(fund_rc[static_cast<size_t>(j - 1)]);
}

Weight RootDatum::highest_root() const {
    RVec r(rank);
    for (size_t i = 0; i < rank; ++i) r[i] = Rat(theta[i]);
    return Weight(std::move(r));
}

Weight RootDatum::simple_root(int i) const {
    if (i < 1 || static_cast<size_t>(i) > rank)
        throw PreconditionError("simple_root: index out of range");
    RVec r(rank, Rat(0));
    r[static_cast<size_t>(i - 1)] = 1;
    return Weight(std::move(r));
}

bool RootDatum::is_dominant(const Weight& x) const {
    for (size_t i = 1; i <= rank; ++i)
        if (coroot_pairing(x, static_cast<int>(i)) < 0) return false;
    return true;
}

bool RootDatum::is_integral(const Weight& x) const {
    for (size_t i = 1; i <= rank; ++i)
        if (!is_integer(coroot_pairing(x, static_cast<int>(i)))) return false;
    return true;
}

bool RootDatum::in_root_lattice(const Weight& x) const {
    for (const Rat& c : x.rc)
        if (!is_integer(c)) return false;
    return true;
}

bool RootDatum::in_positive_root_cone(const Weight& x) const {
    for (const Rat& c : x.rc)
        if (!is_integer(c) || c < 0) return false;
    return true;
}

const SigmaData& RootDatum::sigma_data(int j) const {
    auto it = sigma.find(j);
    if (it == sigma.end())
        throw PreconditionError("sigma_data: index " + std::to_string(j) + " not in J");
    return it->second;
}

long coset_order(const RootDatum& d, const Weight& lam) {
    if (!d.is_integral(lam))
        throw PreconditionError("coset_order: weight is not integral");
    long bound = static_cast<long>(d.lattice_index.get_si());
    for (long s = 1; s <= bound; ++s) {
        bool integral = true;
        for (const Rat& c : lam.rc)
            if (!is_integer(Rat(s) * c)) {
                integral = false;
                break;
            }
        if (integral) return s;
    }
    throw InternalError("coset_order: no multiple landed in the root lattice");
}

RootDatum build_root_datum(const LieType& t) {
    LieType type = make_lie_type(t.series, t.rank);
    RootDatum d;
    d.type = type;
    d.rank = static_cast<size_t>(type.rank);
    size_t n = d.rank;
    d.cartan = cartan_matrix(type);

    // root lengths from the symmetrization d_i C_ij = d_j C_ji, scaled so
    // long roots have squared length 2
    {
        RVec len(n, Rat(0));
        len[0] = 1;
        std::vector<size_t> todo{0};
        while (!todo.empty()) {
            size_t i = todo.back();
            todo.pop_back();
            for (size_t j = 0; j < n; ++j) {
                if (j == i || d.cartan[i][j] == 0 || len[j] != 0) continue;
                len[j] = len[i] * Rat(d.cartan[i][j]) / Rat(d.cartan[j][i]);
                todo.push_back(j);
            }
        }
        Rat mx(0);
        for (const Rat& v : len) {
            if (v == 0) throw InternalError("build_root_datum: disconnected diagram");
            if (v > mx) mx = v;
        }
        d.simple_norms.resize(n);
        d.gram.assign(n, RVec(n, Rat(0)));
        for (size_t i = 0; i < n; ++i) d.simple_norms[i] = 2 * len[i] / mx;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                d.gram[i][j] = Rat(d.cartan[i][j]) * d.simple_norms[i] / 2;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (d.gram[i][j] != d.gram[j][i])
                    throw InternalError("build_root_datum: asymmetric Gram matrix");
        d.d2 = *std::min_element(d.simple_norms.begin(), d.simple_norms.end());
    }

    // inverse Cartan, fundamental weights, Weyl vector
    {
        Mat c(n, RVec(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) c[i][j] = Rat(d.cartan[i][j]);
        d.cartan_inv = invert(c);
        Rat det = determinant(c);
        if (!is_integer(det) || det <= 0)
            throw InternalError("build_root_datum: bad Cartan determinant");
        d.lattice_index = num(det);
        d.fund_rc.assign(n, RVec(n, Rat(0)));
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) d.fund_rc[j][i] = d.cartan_inv[i][j];
        d.rho_rc.assign(n, Rat(0));
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) d.rho_rc[i] += d.cartan_inv[i][j];
    }

    // positive roots by closure over root strings, level by level in height
    {
        std::unordered_set<IVec, IVecHash> seen;
        auto is_root = [&](const IVec& v) {
            if (seen.count(v)) return true;
            IVec neg(v.size());
            for (size_t i = 0; i < v.size(); ++i) neg[i] = -v[i];
            return seen.count(neg) > 0;
        };
        std::vector<IVec> frontier;
        for (size_t i = 0; i < n; ++i) {
            IVec a(n, 0);
            a[i] = 1;
            seen.insert(a);
            frontier.push_back(a);
            d.pos_roots.push_back(a);
        }
        while (!frontier.empty()) {
            std::vector<IVec> next;
            for (const IVec& a : frontier) {
                for (size_t i = 0; i < n; ++i) {
                    IVec cand = a;
                    cand[i] += 1;
                    if (seen.count(cand)) continue;
                    // alpha_i-string through a: candidate is a root iff
                    // p - <a, alpha_i-vee> >= 1, p = steps down within the system
                    long pairing = 0;
                    for (size_t j = 0; j < n; ++j) pairing += d.cartan[i][j] * a[j];
                    long p = 0;
                    IVec down = a;
                    for (;;) {
                        down[i] -= 1;
                        bool zero = std::all_of(down.begin(), down.end(),
                                                [](long x) { return x == 0; });
                        if (zero || !is_root(down)) break;
                        ++p;
                    }
                    if (p - pairing >= 1) {
                        seen.insert(cand);
                        d.pos_roots.push_back(cand);
                        next.push_back(cand);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::stable_sort(d.pos_roots.begin(), d.pos_roots.end(),
                         [](const IVec& a, const IVec& b) {
                             long ha = 0, hb = 0;
                             for (long x : a) ha += x;
                             for (long x : b) hb += x;
                             if (ha != hb) return ha < hb;
                             return a < b;
                         });
        d.theta = d.pos_roots.back();
        long theta_height = 0;
        for (long x : d.theta) theta_height += x;
        for (size_t k = 0; k + 1 < d.pos_roots.size(); ++k) {
            long hk = 0;
            for (long x : d.pos_roots[k]) hk += x;
            if (hk == theta_height)
                throw InternalError("build_root_datum: highest root not unique");
        }
        if (!d.is_dominant(d.highest_root()))
            throw InternalError("build_root_datum: highest root not dominant");
        if (d.norm2(d.highest_root()) != 2)
            throw InternalError("build_root_datum: (theta, theta) != 2");
        // cross-check rho against the half sum of positive roots
        RVec half(n, Rat(0));
        for (const IVec& a : d.pos_roots)
            for (size_t i = 0; i < n; ++i) half[i] += make_rat(a[i], 2);
        if (half != d.rho_rc)
            throw InternalError("build_root_datum: Weyl vector mismatch");
    }

    // labels and colabels as the null vectors of the affine Cartan matrix
    {
        Mat ac(n + 1, RVec(n + 1, Rat(0)));
        ac[0][0] = 2;
        RVec theta_r(n);
        for (size_t i = 0; i < n; ++i) theta_r[i] = Rat(d.theta[i]);
        for (size_t j = 1; j <= n; ++j) {
            RVec ej(n, Rat(0));
            ej[j - 1] = 1;
            Rat c0j = -d.inner(ej, theta_r);  // <alpha_j, -theta-vee>, theta long
            Rat cj0 = -d.coroot_pairing(theta_r, static_cast<int>(j));
            if (!is_integer(c0j) || !is_integer(cj0))
                throw InternalError("build_root_datum: non-integral affine Cartan entry");
            ac[0][j] = c0j;
            ac[j][0] = cj0;
            for (size_t k = 1; k <= n; ++k) ac[j][k] = Rat(d.cartan[j - 1][k - 1]);
        }
        RVec a = kernel_vector(ac);
        Mat act(n + 1, RVec(n + 1, Rat(0)));
        for (size_t i = 0; i <= n; ++i)
            for (size_t j = 0; j <= n; ++j) act[i][j] = ac[j][i];
        RVec av = kernel_vector(act);
        d.labels.resize(n + 1);
        d.colabels.resize(n + 1);
        for (size_t i = 0; i <= n; ++i) {
            if (!is_integer(a[i]) || a[i] <= 0 || !is_integer(av[i]) || av[i] <= 0)
                throw InternalError("build_root_datum: marks are not positive integers");
            d.labels[i] = static_cast<long>(num(a[i]).get_si());
            d.colabels[i] = static_cast<long>(num(av[i]).get_si());
            d.h += d.labels[i];
            d.hdual += d.colabels[i];
        }
        for (size_t i = 1; i <= n; ++i) {
            if (d.labels[i] != d.theta[i - 1])
                throw InternalError("build_root_datum: labels disagree with theta");
            if (Rat(d.colabels[i]) != Rat(d.labels[i]) * d.simple_norms[i - 1] / 2)
                throw InternalError("build_root_datum: colabels disagree with root lengths");
        }
    }

    // J and the sigma data
    for (size_t j = 0; j <= n; ++j)
        if (d.labels[j] == 1 && d.colabels[j] == 1) d.J.push_back(static_cast<int>(j));
    for (int j : d.J) {
        SigmaData sd;
        if (j == 0) {
            sd.elem = weyl_identity(n);
            sd.i = 0;
            sd.sign = 1;
        } else {
            // target simple system S = {alpha_1,..,alpha_j-hat,..,alpha_l,-theta};
            // solve (v, beta) = 1 for beta in S, fold regular v to the dominant
            // chamber; the fold w maps S to the simple system, so sigma = w^{-1}
            Mat a;
            RVec theta_r(n);
            for (size_t i = 0; i < n; ++i) theta_r[i] = Rat(d.theta[i]);
            for (size_t k = 1; k <= n; ++k) {
                if (static_cast<int>(k) == j) continue;
                RVec row(n);
                for (size_t c = 0; c < n; ++c) row[c] = d.gram[k - 1][c];
                a.push_back(row);
            }
            RVec trow(n, Rat(0));
            for (size_t c = 0; c < n; ++c)
                for (size_t r = 0; r < n; ++r) trow[c] += -theta_r[r] * d.gram[r][c];
            a.push_back(trow);
            RVec v = solve(a, RVec(n, Rat(1)));
            auto [vplus, w] = dominant_representative(d, Weight(v));
            for (size_t i = 1; i <= n; ++i)
                if (d.coroot_pairing(vplus, static_cast<int>(i)) <= 0)
                    throw InternalError("sigma: chamber point not regular dominant");
            WeylElement sig = inverse(w);
            // verify sigma(simple system) = S exactly
            std::vector<IVec> image, target;
            for (size_t k = 1; k <= n; ++k) {
                RVec img = act(sig, RVec(d.simple_root(static_cast<int>(k)).rc));
                IVec iv(n);
                for (size_t c = 0; c < n; ++c) {
                    if (!is_integer(img[c])) throw InternalError("sigma: non-integral image");
                    iv[c] = static_cast<long>(num(img[c]).get_si());
                }
                image.push_back(iv);
                if (static_cast<int>(k) != j) {
                    IVec e(n, 0);
                    e[k - 1] = 1;
                    target.push_back(e);
                }
            }
            IVec mtheta(n);
            for (size_t c = 0; c < n; ++c) mtheta[c] = -d.theta[c];
            target.push_back(mtheta);
            std::sort(image.begin(), image.end());
            std::sort(target.begin(), target.end());
            if (image != target)
                throw InternalError("sigma: image of simple system is not the target base");
            sd.elem = sig;
            sd.sign = sig.sign;
            // partner index: sigma^{-1} Lambda_j = -Lambda_i, i.e. w Lambda_j
            RVec u = act(w, d.fund_rc[static_cast<size_t>(j - 1)]);
            sd.i = -1;
            for (size_t i = 1; i <= n; ++i) {
                RVec neg(n);
                for (size_t c = 0; c < n; ++c) neg[c] = -d.fund_rc[i - 1][c];
                if (u == neg) {
                    sd.i = static_cast<int>(i);
                    break;
                }
            }
            if (sd.i < 0)
                throw InternalError("sigma: sigma^{-1} Lambda_j is not minus a fundamental weight");
            // sign identity and coset pairing
            Rat twice = 2 * d.inner(d.fweight(j), d.rho());
            if (!is_integer(twice))
                throw InternalError("sigma: 2(Lambda_j, rho) not an integer");
            int expect = mpz_even_p(num(twice).get_mpz_t()) ? 1 : -1;
            if (expect != sd.sign)
                throw InternalError("sigma: sign disagrees with (-1)^{2(Lambda_j, rho)}");
            if (!d.in_root_lattice(d.fweight(j) + d.fweight(sd.i)))
                throw InternalError("sigma: Lambda_j + Lambda_i not in the root lattice");
            if (std::find(d.J.begin(), d.J.end(), sd.i) == d.J.end())
                throw InternalError("sigma: partner index not in J");
        }
        d.sigma.emplace(j, std::move(sd));
    }

    return d;
}

} // namespace torusq
