#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "torusq/rootdata.hpp"

using namespace torusq;

namespace {

RVec rvec(std::initializer_list<long> xs) {
    RVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

std::set<RVec> simple_image(const RootDatum& d, const WeylElement& w) {
    std::set<RVec> out;
    for (size_t k = 1; k <= d.rank; ++k)
        out.insert(act(w, d.simple_root(static_cast<int>(k)).rc));
    return out;
}

// the target simple system for sigma_j: drop alpha_j, adjoin -theta
std::set<RVec> sigma_target(const RootDatum& d, int j) {
    std::set<RVec> out;
    for (size_t k = 1; k <= d.rank; ++k)
        if (static_cast<int>(k) != j) out.insert(d.simple_root(static_cast<int>(k)).rc);
    RVec neg(d.rank);
    for (size_t c = 0; c < d.rank; ++c) neg[c] = Rat(-d.theta[c]);
    out.insert(neg);
    return out;
}

} // namespace

TEST_CASE("classical and exceptional invariants") {
    struct Row {
        const char* name;
        size_t roots;
        long h, hdual;
        const char* d2;
        long index;
        std::vector<int> J;
    };
    const Row rows[] = {
        {"A1", 1, 2, 2, "2", 2, {0, 1}},
        {"A2", 3, 3, 3, "2", 3, {0, 1, 2}},
        {"A3", 6, 4, 4, "2", 4, {0, 1, 2, 3}},
        {"B2", 4, 4, 3, "1", 2, {0, 1}},
        {"B3", 9, 6, 5, "1", 2, {0, 1}},
        {"C2", 4, 4, 3, "1", 2, {0, 2}},
        {"C3", 9, 6, 4, "1", 2, {0, 3}},
        {"D3", 6, 4, 4, "2", 4, {0, 1, 2, 3}},
        {"D4", 12, 6, 6, "2", 4, {0, 1, 3, 4}},
        {"E6", 36, 12, 12, "2", 3, {0, 1, 6}},
        {"E7", 63, 18, 18, "2", 2, {0, 7}},
        {"E8", 120, 30, 30, "2", 1, {0}},
        {"F4", 24, 12, 9, "1", 1, {0}},
        {"G2", 6, 6, 4, "2/3", 1, {0}},
    };
    for (const Row& r : rows) {
        CAPTURE(r.name);
        RootDatum d = build_root_datum(parse_lie_type(r.name));
        CHECK(d.pos_roots.size() == r.roots);
        CHECK(d.h == r.h);
        CHECK(d.hdual == r.hdual);
        CHECK(d.d2 == parse_rat(r.d2));
        CHECK(d.lattice_index == r.index);
        CHECK(d.J == r.J);
        CHECK(d.norm2(d.highest_root()) == 2);
        CHECK(d.is_dominant(d.highest_root()));
        CHECK(d.labels[0] == 1);
        CHECK(d.colabels[0] == 1);
        long hs = 0, cs = 0;
        for (long a : d.labels) hs += a;
        for (long a : d.colabels) cs += a;
        CHECK(hs == d.h);
        CHECK(cs == d.hdual);
    }
}

TEST_CASE("full positive root list of the rank-two types") {
    RootDatum g2 = build_root_datum(parse_lie_type("G2"));
    std::vector<IVec> expect_g2 = {{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}};
    auto sorted = [](std::vector<IVec> v) {
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(sorted(g2.pos_roots) == sorted(expect_g2));
    CHECK(g2.theta == IVec{3, 2});
    CHECK(g2.rho_rc == rvec({5, 3}));
    CHECK(g2.cartan[0] == IVec{2, -3});
    CHECK(g2.cartan[1] == IVec{-1, 2});

    RootDatum c2 = build_root_datum(parse_lie_type("C2"));
    std::vector<IVec> expect_c2 = {{1, 0}, {0, 1}, {1, 1}, {2, 1}};
    CHECK(sorted(c2.pos_roots) == sorted(expect_c2));
    CHECK(c2.theta == IVec{2, 1});

    RootDatum b2 = build_root_datum(parse_lie_type("B2"));
    CHECK(b2.theta == IVec{1, 2});
}

TEST_CASE("bilinear form values") {
    RootDatum a1 = build_root_datum(parse_lie_type("A1"));
    CHECK(a1.norm2(a1.fweight(1)) == make_rat(1, 2));
    CHECK(a1.inner(a1.fweight(1), a1.rho()) == make_rat(1, 2));

    RootDatum a2 = build_root_datum(parse_lie_type("A2"));
    CHECK(a2.norm2(a2.rho()) == 2);
    CHECK(a2.inner(a2.fweight(1), a2.fweight(2)) == make_rat(1, 3));
    CHECK(a2.norm2(a2.fweight(1)) == make_rat(2, 3));

    RootDatum c2 = build_root_datum(parse_lie_type("C2"));
    CHECK(c2.norm2(c2.rho()) == make_rat(5, 2));
    CHECK(c2.d2 == 1);

    RootDatum g2 = build_root_datum(parse_lie_type("G2"));
    CHECK(g2.norm2(g2.simple_root(1)) == make_rat(2, 3));
    CHECK(g2.norm2(g2.simple_root(2)) == 2);

    // coroot pairings: <rho, alpha_i-vee> = 1 for all i, every type
    for (const char* nm : {"A3", "B3", "C3", "D4", "F4", "G2"}) {
        RootDatum d = build_root_datum(parse_lie_type(nm));
        for (size_t i = 1; i <= d.rank; ++i)
            CHECK(d.coroot_pairing(d.rho(), static_cast<int>(i)) == 1);
    }
}

TEST_CASE("marks of the extended diagram") {
    RootDatum f4 = build_root_datum(parse_lie_type("F4"));
    CHECK(f4.labels == IVec{1, 2, 3, 4, 2});
    CHECK(f4.colabels == IVec{1, 2, 3, 2, 1});

    RootDatum g2 = build_root_datum(parse_lie_type("G2"));
    CHECK(g2.labels == IVec{1, 3, 2});
    CHECK(g2.colabels == IVec{1, 1, 2});

    RootDatum b3 = build_root_datum(parse_lie_type("B3"));
    CHECK(b3.labels == IVec{1, 1, 2, 2});
    CHECK(b3.colabels == IVec{1, 1, 2, 1});

    RootDatum c3 = build_root_datum(parse_lie_type("C3"));
    CHECK(c3.labels == IVec{1, 2, 2, 1});
    CHECK(c3.colabels == IVec{1, 1, 1, 1});

    RootDatum e6 = build_root_datum(parse_lie_type("E6"));
    CHECK(e6.labels == IVec{1, 1, 2, 2, 3, 2, 1});
}

TEST_CASE("coordinate plumbing round trips") {
    for (const char* nm : {"A2", "B3", "G2", "D4"}) {
        RootDatum d = build_root_datum(parse_lie_type(nm));
        Weight rho = d.rho();
        RVec wc = d.weight_coords(rho.rc);
        CHECK(wc == RVec(d.rank, Rat(1)));  // rho = sum of fundamentals
        CHECK(d.root_coords_of_weight(wc) == rho.rc);
        Weight sum = d.zero();
        for (size_t j = 1; j <= d.rank; ++j) sum = sum + d.fweight(static_cast<int>(j));
        CHECK(sum == rho);
        CHECK(d.fweight(0) == d.zero());
    }
    RootDatum a2 = build_root_datum(parse_lie_type("A2"));
    CHECK(a2.weight_from_fundamental(rvec({1, 1})) == a2.rho());
}

TEST_CASE("lattice predicates") {
    RootDatum a2 = build_root_datum(parse_lie_type("A2"));
    CHECK(a2.is_dominant(a2.rho()));
    CHECK(!a2.is_dominant(-a2.rho()));
    CHECK(a2.is_integral(a2.fweight(1)));
    CHECK(!a2.in_root_lattice(a2.fweight(1)));
    CHECK(a2.in_root_lattice(a2.highest_root()));
    CHECK(a2.in_root_lattice(a2.rho()));  // A2: rho = theta
    CHECK(a2.in_positive_root_cone(a2.rho()));
    CHECK(!a2.in_positive_root_cone(-a2.highest_root()));
    CHECK(!a2.is_integral(make_rat(1, 3) * a2.simple_root(1)));

    RootDatum b2 = build_root_datum(parse_lie_type("B2"));
    CHECK(!b2.in_root_lattice(b2.rho()));  // (3/2, 2) is fractional
    CHECK(b2.is_integral(b2.rho()));
    // difference of Weyl images stays in the root lattice
    WeylGroup grp = enumerate_weyl(b2);
    for (const WeylElement& w : grp.elements)
        CHECK(b2.in_root_lattice(act(w, b2.rho()) - b2.rho()));
}

TEST_CASE("coset order in the fundamental group") {
    RootDatum a2 = build_root_datum(parse_lie_type("A2"));
    CHECK(coset_order(a2, a2.fweight(1)) == 3);
    CHECK(coset_order(a2, a2.fweight(2)) == 3);
    CHECK(coset_order(a2, a2.rho()) == 1);
    CHECK(coset_order(a2, a2.zero()) == 1);

    RootDatum a1 = build_root_datum(parse_lie_type("A1"));
    CHECK(coset_order(a1, a1.fweight(1)) == 2);

    RootDatum c2 = build_root_datum(parse_lie_type("C2"));
    CHECK(coset_order(c2, c2.fweight(1)) == 2);
    CHECK(coset_order(c2, c2.fweight(2)) == 1);

    RootDatum d4 = build_root_datum(parse_lie_type("D4"));
    CHECK(coset_order(d4, d4.fweight(1)) == 2);
    CHECK(coset_order(d4, d4.fweight(2)) == 1);
    CHECK(coset_order(d4, d4.fweight(3)) == 2);
    CHECK(coset_order(d4, d4.fweight(4)) == 2);
}

TEST_CASE("sigma elements match their defining examples") {
    RootDatum a1 = build_root_datum(parse_lie_type("A1"));
    const SigmaData& s1 = a1.sigma_data(1);
    CHECK(s1.elem.word == std::vector<int>{1});
    CHECK(s1.i == 1);
    CHECK(s1.sign == -1);

    RootDatum a2 = build_root_datum(parse_lie_type("A2"));
    const SigmaData& s0 = a2.sigma_data(0);
    CHECK(s0.elem.length() == 0);
    CHECK(s0.i == 0);
    CHECK(s0.sign == 1);
    const SigmaData& t1 = a2.sigma_data(1);
    CHECK(t1.elem.word == std::vector<int>{1, 2});
    CHECK(t1.i == 2);
    CHECK(t1.sign == 1);
    const SigmaData& t2 = a2.sigma_data(2);
    CHECK(t2.i == 1);
    CHECK(t2.sign == 1);

    CHECK_THROWS_AS(a2.sigma_data(5), PreconditionError);
    RootDatum c2 = build_root_datum(parse_lie_type("C2"));
    CHECK_THROWS_AS(c2.sigma_data(1), PreconditionError);  // 1 not in J for C2
}

TEST_CASE("sigma elements agree with exhaustive search") {
    for (const char* nm : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "D3", "D4", "G2"}) {
        CAPTURE(nm);
        RootDatum d = build_root_datum(parse_lie_type(nm));
        WeylGroup grp = enumerate_weyl(d);
        for (int j : d.J) {
            if (j == 0) continue;
            std::set<RVec> target = sigma_target(d, j);
            const WeylElement* found = nullptr;
            int hits = 0;
            for (const WeylElement& w : grp.elements)
                if (simple_image(d, w) == target) {
                    ++hits;
                    found = &w;
                }
            REQUIRE(hits == 1);  // the permuting element is unique
            CHECK(found->same_element(d.sigma_data(j).elem));
        }
    }
}

TEST_CASE("sigma partner, sign, and coset identities") {
    for (const char* nm :
         {"A1", "A2", "A3", "A5", "B2", "B4", "C2", "C4", "D3", "D4", "D5", "E6", "E7"}) {
        CAPTURE(nm);
        RootDatum d = build_root_datum(parse_lie_type(nm));
        for (int j : d.J) {
            if (j == 0) continue;
            const SigmaData& s = d.sigma_data(j);
            // partner: sigma_j^{-1}(Lambda_j) = -Lambda_i, and i sits in J
            CHECK(act(inverse(s.elem), d.fweight(j)) == -d.fweight(s.i));
            CHECK(std::find(d.J.begin(), d.J.end(), s.i) != d.J.end());
            // sign = (-1)^{2(Lambda_j, rho)}
            Rat twice = 2 * d.inner(d.fweight(j), d.rho());
            REQUIRE(is_integer(twice));
            CHECK(s.sign == (num(twice) % 2 == 0 ? 1 : -1));
            CHECK(s.sign == s.elem.sign);
            // Lambda_j + Lambda_i lands in the root lattice
            CHECK(d.in_root_lattice(d.fweight(j) + d.fweight(s.i)));
            // length equals twice (Lambda_j, rho)
            CHECK(Rat(s.elem.length()) == twice);
        }
    }
}

TEST_CASE("type validation") {
    CHECK_THROWS_AS(build_root_datum(parse_lie_type("B1")), PreconditionError);
    CHECK_THROWS_AS(build_root_datum(parse_lie_type("C1")), PreconditionError);
    CHECK_THROWS_AS(build_root_datum(parse_lie_type("D2")), PreconditionError);
    CHECK_THROWS_AS(build_root_datum(parse_lie_type("E9")), PreconditionError);
    CHECK_THROWS_AS(build_root_datum(parse_lie_type("F5")), PreconditionError);
    CHECK_THROWS_AS(build_root_datum(parse_lie_type("G3")), PreconditionError);
    CHECK_THROWS_AS(parse_lie_type("H4"), PreconditionError);
    CHECK_THROWS_AS(parse_lie_type("A0"), PreconditionError);
    CHECK_THROWS_AS(parse_lie_type("A"), PreconditionError);
    CHECK_THROWS_AS(parse_lie_type("2A"), PreconditionError);
    CHECK(parse_lie_type("E6") == make_lie_type('E', 6));
    CHECK(to_string(make_lie_type('D', 4)) == "D4");
    CHECK(is_simply_laced(parse_lie_type("E7")));
    CHECK(!is_simply_laced(parse_lie_type("F4")));
}
