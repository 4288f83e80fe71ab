#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "torusq/rootdata.hpp"
#include "torusq/weyl.hpp"

using namespace torusq;

namespace {

RVec rvec(std::initializer_list<long> xs) {
    RVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

} // namespace

TEST_CASE("group orders by BFS enumeration") {
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("A1"))).order() == 2);
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("A2"))).order() == 6);
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("A3"))).order() == 24);
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("B2"))).order() == 8);
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("C2"))).order() == 8);
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("G2"))).order() == 12);
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("D4"))).order() == 192);
    CHECK(enumerate_weyl(build_root_datum(parse_lie_type("F4"))).order() == 1152);
}

TEST_CASE("simple reflections act on root coordinates") {
    RootDatum d = build_root_datum(parse_lie_type("A2"));
    WeylElement s1 = simple_reflection(d, 1);
    CHECK(act(s1, rvec({1, 0})) == rvec({-1, 0}));       // s1(a1) = -a1
    CHECK(act(s1, rvec({0, 1})) == rvec({1, 1}));        // s1(a2) = a1+a2
    WeylElement s2 = simple_reflection(d, 2);
    CHECK(act(s2, rvec({1, 1})) == rvec({1, 0}));
    CHECK(s1.sign == -1);
    CHECK(compose(s1, s1).same_element(weyl_identity(2)));
    CHECK(compose(s1, s2).sign == 1);
}

TEST_CASE("enumeration is graded with lex-least first discoveries") {
    RootDatum d = build_root_datum(parse_lie_type("A2"));
    WeylGroup w = enumerate_weyl(d);
    CHECK(w.elements[0].same_element(weyl_identity(2)));
    CHECK(w.elements[0].word.empty());
    // lengths never decrease along the enumeration
    for (size_t k = 1; k < w.elements.size(); ++k)
        CHECK(w.elements[k - 1].length() <= w.elements[k].length());
    // longest element of A2 discovered with word 1,2,1 (not 2,1,2)
    CHECK(w.longest().word == std::vector<int>{1, 2, 1});
    CHECK(w.longest().length() == 3);
    // every stored word multiplies out to its matrix
    for (const WeylElement& e : w.elements) {
        WeylElement m = weyl_identity(2);
        for (int g : e.word) m = compose(m, simple_reflection(d, g));
        CHECK(m.same_element(e));
        CHECK(e.sign == (e.length() % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("longest element negates the Weyl vector") {
    for (const char* nm : {"A1", "A2", "A3", "B2", "C3", "D4", "G2"}) {
        RootDatum d = build_root_datum(parse_lie_type(nm));
        WeylGroup w = enumerate_weyl(d);
        const WeylElement& w0 = w.longest();
        CHECK(static_cast<size_t>(w0.length()) == d.pos_roots.size());
        CHECK(act(w0, d.rho()) == -d.rho());
        CHECK(act(w0, act(w0, d.rho())) == d.rho());
    }
}

TEST_CASE("inverse and composition are exact") {
    RootDatum d = build_root_datum(parse_lie_type("C2"));
    WeylGroup w = enumerate_weyl(d);
    for (const WeylElement& e : w.elements) {
        WeylElement inv = inverse(e);
        CHECK(compose(e, inv).same_element(weyl_identity(2)));
        CHECK(compose(inv, e).same_element(weyl_identity(2)));
        CHECK(inv.sign == e.sign);
        CHECK(inv.length() == e.length());
        CHECK(act(inv, act(e, d.rho())) == d.rho());
    }
}

TEST_CASE("dominant representative folds any weight to the closed chamber") {
    RootDatum d = build_root_datum(parse_lie_type("A2"));
    auto [dom, w] = dominant_representative(d, -d.rho());
    CHECK(dom == d.rho());
    CHECK(act(w, -d.rho()) == d.rho());
    CHECK(w.length() == 3);

    // already dominant: identity, length zero
    auto [dom2, w2] = dominant_representative(d, d.fweight(1));
    CHECK(dom2 == d.fweight(1));
    CHECK(w2.length() == 0);

    // boundary weights fold with the minimal number of wall crossings
    auto [dom3, w3] = dominant_representative(d, Weight(rvec({-1, 0})));
    CHECK(dom3 == d.highest_root());  // -a1 is Weyl-conjugate to theta
    CHECK(act(w3, Weight(rvec({-1, 0}))) == dom3);
}

TEST_CASE("dominant representative is the unique minimal coset element") {
    for (const char* nm : {"A2", "B2", "G2"}) {
        RootDatum d = build_root_datum(parse_lie_type(nm));
        WeylGroup grp = enumerate_weyl(d);
        // fold every point of a regular orbit and of a singular orbit
        for (const Weight& seed : {d.rho(), d.fweight(1)}) {
            for (const WeylElement& e : grp.elements) {
                Weight x = act(e, seed);
                auto [dom, w] = dominant_representative(d, x);
                CHECK(dom == seed);  // seeds are dominant
                CHECK(act(w, x) == dom);
                // no strictly shorter element achieves the fold, and at the
                // minimal length the element is unique
                for (const WeylElement& f : grp.elements) {
                    if (act(f, x) == dom) {
                        bool shorter = f.length() < w.length();
                        CHECK(!shorter);
                        if (f.length() == w.length()) CHECK(f.same_element(w));
                    }
                }
            }
        }
    }
}

TEST_CASE("find locates elements by matrix") {
    RootDatum d = build_root_datum(parse_lie_type("B2"));
    WeylGroup w = enumerate_weyl(d);
    WeylElement probe = compose(simple_reflection(d, 2), simple_reflection(d, 1));
    const WeylElement& hit = w.elements[w.find(probe)];
    CHECK(hit.same_element(probe));
    CHECK(hit.word == std::vector<int>{2, 1});
}
