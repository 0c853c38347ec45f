#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "chen/gl2.hpp"

using namespace chen;

TEST_CASE("group orders") {
    CHECK(Group(3).order() == 48);
    CHECK(Group(5).order() == 480);
}

TEST_CASE("bad primes are rejected") {
    CHECK_THROWS_AS(Group(2), std::invalid_argument);
    CHECK_THROWS_AS(Group(9), std::invalid_argument);
    CHECK_THROWS_AS(Group(1), std::invalid_argument);
    try {
        Group g(2);
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("genus zero") != std::string::npos);
    }
}

TEST_CASE("non-residue choices") {
    CHECK(Group(3).epsilon() == 2);
    CHECK(Group(5).epsilon() == 2);
    CHECK(Group(7).epsilon() == 3);
    CHECK(Group(5, 3).epsilon() == 3);
    CHECK_THROWS_AS(Group(5, 4), std::invalid_argument);   // 4 is a square
    CHECK_THROWS_AS(Group(5, 10), std::invalid_argument);  // not a unit
}

TEST_CASE("element indexing and inverses, exhaustively at p = 3") {
    Group g(3);
    int id = g.identity_index();
    CHECK(g.element(id) == Mat2{1, 0, 0, 1});
    for (int i = 0; i < g.size(); ++i) {
        CHECK(g.index_of(g.element(i)) == i);
        CHECK(g.mul_index(i, g.inv_index(i)) == id);
        CHECK(g.mul_index(g.inv_index(i), i) == id);
    }
    // associativity spot check across a grid of triples
    for (int a = 0; a < g.size(); a += 7)
        for (int b = 0; b < g.size(); b += 11)
            for (int c = 0; c < g.size(); c += 13)
                CHECK(g.mul_index(g.mul_index(a, b), c) == g.mul_index(a, g.mul_index(b, c)));
}

TEST_CASE("the standard nonsplit generator squares to epsilon") {
    for (unsigned p : {3u, 5u, 7u}) {
        Group g(p);
        Mat2 w{0, g.epsilon(), 1, 0};
        Mat2 sq = g.mul(w, w);
        CHECK(sq == Mat2{g.epsilon(), 0, 0, g.epsilon()});
    }
}

TEST_CASE("subgroup orders match the index formulas") {
    for (unsigned p : {3u, 5u}) {
        Group g(p);
        long long m = p - 1;
        CHECK(g.subgroup(SubgroupId::Trivial).order == 1);
        CHECK(g.subgroup(SubgroupId::SplitTorus).order == m * m);
        CHECK(g.subgroup(SubgroupId::SplitNormalizer).order == 2 * m * m);
        CHECK(g.subgroup(SubgroupId::NonsplitTorus).order == static_cast<long long>(p) * p - 1);
        CHECK(g.subgroup(SubgroupId::NonsplitNormalizer).order ==
              2 * (static_cast<long long>(p) * p - 1));
        CHECK(g.subgroup(SubgroupId::BorelUpper).order == p * m * m);
        CHECK(g.subgroup(SubgroupId::BorelLower).order == p * m * m);
        CHECK(g.subgroup(SubgroupId::Full).order == g.order());
    }
}

TEST_CASE("subgroups are closed and contain identity and inverses") {
    for (unsigned p : {3u, 5u}) {
        Group g(p);
        for (int s = 0; s < 8; ++s) {
            const Subgroup& h = g.subgroup(static_cast<SubgroupId>(s));
            CHECK(h.member[g.identity_index()]);
            CHECK(static_cast<long long>(h.elements.size()) == h.order);
            for (int a : h.elements) {
                CHECK(h.member[g.inv_index(a)]);
                for (int b : h.elements) CHECK(h.member[g.mul_index(a, b)]);
            }
        }
    }
}

TEST_CASE("membership flags agree with the element lists") {
    Group g(5);
    for (int s = 0; s < 8; ++s) {
        const Subgroup& h = g.subgroup(static_cast<SubgroupId>(s));
        std::set<int> listed(h.elements.begin(), h.elements.end());
        for (int i = 0; i < g.size(); ++i)
            CHECK(static_cast<bool>(h.member[i]) == (listed.count(i) == 1));
    }
}

TEST_CASE("the reflection normalizes the nonsplit torus") {
    for (unsigned p : {3u, 5u}) {
        Group g(p);
        Mat2 s{1, 0, 0, p - 1};
        int si = g.index_of(s);
        const Subgroup& t2 = g.subgroup(SubgroupId::NonsplitTorus);
        const Subgroup& n2 = g.subgroup(SubgroupId::NonsplitNormalizer);
        CHECK(n2.member[si]);
        for (int ti : t2.elements) {
            int conj = g.mul_index(g.mul_index(si, ti), g.inv_index(si));
            CHECK(t2.member[conj]);
        }
        // and N' is exactly T' together with its s-coset
        for (int x : n2.elements)
            CHECK((t2.member[x] || t2.member[g.mul_index(g.inv_index(si), x)]));
    }
}

TEST_CASE("class inventory at small primes") {
    Group g3(3);
    std::map<ClassKind, int> count;
    for (const ConjClass& c : g3.classes()) count[c.kind]++;
    CHECK(count[ClassKind::Central] == 2);
    CHECK(count[ClassKind::Split] == 1);
    CHECK(count[ClassKind::Jordan] == 2);
    CHECK(count[ClassKind::NonSplit] == 3);
    CHECK(g3.class_count() == 8);
    CHECK(Group(5).class_count() == 24);
}

TEST_CASE("class sizes partition the group") {
    for (unsigned p : {3u, 5u, 7u}) {
        Group g(p);
        long long total = 0;
        for (const ConjClass& c : g.classes()) total += c.size;
        CHECK(total == g.order());
    }
}

TEST_CASE("classifying specific matrices") {
    Group g(3);
    const ConjClass& c1 = g.classes()[g.class_of(Mat2{1, 0, 0, 1})];
    CHECK(c1.kind == ClassKind::Central);
    CHECK(c1.x == 1);

    const ConjClass& c2 = g.classes()[g.class_of(Mat2{1, 1, 0, 1})];
    CHECK(c2.kind == ClassKind::Jordan);
    CHECK(c2.x == 1);

    // trace 0, determinant 1: eigenvalues +-i live in F_9, z = 0 + 1*sqrt(2)
    const ConjClass& c3 = g.classes()[g.class_of(Mat2{0, 2, 1, 0})];
    CHECK(c3.kind == ClassKind::NonSplit);
    CHECK(c3.z.a == 0);
    CHECK(c3.z.b == 1);

    const ConjClass& c4 = g.classes()[g.class_of(Mat2{1, 0, 0, 2})];
    CHECK(c4.kind == ClassKind::Split);
    CHECK(c4.x == 1);
    CHECK(c4.y == 2);
}

TEST_CASE("class representatives carry the right trace and determinant") {
    for (unsigned p : {3u, 5u, 7u}) {
        Group g(p);
        for (const ConjClass& c : g.classes()) {
            const Mat2& r = g.element(c.rep_index);
            unsigned tr = (r.a + r.d) % p;
            unsigned det = (r.a * r.d + p * p - r.b * r.c) % p;
            switch (c.kind) {
                case ClassKind::Central:
                case ClassKind::Jordan:
                    CHECK(tr == 2 * c.x % p);
                    CHECK(det == c.x * c.x % p);
                    break;
                case ClassKind::Split:
                    CHECK(tr == (c.x + c.y) % p);
                    CHECK(det == c.x * c.y % p);
                    break;
                case ClassKind::NonSplit:
                    CHECK(tr == 2 * c.z.a % p);
                    CHECK(det == g.fp2().norm(c.z));
                    break;
            }
        }
    }
}

TEST_CASE("class_of is constant on conjugation orbits") {
    Group g(3);
    for (int x = 0; x < g.size(); x += 5) {
        int xi = g.inv_index(x);
        for (int i = 0; i < g.size(); ++i)
            CHECK(g.class_of_index(g.mul_index(g.mul_index(xi, i), x)) == g.class_of_index(i));
    }
}

TEST_CASE("classes agree with brute-force orbits at p = 3") {
    Group g(3);
    std::vector<int> orbit_of(g.size(), -1);
    int orbits = 0;
    for (int i = 0; i < g.size(); ++i) {
        if (orbit_of[i] != -1) continue;
        int label = orbits++;
        for (int x = 0; x < g.size(); ++x)
            orbit_of[g.mul_index(g.mul_index(g.inv_index(x), i), x)] = label;
    }
    CHECK(orbits == g.class_count());
    // orbit labels refine to exactly the computed classes
    for (int i = 0; i < g.size(); ++i)
        for (int j = 0; j < g.size(); ++j)
            if (orbit_of[i] == orbit_of[j]) CHECK(g.class_of_index(i) == g.class_of_index(j));
}

TEST_CASE("inverse classes pair up consistently") {
    for (unsigned p : {3u, 5u}) {
        Group g(p);
        for (int c = 0; c < g.class_count(); ++c) {
            int ic = g.inverse_class(c);
            CHECK(g.inverse_class(ic) == c);
            CHECK(g.class_of_index(g.inv_index(g.classes()[c].rep_index)) == ic);
            CHECK(g.classes()[c].size == g.classes()[ic].size);
        }
    }
}

TEST_CASE("centralizer orders times class sizes give the group order") {
    Group g(5);
    for (int c = 0; c < g.class_count(); ++c)
        CHECK(g.centralizer_order(c) * g.classes()[c].size == g.order());
}

TEST_CASE("set products of subgroups") {
    Group g3(3);
    CHECK(g3.set_product_is_group(SubgroupId::NonsplitTorus, SubgroupId::BorelUpper));
    CHECK(g3.set_product_is_group(SubgroupId::NonsplitNormalizer, SubgroupId::BorelUpper));
    CHECK_FALSE(g3.set_product_is_group(SubgroupId::SplitTorus, SubgroupId::BorelUpper));
    Group g5(5);
    CHECK(g5.set_product_is_group(SubgroupId::NonsplitTorus, SubgroupId::BorelUpper));
    CHECK(g5.set_product_is_group(SubgroupId::NonsplitNormalizer, SubgroupId::BorelUpper));
    CHECK_FALSE(g5.set_product_is_group(SubgroupId::SplitTorus, SubgroupId::SplitNormalizer));
}

TEST_CASE("legendre symbol against direct squaring") {
    for (unsigned p : {3u, 5u, 7u, 11u}) {
        Group g(p);
        std::set<unsigned> squares;
        for (unsigned x = 1; x < p; ++x) squares.insert(x * x % p);
        for (unsigned x = 1; x < p; ++x)
            CHECK(g.legendre(x) == (squares.count(x) ? 1u : p - 1));
        CHECK(g.legendre(0) == 0);
    }
}
