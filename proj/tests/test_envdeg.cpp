#include <doctest.h>

#include <array>
#include <map>
#include <random>
#include <set>

#include "coideal/envdeg.hpp"
#include "coideal/error.hpp"

using namespace coideal;

namespace {
Word word(const Rack& r, std::initializer_list<const char*> labels) {
    Word w;
    for (const char* l : labels) w.push_back(r.index_of(l));
    return w;
}

// Fixpoint iteration over the whole of X^n; independent of the BFS in the library.
std::set<Word> orbit_oracle(const Rack& r, const Word& t) {
    std::set<Word> s{t};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Word> cur(s.begin(), s.end());
        for (const Word& w : cur)
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                Word u = w;
                u[i] = r.op(w[i], w[i + 1]);
                u[i + 1] = w[i];
                if (s.insert(u).second) grew = true;
            }
    }
    return s;
}
}  // namespace

TEST_CASE("Hurwitz orbit in the tetrahedron rack") {
    Rack r = tetrahedron();
    Word t = word(r, {"c", "b", "a"});
    auto orb = hurwitz_orbit(r, t);
    CHECK(orb.size() == 12);
    auto oracle = orbit_oracle(r, t);
    CHECK(std::set<Word>(orb.begin(), orb.end()) == oracle);
    int a = r.index_of("a"), b = r.index_of("b");
    for (const Word& w : orb) {
        bool only_ab = true;
        for (int x : w) only_ab = only_ab && (x == a || x == b);
        CHECK_FALSE(only_ab);
    }
    // The orbit splits into four orbits of sigma1 sigma2, each of size 3.
    std::set<Word> left(orb.begin(), orb.end());
    int pieces = 0;
    while (!left.empty()) {
        Word w = *left.begin();
        int len = 0;
        Word u = w;
        do {
            u = hurwitz_sigma(r, hurwitz_sigma(r, u, 2), 1);
            left.erase(u);
            ++len;
        } while (u != w);
        CHECK(len == 3);
        ++pieces;
    }
    CHECK(pieces == 4);
}

TEST_CASE("Hurwitz orbits agree with the fixpoint oracle") {
    std::mt19937 rng(7);
    for (const Rack& r : {transpositions(4), tetrahedron(), cube(), dihedral_quandle(5)}) {
        for (int trial = 0; trial < 20; ++trial) {
            int n = 2 + trial % 3;
            Word t(n);
            for (int& x : t) x = static_cast<int>(rng() % r.size());
            auto orb = hurwitz_orbit(r, t);
            CHECK(std::set<Word>(orb.begin(), orb.end()) == orbit_oracle(r, t));
        }
    }
    CHECK_THROWS_AS(hurwitz_orbit(transpositions(5), {0, 1, 2, 3, 4, 5}, 10), Error);
}

TEST_CASE("moves preserve the G_X invariants") {
    std::mt19937 rng(11);
    for (const Rack& r : {transpositions(4), cube(), alexander_quandle(7, 3)}) {
        for (int trial = 0; trial < 30; ++trial) {
            Word t(4);
            for (int& x : t) x = static_cast<int>(rng() % r.size());
            auto dc = degree_class(r, t);
            REQUIRE(dc.exhausted);
            for (const Word& w : orbit_oracle(r, t)) {
                CHECK(inn_image(r, w) == dc.inn_image);
                CHECK(orbit_counts(r, w) == dc.orbit_counts);
                CHECK(degree_class(r, w).canonical == dc.canonical);
            }
        }
    }
}

TEST_CASE("degree comparison is three-valued") {
    Rack t3 = transpositions(3);
    auto c = degrees_equal(t3, word(t3, {"(1 2)", "(1 3)"}), word(t3, {"(1 3)", "(1 3)"}));
    CHECK(c.result == DegreeCompare::NotEqual);

    Rack q = cube();
    CHECK(degrees_equal(q, word(q, {"a", "f"}), word(q, {"f", "a"})).result == DegreeCompare::Equal);
    CHECK(degrees_equal(q, word(q, {"a"}), word(q, {"a", "a"})).result == DegreeCompare::NotEqual);
    // Opposite faces: same length, Inn-image and orbit count, yet both words are fixed by every move.
    auto u = degrees_equal(q, word(q, {"a", "a"}), word(q, {"f", "f"}));
    CHECK(u.result == DegreeCompare::Undecided);
    CHECK(hurwitz_orbit(q, word(q, {"a", "a"})).size() == 1);
    // Never claims equality when the orbits are disjoint.
    auto ab = degrees_equal(q, word(q, {"b", "a"}), word(q, {"a", "b"}));
    auto oracle = orbit_oracle(q, word(q, {"b", "a"}));
    CHECK((ab.result == DegreeCompare::Equal) == (oracle.count(word(q, {"a", "b"})) == 1));
    CHECK(ab.result != DegreeCompare::Equal);
    // Budget exhaustion degrades to Undecided, never to a wrong answer.
    Rack t5 = transpositions(5);
    Word w1 = {0, 1, 2, 3, 4, 5}, w2 = w1;
    for (int i = 0; i < 40; ++i) w2 = hurwitz_sigma(t5, w2, 1 + i % 5);
    auto tight = degrees_equal(t5, w1, w2, 5);
    CHECK(tight.result != DegreeCompare::NotEqual);
    CHECK(degrees_equal(t5, w1, w2).result == DegreeCompare::Equal);
}

TEST_CASE("admissible quadruples follow the transition graph") {
    Rack q = cube();
    auto quads = admissible_quadruples(q);
    CHECK(quads.size() == 24);
    const std::map<char, std::array<char, 3>> next = {
        {'x', {'y', 'z', 'y'}}, {'y', {'z', 'y', 'z'}}, {'z', {'x', 'u', 'x'}}, {'u', {'u', 'x', 'u'}}};
    for (const Word& abcd : quads) {
        CHECK(orbit_type(q, abcd) == 'x');
        for (const Word& t : hurwitz_orbit(q, abcd)) {
            char ty = orbit_type(q, t);
            REQUIRE(ty != 'o');
            for (int i = 1; i <= 3; ++i) CHECK(orbit_type(q, hurwitz_sigma(q, t, i)) == next.at(ty)[i - 1]);
        }
        int a = abcd[0], b = abcd[1], c = abcd[2], d = abcd[3];
        int e = q.op(a, q.op(b, q.op(c, d)));
        int f = q.op(e, q.op(a, q.op(b, c)));
        int g = q.op(f, q.op(e, q.op(a, b)));
        CHECK(e == q.op(a, q.op(c, d)));
        CHECK(f == q.op(b, d));
        CHECK(g == q.op(a, d));
        CHECK(disjoint_from_S4(q, abcd, {b, c, d, e, f, g}));
    }
    // Brute force: no admissible quadruple among transpositions.
    for (int n = 4; n <= 6; ++n) CHECK(admissible_quadruples(transpositions(n)).empty());
    CHECK(admissible_quadruples(tetrahedron()).empty());
}

TEST_CASE("hypotheses are enforced") {
    Rack q = cube();
    Word bad = word(q, {"a", "a", "b", "c"});
    CHECK_FALSE(quadruple_hypotheses(q, bad));
    CHECK_THROWS_AS(disjoint_from_S4(q, bad, {0, 1}), Error);
    try {
        disjoint_from_S4(q, bad, {0, 1});
    } catch (const Error& e) {
        CHECK(e.kind() == "HypothesesFail");
    }
    // Without the hypotheses the conclusion can fail: the tuple itself lies in S^4.
    Rack t4 = transpositions(4);
    Word t = {0, 1, 2, 3};
    CHECK_FALSE(disjoint_from_S4_unchecked(t4, t, {0, 1, 2, 3}));
    CHECK_FALSE(quadruple_hypotheses(dihedral_quandle(5), {0, 1, 2, 3}));
}
