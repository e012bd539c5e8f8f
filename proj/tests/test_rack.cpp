#include "doctest.h"

#include <algorithm>
#include <random>

#include "coideal/error.hpp"
#include "coideal/rack.hpp"

using namespace coideal;

namespace {
const std::vector<Perm> kS4 = {{1, 0, 2, 3}, {1, 2, 3, 0}};

Rack three_cycles_s4() { return conjugacy_rack(kS4, {1, 2, 0, 3}); }
Rack four_cycles_s4() { return conjugacy_rack(kS4, {1, 2, 3, 0}); }

int kind_of_error(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        if (e.kind() == "NonBijectiveColumn") return 1;
        if (e.kind() == "NotSelfDistributive") return 2;
        return 3;
    }
    return 0;
}
}  // namespace

TEST_CASE("named rack tables") {
    Rack t = tetrahedron();
    CHECK(t.size() == 4);
    CHECK(t.op(t.index_of("b"), t.index_of("a")) == t.index_of("d"));
    CHECK(t.op(t.index_of("b"), t.index_of("c")) == t.index_of("a"));
    Rack c = cube();
    CHECK(c.op(c.index_of("a"), c.index_of("b")) == c.index_of("c"));
    CHECK(c.op(c.index_of("f"), c.index_of("b")) == c.index_of("e"));
    CHECK(make_rack({{0}}).size() == 1);
    CHECK(kind_of_error([] { make_rack({{0, 0}, {0, 1}}); }) == 1);
    // a permutation rack with a non-commuting pair of permutations is not self-distributive
    CHECK(kind_of_error([] { make_rack({{1, 0, 2}, {0, 2, 1}, {0, 1, 2}}); }) == 2);
}

TEST_CASE("predicates") {
    auto pt = predicates(tetrahedron());
    CHECK(pt.braided);
    CHECK(pt.indecomposable);
    CHECK(pt.phi_order == 3);
    auto pc = predicates(cube());
    CHECK(pc.braided);
    CHECK(pc.phi_order == 4);
    auto p3 = predicates(three_cycles_s4());
    CHECK(three_cycles_s4().size() == 8);
    CHECK_FALSE(p3.braided);
    CHECK(p3.quandle);
    CHECK(p3.conj_symmetric);
    CHECK(p3.injective_hint);
    for (int n = 2; n <= 7; ++n) {
        auto p = predicates(transpositions(n));
        CHECK(p.braided);
        CHECK(p.conj_symmetric);
    }
    auto pp = predicates(permutation_rack({1, 2, 0}));
    CHECK_FALSE(pp.quandle);
    CHECK_FALSE(pp.braided);
    // braided implies quandle; phi_order divides the lcm of element orders
    for (const Rack& r : {tetrahedron(), cube(), transpositions(5), dihedral_quandle(5), three_cycles_s4()}) {
        auto p = predicates(r);
        if (p.braided) CHECK(p.quandle);
        int l = 1;
        for (int x = 0; x < r.size(); ++x) l = std::lcm(l, perm_order(r.phi(x)));
        if (p.phi_order) CHECK(l % p.phi_order == 0);
    }
}

TEST_CASE("transpositions") {
    Rack t3 = transpositions(3);
    CHECK(t3.size() == 3);
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x != y) CHECK_FALSE(t3.commute(x, y));
    CHECK(transpositions(2).size() == 1);
    Rack t4 = transpositions(4);
    int pairs = 0;
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y) pairs += t4.commute(x, y);
    CHECK(pairs == 3);
    CHECK(t4.label(0) == "(1 2)");
    CHECK(t4.index_of("(34)") == 5);
}

TEST_CASE("braided triangles property holds exhaustively") {
    for (const Rack& r : {tetrahedron(), cube(), transpositions(4), transpositions(5)}) {
        for (int x = 0; x < r.size(); ++x)
            for (int y = 0; y < r.size(); ++y) {
                int z = r.op(x, y);
                if (y == z) continue;
                CHECK(r.op(y, z) == x);
                CHECK(r.op(z, x) == y);
            }
    }
}

TEST_CASE("conjugacy racks") {
    Rack tr = conjugacy_rack(kS4, {1, 0, 2, 3});
    CHECK(tr.size() == 6);
    CHECK(find_rack_isomorphism(tr, transpositions(4)).has_value());
    CHECK(predicates(tr).conj_symmetric);
    CHECK(predicates(four_cycles_s4()).conj_symmetric);
    CHECK_THROWS_AS(conjugacy_rack(kS4, {1, 2, 0, 3}, 5), Error);
}

TEST_CASE("subrack closure") {
    Rack c = cube();
    auto s = subrack_closure(c, {c.index_of("a"), c.index_of("b")});
    CHECK(s.rack.size() == 6);
    auto one = subrack_closure(c, {2});
    CHECK(one.rack.size() == 1);
    Rack t4 = transpositions(4);
    CHECK(subrack_closure(t4, {t4.index_of("(1 2)"), t4.index_of("(3 4)")}).rack.size() == 2);
    // idempotent and monotone on random subsets
    std::mt19937 rng(5);
    for (const Rack& r : {cube(), transpositions(5), three_cycles_s4()}) {
        for (int it = 0; it < 20; ++it) {
            std::vector<int> a, b;
            for (int x = 0; x < r.size(); ++x) {
                if (rng() % 4 == 0) a.push_back(x);
                if (rng() % 3 == 0) b.push_back(x);
            }
            if (a.empty()) a.push_back(0);
            auto ca = closure_set(r, a);
            CHECK(closure_set(r, ca) == ca);
            std::vector<int> ab = a;
            ab.insert(ab.end(), b.begin(), b.end());
            auto cab = closure_set(r, ab);
            CHECK(std::includes(cab.begin(), cab.end(), ca.begin(), ca.end()));
        }
    }
}

TEST_CASE("identify_standard") {
    auto id3 = identify_standard(transpositions(3));
    CHECK(id3.kind == StandardKind::Transpositions);
    CHECK(id3.n == 3);
    // a relabelled tetrahedron is still found
    Rack t = relabel(tetrahedron(), {2, 0, 3, 1});
    auto idt = identify_standard(t);
    REQUIRE(idt.kind == StandardKind::Tetrahedron);
    Rack m = tetrahedron();
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) CHECK(idt.iso[t.op(x, y)] == m.op(idt.iso[x], idt.iso[y]));
    CHECK(identify_standard(four_cycles_s4()).kind == StandardKind::Cube);
    CHECK(identify_standard(trivial_rack(3)).kind == StandardKind::Trivial);
    CHECK(identify_standard(three_cycles_s4()).kind == StandardKind::Other);
    CHECK(identify_standard(transpositions(6)).n == 6);
    CHECK(identify_standard(dihedral_quandle(3)).kind == StandardKind::Transpositions);
    CHECK(identify_standard(dihedral_quandle(5)).kind == StandardKind::Other);
}

TEST_CASE("automorphism counts") {
    // Aut of the transposition rack of S_n is S_n for n != 2, 6
    CHECK(rack_automorphisms(transpositions(3)).size() == 6);
    CHECK(rack_automorphisms(transpositions(4)).size() == 24);
    CHECK(rack_automorphisms(tetrahedron()).size() == 12);
    CHECK(rack_automorphisms(cube()).size() == 24);
}

TEST_CASE("isomorphism search agrees with brute force over all bijections") {
    auto brute = [](const Rack& a, const Rack& b) {
        Perm f = perm_identity(a.size());
        size_t n = 0;
        do {
            bool ok = true;
            for (int x = 0; x < a.size() && ok; ++x)
                for (int y = 0; y < a.size(); ++y)
                    if (f[a.op(x, y)] != b.op(f[x], f[y])) {
                        ok = false;
                        break;
                    }
            n += ok;
        } while (std::next_permutation(f.begin(), f.end()));
        return n;
    };
    for (const Rack& r : {tetrahedron(), cube(), transpositions(4), dihedral_quandle(5), trivial_rack(3),
                          alexander_quandle(5, 2), permutation_rack({1, 2, 0, 4, 3})})
        CHECK(rack_isomorphisms(r, r).size() == brute(r, r));
    CHECK(rack_isomorphisms(cube(), transpositions(4)).size() == brute(cube(), transpositions(4)));
}
