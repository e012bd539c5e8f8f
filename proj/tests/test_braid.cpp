#include "doctest.h"

#include <random>

#include "coideal/braid.hpp"

using namespace coideal;

namespace {
const ScalarDomain* Q() { return ScalarDomain::cyclotomic(1); }
using TV = TensorVector<Scalar>;
using BS = BraidedSpace<ExactField>;

BS exact_space(const Cocycle& c) { return BS(c, ExactField{c.domain()}); }

TV basis(const Word& w, const ScalarDomain* d) { return TV{{w, Scalar(d, 1)}}; }

TV random_vector(int k, int n, int terms, std::mt19937& rng, const ScalarDomain* d) {
    TV v;
    for (int i = 0; i < terms; ++i) {
        Word w(n);
        for (auto& x : w) x = static_cast<int>(rng() % k);
        long c = static_cast<long>(rng() % 9) - 4;
        if (c) BS::add_to(v, w, Scalar(d, c), ExactField{d});
    }
    return v;
}

TV combine(const TV& a, const TV& b, const Scalar& s, const ScalarDomain* d) {
    TV out = a;
    for (const auto& [w, c] : b) BS::add_to(out, w, c * s, ExactField{d});
    return out;
}
}  // namespace

TEST_CASE("single braiding") {
    Cocycle c = constant(transpositions(3), Scalar(Q(), -1));
    BS V = exact_space(c);
    int a = 0, b = 1, cc = c.rack().op(a, b);
    TV r = V.apply_c(1, basis({a, b}, Q()));
    CHECK(r == TV{{{cc, a}, Scalar(Q(), -1)}});
    auto dt = ScalarDomain::rational_function("t");
    Scalar t = Scalar::generator(dt);
    Cocycle tet = model_tetra(t, t * t);
    BS T = exact_space(tet);
    // b > c = a with q(b,c) = lambda
    CHECK(T.apply_c(1, basis({1, 2}, dt)) == TV{{{0, 1}, t * t}});
    std::mt19937 rng(2);
    for (int it = 0; it < 20; ++it) {
        TV v = random_vector(4, 4, 6, rng, dt);
        for (int i = 1; i <= 3; ++i) {
            CHECK(T.apply_c_inverse(i, T.apply_c(i, v)) == v);
            CHECK(T.apply_c(i, T.apply_c_inverse(i, v)) == v);
        }
    }
}

TEST_CASE("braid relations") {
    auto d3 = ScalarDomain::cyclotomic(3);
    Scalar z = Scalar::generator(d3);
    std::vector<Cocycle> cs = {model_tetra(z, -z.inv()), model_cube(Scalar(Q(), 2), Scalar(Q(), -1)), chi(4)};
    std::mt19937 rng(9);
    for (const Cocycle& c : cs) {
        BS V = exact_space(c);
        int k = c.size();
        auto check_word = [&](const Word& w) {
            TV v = basis(w, c.domain());
            int n = static_cast<int>(w.size());
            for (int i = 1; i + 1 < n; ++i)
                CHECK(V.apply_c(i, V.apply_c(i + 1, V.apply_c(i, v))) == V.apply_c(i + 1, V.apply_c(i, V.apply_c(i + 1, v))));
            for (int i = 1; i < n; ++i)
                for (int j = i + 2; j < n; ++j) CHECK(V.apply_c(i, V.apply_c(j, v)) == V.apply_c(j, V.apply_c(i, v)));
        };
        for (int n = 3; n <= 4; ++n) {
            Word w(n, 0);
            while (true) {
                check_word(w);
                int p = n - 1;
                while (p >= 0 && ++w[p] == k) w[p--] = 0;
                if (p < 0) break;
            }
        }
        for (int it = 0; it < 30; ++it) {
            Word w(5 + it % 3);
            for (auto& x : w) x = static_cast<int>(rng() % k);
            check_word(w);
        }
    }
}

TEST_CASE("Matsumoto table") {
    int fact = 1;
    for (int n = 1; n <= 7; ++n) {
        fact *= n;
        CHECK(matsumoto_table(n).perm.size() == static_cast<size_t>(fact));
    }
    // lengths follow the Mahonian distribution for n = 4
    const auto& m = matsumoto_table(4);
    std::vector<int> len(m.perm.size(), 0), hist(7, 0);
    for (size_t p = 1; p < m.perm.size(); ++p) len[p] = len[m.parent[p]] + 1;
    for (int l : len) hist[l]++;
    CHECK(hist == std::vector<int>{1, 3, 5, 6, 5, 3, 1});
}

TEST_CASE("symmetrizer") {
    Cocycle c = constant(transpositions(3), Scalar(Q(), -1));
    BS V = exact_space(c);
    CHECK(V.symmetrizer(basis({0, 0}, Q())).empty());
    CHECK(V.symmetrizer(basis({2}, Q())) == basis({2}, Q()));
    // S_3 by explicit sum of the six lifts e, c1, c2, c1c2, c2c1, c1c2c1
    TV w = basis({2, 1, 0}, Q());
    TV sum = w;
    auto c1 = [&](const TV& v) { return V.apply_c(1, v); };
    auto c2 = [&](const TV& v) { return V.apply_c(2, v); };
    for (const TV& term : {c1(w), c2(w), c1(c2(w)), c2(c1(w)), c1(c2(c1(w)))})
        sum = combine(sum, term, Scalar(Q(), 1), Q());
    TV s3 = V.symmetrizer(w);
    CHECK(s3 == sum);
    CHECK_FALSE(s3.empty());
    CHECK(s3.size() <= 6);
}

TEST_CASE("coproduct components") {
    auto dt = ScalarDomain::rational_function("t");
    Scalar t = Scalar::generator(dt);
    BS T3 = exact_space(model_T3(t));
    int a = 0, b = 1, c = T3.op(a, b);
    TV want{{{a, b}, Scalar(dt, 1)}};
    BS::add_to(want, {c, a}, t, ExactField{dt});
    CHECK(T3.delta_1_left(basis({a, b}, dt)) == want);
    CHECK(T3.delta_1_right(basis({a, b}, dt)) == want);
    CHECK(T3.delta_1_left(basis({a}, dt)) == basis({a}, dt));

    // Delta_{1,1}(x - c x + c^2 x) for x = v_a v_b equals (1 + q_ab q_ca q_bc) v_a v_b
    for (const Cocycle& q : {model_T3(t), model_tetra(t, -(t * t)), model_cube(t, Scalar(dt, -1))}) {
        BS V = exact_space(q);
        const Rack& r = q.rack();
        for (int x = 0; x < r.size(); ++x)
            for (int y = 0; y < r.size(); ++y) {
                int z = r.op(x, y);
                if (z == y) continue;
                TV v = basis({x, y}, dt);
                TV cv = V.apply_c(1, v);
                TV e = combine(combine(v, cv, Scalar(dt, -1), dt), V.apply_c(1, cv), Scalar(dt, 1), dt);
                Scalar coef = Scalar(dt, 1) + q.q(x, y) * q.q(z, x) * q.q(y, z);
                TV expect;
                BS::add_to(expect, {x, y}, coef, ExactField{dt});
                CHECK(V.delta_1_left(e) == expect);
            }
    }

    // Delta_{2,1} on (a,b,c) in the tetrahedron: terms (a,b,c), lambda (a,a,b), t^2 (c,d,a)
    Scalar l = t * t;
    BS T = exact_space(model_tetra(t, l));
    TV expect{{{0, 1, 2}, Scalar(dt, 1)}, {{0, 0, 1}, l}, {{2, 3, 0}, t * t}};
    CHECK(T.delta_1_right(basis({0, 1, 2}, dt)) == expect);
}

TEST_CASE("symmetrizer factorizations agree") {
    auto d3 = ScalarDomain::cyclotomic(3);
    Scalar z = Scalar::generator(d3);
    std::vector<Cocycle> cs = {constant(transpositions(3), Scalar(Q(), -1)), model_tetra(z, -z.inv()),
                               model_cube(Scalar(Q(), -1), Scalar(Q(), 1)), constant(dihedral_quandle(5), Scalar(Q(), 3))};
    std::mt19937 rng(4);
    int checked = 0;
    for (const Cocycle& c : cs) {
        BS V = exact_space(c);
        for (int n = 2; n <= 6; ++n) {
            int reps = n <= 5 ? 14 : 3;
            for (int it = 0; it < reps; ++it) {
                TV v = random_vector(c.size(), n, 3, rng, c.domain());
                TV s = V.symmetrizer_matsumoto(v);
                CHECK(s == V.symmetrizer_recursive(v));
                if (n <= 5) {
                    CHECK(s == V.delta_1n(v));
                    ++checked;
                }
            }
        }
    }
    CHECK(checked >= 200);
}

TEST_CASE("Yang-Baxter check") {
    auto d3 = ScalarDomain::cyclotomic(3);
    Scalar z = Scalar::generator(d3);
    for (const Cocycle& c : {model_tetra(z, -z.inv()), chi(5), constant(cube(), Scalar(Q(), 7))}) CHECK(yang_baxter_check(c));
    Rack t3 = transpositions(3);
    std::vector<std::vector<Scalar>> q(3, std::vector<Scalar>(3, Scalar(Q(), -1)));
    q[0][1] = Scalar(Q(), 2);
    CHECK_FALSE(yang_baxter_check(t3.rows(), q));
    // permutations that do not commute: not self-distributive
    std::vector<std::vector<int>> bad = {{1, 0, 2}, {0, 2, 1}, {0, 1, 2}};
    std::vector<std::vector<Scalar>> ones(3, std::vector<Scalar>(3, Scalar(Q(), 1)));
    CHECK_FALSE(yang_baxter_check(bad, ones));
}
