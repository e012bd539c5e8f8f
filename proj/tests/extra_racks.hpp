#pragma once

// Racks outside the named families, used where a check needs a larger
// braided rack than T_n, the tetrahedron or the cube.

#include <string>
#include <vector>

#include "coideal/rack.hpp"

namespace coideal::testing {

// Affine rack over GF(16): x > y = w y + (1 - w) x with w of order 3. Braided,
// no two distinct elements commute, and it contains the tetrahedron.
inline Rack affine_gf16() {
    auto mul = [](int a, int b) {
        int r = 0;
        while (b) {
            if (b & 1) r ^= a;
            b >>= 1;
            a <<= 1;
            if (a & 16) a ^= 0x13;  // x^4 + x + 1
        }
        return r;
    };
    int w = 1;
    for (int i = 0; i < 5; ++i) w = mul(w, 2);  // generator^5 has order 3
    std::vector<std::vector<int>> t(16, std::vector<int>(16));
    for (int x = 0; x < 16; ++x)
        for (int y = 0; y < 16; ++y) t[x][y] = mul(w, y) ^ mul(1 ^ w, x);
    return make_rack(t);
}

// Reflections of the Weyl group of type D_n as signed permutations of 2n points.
inline Rack d_reflections(int n) {
    auto refl = [n](int i, int j, bool plus) {
        Perm p(2 * n);
        for (int x = 0; x < 2 * n; ++x) p[x] = x;
        auto neg = [n](int x) { return x < n ? x + n : x - n; };
        if (plus) {
            p[i] = neg(j), p[j] = neg(i), p[neg(i)] = j, p[neg(j)] = i;
        } else {
            p[i] = j, p[j] = i, p[neg(i)] = neg(j), p[neg(j)] = neg(i);
        }
        return p;
    };
    std::vector<Perm> gens;
    for (int i = 0; i + 1 < n; ++i) gens.push_back(refl(i, i + 1, false));
    gens.push_back(refl(n - 2, n - 1, true));
    return conjugacy_rack(gens, refl(0, 1, false));
}

// 3-cycles of S_4 (not braided).
inline Rack s4_three_cycles() {
    Perm t{1, 0, 2, 3}, c{1, 2, 3, 0}, k{1, 2, 0, 3};
    return conjugacy_rack({t, c}, k);
}

// Disjoint union of T_3 with one extra element e acting trivially and fixed by
// everything: two braiding blocks.
inline Rack t3_plus_point() {
    Rack t = transpositions(3);
    std::vector<std::vector<int>> tab(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) tab[x][y] = (x < 3 && y < 3) ? t.op(x, y) : y;
    auto labels = t.labels();
    labels.push_back("e");
    return make_rack(tab, labels);
}

}  // namespace coideal::testing
