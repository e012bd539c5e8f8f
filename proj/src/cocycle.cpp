#include "coideal/cocycle.hpp"

#include <deque>

#include "coideal/error.hpp"

namespace coideal {

std::vector<std::vector<Scalar>> Cocycle::rows() const {
    int k = size();
    std::vector<std::vector<Scalar>> r(k);
    for (int x = 0; x < k; ++x) r[x].assign(q_.begin() + static_cast<long>(x) * k, q_.begin() + static_cast<long>(x + 1) * k);
    return r;
}

std::optional<CocycleViolation> find_cocycle_violation(const Rack& r, const std::vector<std::vector<Scalar>>& q) {
    int k = r.size();
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z)
                if (q[r.op(x, y)][r.op(x, z)] * q[x][z] != q[x][r.op(y, z)] * q[y][z]) return CocycleViolation{x, y, z};
    return std::nullopt;
}

Cocycle validate(const Rack& r, const std::vector<std::vector<Scalar>>& q, const ScalarDomain* d) {
    int k = r.size();
    if (static_cast<int>(q.size()) != k) throw Error("InvalidTable", "cocycle has wrong number of rows");
    for (int x = 0; x < k; ++x) {
        if (static_cast<int>(q[x].size()) != k) throw Error("InvalidTable", "cocycle row " + std::to_string(x) + " has wrong length");
        for (int y = 0; y < k; ++y) {
            if (q[x][y].is_zero())
                throw Error("ZeroEntry", "q(" + r.label(x) + "," + r.label(y) + ") = 0");
            if (q[x][y].domain()) {
                if (d && d != q[x][y].domain()) throw Error("DomainMismatch", "cocycle entries live in different domains");
                d = q[x][y].domain();
            }
        }
    }
    if (!d) d = ScalarDomain::cyclotomic(1);
    Cocycle c;
    c.rack_ = r;
    c.dom_ = d;
    c.q_.reserve(static_cast<size_t>(k) * k);
    Scalar zero(d, 0);
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) c.q_.push_back(zero + q[x][y]);
    if (auto v = find_cocycle_violation(r, c.rows()))
        throw Error("CocycleViolation",
                    "(" + r.label(v->x) + "," + r.label(v->y) + "," + r.label(v->z) + ")");
    return c;
}

Cocycle constant(const Rack& r, const Scalar& s) {
    int k = r.size();
    return validate(r, std::vector<std::vector<Scalar>>(k, std::vector<Scalar>(k, s)), s.domain());
}

Cocycle chi(int n) {
    if (n < 3) throw Error("InvalidArgument", "chi needs n >= 3");
    Rack r = transpositions(n);
    std::vector<std::pair<int, int>> t;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) t.push_back({i, j});
    int k = r.size();
    const ScalarDomain* d = ScalarDomain::cyclotomic(1);
    std::vector<std::vector<Scalar>> q(k, std::vector<Scalar>(k));
    for (int x = 0; x < k; ++x) {
        auto [a, b] = t[x];
        auto img = [&](int v) { return v == a ? b : v == b ? a : v; };
        for (int y = 0; y < k; ++y) q[x][y] = Scalar(d, img(t[y].first) < img(t[y].second) ? 1 : -1);
    }
    return validate(r, q, d);
}

Cocycle model_T3(const Scalar& t) {
    if (t.is_zero()) throw Error("ParameterConstraintViolated", "t = 0");
    return constant(transpositions(3), t);
}

Cocycle model_Tn(int n, const Scalar& t, const Scalar& lambda) {
    if (n < 3) throw Error("InvalidArgument", "model_Tn needs n >= 3");
    if (t.is_zero()) throw Error("ParameterConstraintViolated", "t = 0");
    if (!(lambda * lambda).is_one()) throw Error("ParameterConstraintViolated", "lambda^2 != 1");
    Rack r = transpositions(n);
    int k = r.size();
    std::vector<std::pair<int, int>> tr;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) tr.push_back({i, j});
    auto transposition = [&](int i, int j) {
        Perm p = perm_identity(n + 1);
        std::swap(p[i], p[j]);
        return p;
    };
    // v_x = r_x v_(1 2) with r_(1 j) = (2 j), r_(2 j) = (1 j), r_(i j) = (1 i)(2 j).
    std::vector<Perm> rep(k);
    for (int x = 0; x < k; ++x) {
        auto [i, j] = tr[x];
        if (i == 1 && j == 2) rep[x] = perm_identity(n + 1);
        else if (i == 1) rep[x] = transposition(2, j);
        else if (i == 2) rep[x] = transposition(1, j);
        else rep[x] = perm_compose(transposition(1, i), transposition(2, j));
    }
    // g_y r_x = r_{y>x} h with h centralizing (1 2); h acts by t times lambda^(parity of h on {3..n}).
    const ScalarDomain* d = t.domain() ? t.domain() : lambda.domain();
    Scalar tt = Scalar(d, 0) + t, lam = Scalar(d, 0) + lambda;
    std::vector<std::vector<Scalar>> q(k, std::vector<Scalar>(k));
    for (int y = 0; y < k; ++y) {
        Perm gy = transposition(tr[y].first, tr[y].second);
        for (int x = 0; x < k; ++x) {
            int yx = r.op(y, x);
            Perm h = perm_compose(perm_inverse(rep[yx]), perm_compose(gy, rep[x]));
            if (!((h[1] == 1 && h[2] == 2) || (h[1] == 2 && h[2] == 1)))
                throw Error("InternalError", "representative product does not centralize (1 2)");
            std::vector<bool> seen(n + 1, false);
            int parity = 0;
            for (int s = 3; s <= n; ++s) {
                if (seen[s]) continue;
                int len = 0;
                for (int u = s; !seen[u]; u = h[u]) {
                    seen[u] = true;
                    ++len;
                }
                parity ^= (len - 1) & 1;
            }
            q[y][x] = parity ? tt * lam : tt;
        }
    }
    Cocycle c = validate(r, q, d);
    // the two product identities the construction has to reproduce
    int a = r.index_of("(1 2)"), b = r.index_of("(1 3)"), cc = r.index_of("(2 3)");
    if (c.q(a, b) * c.q(cc, a) * c.q(b, cc) != tt.pow(3))
        throw Error("InternalError", "triangle product differs from t^3");
    if (n >= 4) {
        int e = r.index_of("(3 4)");
        if (c.q(a, e) * c.q(e, a) != tt * tt) throw Error("InternalError", "commuting product differs from t^2");
    }
    return c;
}

Cocycle model_tetra(const Scalar& t, const Scalar& l) {
    if (t.is_zero() || l.is_zero()) throw Error("ParameterConstraintViolated", "t and lambda must be nonzero");
    if (l * l != t.pow(4)) throw Error("ParameterConstraintViolated", "lambda^2 != t^4");
    const ScalarDomain* d = t.domain() ? t.domain() : l.domain();
    Scalar one(d, 1), lt = l / t;
    std::vector<std::vector<Scalar>> q = {
        {t, t, t, t},
        {one, t, l, lt},
        {one, lt, t, l},
        {one, l, lt, t},
    };
    return validate(tetrahedron(), q, d);
}

Cocycle model_cube(const Scalar& t, const Scalar& l) {
    if (t.is_zero() || l.is_zero()) throw Error("ParameterConstraintViolated", "t and lambda must be nonzero");
    if (!l.pow(4).is_one()) throw Error("ParameterConstraintViolated", "lambda^4 != 1");
    const ScalarDomain* d = t.domain() ? t.domain() : l.domain();
    Scalar one(d, 1), tl = t * l, t2 = t * t;
    std::vector<std::vector<Scalar>> q = {
        {t, t, t, t, t, tl},
        {one, t, t2 * l, tl, one, t2 * l.pow(3)},
        {one, l, t, t2 * l, tl, t2 * l * l},
        {one, tl, l * l, t, t2 * l, t2 * l},
        {one, t2 * l, tl, l.pow(3), t, t2},
        {tl, tl, tl, tl, tl, t},
    };
    return validate(cube(), q, d);
}

Cocycle dual_bvs(const Cocycle& c) {
    const Rack& r = c.rack();
    int k = r.size();
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    std::vector<std::vector<Scalar>> q(k, std::vector<Scalar>(k));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            t[x][y] = r.inv(x, y);
            q[x][y] = c.q(x, r.inv(x, y));
        }
    return validate(make_rack(t, r.labels()), q, c.domain());
}

Cocycle transport(const Cocycle& q1, const GaugeMap& g, const Rack& target) {
    const Rack& r = q1.rack();
    int k = r.size();
    std::vector<std::vector<Scalar>> q(k, std::vector<Scalar>(k));
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y) {
            if (target.op(g.sigma[x], g.sigma[y]) != g.sigma[r.op(x, y)])
                throw Error("InvalidArgument", "sigma is not a rack map");
            q[g.sigma[x]][g.sigma[y]] = g.s[y] / g.s[r.op(x, y)] * q1.q(x, y);
        }
    return validate(target, q, q1.domain());
}

Cocycle transport(const Cocycle& q1, const GaugeMap& g) { return transport(q1, g, relabel(q1.rack(), g.sigma)); }

std::optional<GaugeMap> solve_gauge(const Cocycle& q1, const Cocycle& q2, const Perm& sigma) {
    const Rack& r1 = q1.rack();
    const Rack& r2 = q2.rack();
    int k = r1.size();
    if (r2.size() != k) return std::nullopt;
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (r2.op(sigma[x], sigma[y]) != sigma[r1.op(x, y)]) return std::nullopt;
    GaugeMap g;
    g.sigma = sigma;
    g.s.assign(k, Scalar());
    std::vector<bool> known(k, false);
    // s_{x>y} = s_y q1(x,y) / q2(sigma x, sigma y); one free scale per Inn-orbit.
    for (int root = 0; root < k; ++root) {
        if (known[root]) continue;
        known[root] = true;
        g.s[root] = Scalar(q1.domain(), 1);
        std::deque<int> bfs{root};
        while (!bfs.empty()) {
            int y = bfs.front();
            bfs.pop_front();
            for (int x = 0; x < k; ++x) {
                int z = r1.op(x, y);
                if (known[z]) continue;
                known[z] = true;
                g.s[z] = g.s[y] * q1.q(x, y) / q2.q(sigma[x], sigma[y]);
                bfs.push_back(z);
            }
        }
    }
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            if (q2.q(sigma[x], sigma[y]) * g.s[r1.op(x, y)] != g.s[y] * q1.q(x, y)) return std::nullopt;
    return g;
}

std::optional<GaugeMap> gauge_equivalent(const Cocycle& q1, const Cocycle& q2, bool allow_automorphism) {
    int k = q1.size();
    if (auto g = solve_gauge(q1, q2, perm_identity(k))) return g;
    if (!allow_automorphism || k > kAutomorphismSearchBound) return std::nullopt;
    for (const Perm& s : rack_automorphisms(q1.rack()))
        if (auto g = solve_gauge(q1, q2, s)) return g;
    return std::nullopt;
}

std::optional<GaugeMap> find_braided_isomorphism(const Cocycle& q1, const Cocycle& q2, size_t iso_limit) {
    for (const Perm& s : rack_isomorphisms(q1.rack(), q2.rack(), iso_limit))
        if (auto g = solve_gauge(q1, q2, s)) return g;
    return std::nullopt;
}

GaugeInvariants gauge_invariants(const Cocycle& q) {
    const Rack& r = q.rack();
    GaugeInvariants inv;
    int k = r.size();
    for (int x = 0; x < k; ++x) inv.diagonal.push_back(q.q(x, x));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            int c = r.op(a, b);
            if (c == b) {
                if (a < b && r.op(b, a) == a) inv.commuting.push_back({{a, b}, q.q(a, b) * q.q(b, a)});
            } else {
                inv.triangles.push_back({{a, b}, q.q(a, b) * q.q(c, a) * q.q(b, c)});
            }
        }
    return inv;
}

}  // namespace coideal
