#include "coideal/rack.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "coideal/error.hpp"

namespace coideal {

Perm perm_compose(const Perm& a, const Perm& b) {
    Perm r(b.size());
    for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

Perm perm_identity(int n) {
    Perm r(n);
    std::iota(r.begin(), r.end(), 0);
    return r;
}

int perm_order(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    long ord = 1;
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        long len = 0;
        for (size_t j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return static_cast<int>(ord);
}

namespace {
std::string strip_spaces(const std::string& s) {
    std::string r;
    for (char c : s)
        if (c != ' ') r += c;
    return r;
}

std::vector<std::string> letter_labels(int k) {
    std::vector<std::string> l;
    for (int i = 0; i < k; ++i) l.push_back(std::string(1, static_cast<char>('a' + i)));
    return l;
}
}  // namespace

Perm Rack::phi(int i) const {
    return Perm(table_.begin() + static_cast<long>(i) * k_, table_.begin() + static_cast<long>(i + 1) * k_);
}

std::vector<std::vector<int>> Rack::rows() const {
    std::vector<std::vector<int>> r(k_);
    for (int i = 0; i < k_; ++i) r[i] = phi(i);
    return r;
}

int Rack::index_of(const std::string& name) const {
    std::string s = strip_spaces(name);
    for (int i = 0; i < k_; ++i)
        if (strip_spaces(labels_[i]) == s) return i;
    if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit)) {
        int v = std::stoi(s);
        if (v < k_) return v;
    }
    return -1;
}

Rack make_rack(std::vector<std::vector<int>> table, std::vector<std::string> labels) {
    int k = static_cast<int>(table.size());
    if (k == 0) throw Error("InvalidTable", "empty rack");
    Rack r;
    r.k_ = k;
    r.table_.resize(static_cast<size_t>(k) * k);
    r.inv_.assign(static_cast<size_t>(k) * k, -1);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(table[i].size()) != k)
            throw Error("InvalidTable", "row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < k; ++j) {
            int v = table[i][j];
            if (v < 0 || v >= k) throw Error("InvalidTable", "entry out of range at (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (r.inv_[static_cast<size_t>(i) * k + v] != -1)
                throw Error("NonBijectiveColumn", "phi_" + std::to_string(i) + " is not a bijection");
            r.table_[static_cast<size_t>(i) * k + j] = v;
            r.inv_[static_cast<size_t>(i) * k + v] = j;
        }
    }
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            for (int l = 0; l < k; ++l)
                if (r.op(i, r.op(j, l)) != r.op(r.op(i, j), r.op(i, l)))
                    throw Error("NotSelfDistributive", "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                           std::to_string(l) + ")");
    if (labels.empty()) {
        for (int i = 0; i < k; ++i) labels.push_back(std::to_string(i));
    }
    if (static_cast<int>(labels.size()) != k) throw Error("InvalidTable", "label count does not match size");
    r.labels_ = std::move(labels);

    // Inn(X)-orbits: y ~ x > y.
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) parent[find(r.op(i, j))] = find(j);
    r.orbit_.assign(k, -1);
    std::map<int, int> ids;
    for (int x = 0; x < k; ++x) {
        int root = find(x);
        auto it = ids.find(root);
        if (it == ids.end()) it = ids.emplace(root, static_cast<int>(ids.size())).first;
        r.orbit_[x] = it->second;
    }
    r.num_orbits_ = static_cast<int>(ids.size());
    return r;
}

RackPredicateReport predicates(const Rack& r) {
    RackPredicateReport rep;
    int k = r.size();
    rep.quandle = true;
    for (int x = 0; x < k; ++x)
        if (r.op(x, x) != x) rep.quandle = false;
    rep.conj_symmetric = true;
    bool br = rep.quandle;
    for (int x = 0; x < k; ++x) {
        for (int y = 0; y < k; ++y) {
            if (r.op(x, y) == y && r.op(y, x) != x) rep.conj_symmetric = false;
            if (r.op(x, y) != y && r.op(x, r.op(y, x)) != y) br = false;
        }
    }
    rep.braided = br;
    rep.indecomposable = r.num_orbits() == 1;
    rep.injective_hint = r.from_conjugacy();
    if (rep.indecomposable) {
        int o = perm_order(r.phi(0));
        for (int x = 1; x < k; ++x)
            if (perm_order(r.phi(x)) != o) o = 0;
        rep.phi_order = o;
    }
    return rep;
}

Rack transpositions(int n) {
    if (n < 2) throw Error("InvalidArgument", "transpositions need n >= 2");
    std::vector<std::pair<int, int>> t;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            t.push_back({i, j});
            labels.push_back("(" + std::to_string(i) + " " + std::to_string(j) + ")");
        }
    int k = static_cast<int>(t.size());
    std::map<std::pair<int, int>, int> idx;
    for (int i = 0; i < k; ++i) idx[t[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int x = 0; x < k; ++x) {
        auto [a, b] = t[x];
        auto sw = [&](int v) { return v == a ? b : v == b ? a : v; };
        for (int y = 0; y < k; ++y) {
            int c = sw(t[y].first), d = sw(t[y].second);
            table[x][y] = idx[{std::min(c, d), std::max(c, d)}];
        }
    }
    Rack r = make_rack(table, labels);
    return r;
}

Rack tetrahedron() {
    // a c d b / d b a c / b d c a / c a b d
    return make_rack({{0, 2, 3, 1}, {3, 1, 0, 2}, {1, 3, 2, 0}, {2, 0, 1, 3}}, letter_labels(4));
}

Rack cube() {
    return make_rack({{0, 2, 3, 4, 1, 5},
                      {4, 1, 0, 3, 5, 2},
                      {1, 5, 2, 0, 4, 3},
                      {2, 1, 5, 3, 0, 4},
                      {3, 0, 2, 5, 4, 1},
                      {0, 4, 1, 2, 3, 5}},
                     letter_labels(6));
}

Rack trivial_rack(int k) {
    std::vector<std::vector<int>> t(k, perm_identity(k));
    return make_rack(t);
}

Rack dihedral_quandle(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[i][j] = ((2 * i - j) % n + n) % n;
    return make_rack(t);
}

Rack alexander_quandle(int n, int a) {
    if (std::gcd(a, n) != 1) throw Error("InvalidArgument", "multiplier must be a unit mod n");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) t[x][y] = (((a * y + (1 - a) * x) % n) + n) % n;
    return make_rack(t);
}

Rack permutation_rack(const Perm& s) {
    std::vector<std::vector<int>> t(s.size(), s);
    return make_rack(t);
}

Rack conjugacy_rack(const std::vector<Perm>& gens, const Perm& cls, size_t limit) {
    size_t deg = cls.size();
    for (const auto& g : gens)
        if (g.size() != deg) throw Error("InvalidArgument", "generators act on different sets");
    std::set<Perm> seen{cls};
    std::vector<Perm> frontier{cls};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& e : frontier) {
            for (const auto& g : gens) {
                Perm c = perm_compose(perm_compose(g, e), perm_inverse(g));
                if (seen.insert(c).second) {
                    if (seen.size() > limit) throw Error("ClassTooLarge", "limit " + std::to_string(limit));
                    next.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    std::vector<Perm> els(seen.begin(), seen.end());
    std::map<Perm, int> idx;
    for (size_t i = 0; i < els.size(); ++i) idx[els[i]] = static_cast<int>(i);
    int k = static_cast<int>(els.size());
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    for (int x = 0; x < k; ++x) {
        Perm xi = perm_inverse(els[x]);
        for (int y = 0; y < k; ++y) {
            auto it = idx.find(perm_compose(perm_compose(els[x], els[y]), xi));
            if (it == idx.end()) throw Error("InvalidArgument", "class is not closed under its own conjugation");
            t[x][y] = it->second;
        }
    }
    Rack r = make_rack(t);
    r.conj_built_ = true;
    return r;
}

Rack relabel(const Rack& r, const Perm& s) {
    int k = r.size();
    std::vector<std::vector<int>> t(k, std::vector<int>(k));
    std::vector<std::string> labels(k);
    for (int i = 0; i < k; ++i) {
        labels[s[i]] = r.label(i);
        for (int j = 0; j < k; ++j) t[s[i]][s[j]] = s[r.op(i, j)];
    }
    return make_rack(t, labels);
}

std::vector<int> closure_set(const Rack& r, const std::vector<int>& subset) {
    std::vector<bool> in(r.size(), false);
    std::vector<int> s;
    for (int x : subset)
        if (!in[x]) {
            in[x] = true;
            s.push_back(x);
        }
    bool grew = true;
    while (grew) {
        grew = false;
        size_t n = s.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                for (int v : {r.op(s[i], s[j]), r.inv(s[i], s[j])})
                    if (!in[v]) {
                        in[v] = true;
                        s.push_back(v);
                        grew = true;
                    }
    }
    std::sort(s.begin(), s.end());
    return s;
}

Subrack induced_subrack(const Rack& r, const std::vector<int>& closed) {
    int m = static_cast<int>(closed.size());
    std::vector<int> pos(r.size(), -1);
    for (int i = 0; i < m; ++i) pos[closed[i]] = i;
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> labels;
    for (int i = 0; i < m; ++i) {
        labels.push_back(r.label(closed[i]));
        for (int j = 0; j < m; ++j) {
            int v = pos[r.op(closed[i], closed[j])];
            if (v < 0) throw Error("InvalidArgument", "subset is not closed");
            t[i][j] = v;
        }
    }
    return {make_rack(t, labels), closed};
}

Subrack subrack_closure(const Rack& r, const std::vector<int>& subset) {
    if (subset.empty()) throw Error("InvalidArgument", "empty subset");
    return induced_subrack(r, closure_set(r, subset));
}

namespace {

// Cheap isomorphism invariant of an element.
std::vector<int> element_signature(const Rack& r, int x) {
    std::vector<int> cyc;
    Perm p = r.phi(x);
    std::vector<bool> seen(p.size(), false);
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        cyc.push_back(len);
    }
    std::sort(cyc.begin(), cyc.end());
    cyc.push_back(r.op(x, x) == x ? -1 : -2);
    int fixers = 0;
    for (int y = 0; y < r.size(); ++y) fixers += r.op(y, x) == x;
    cyc.push_back(-100 - fixers);
    return cyc;
}

struct IsoSearch {
    const Rack& a;
    const Rack& b;
    size_t limit;
    std::vector<std::vector<int>> sa, sb;
    std::vector<Perm> out;

    bool assign(Perm& f, Perm& g, int x, int y) const {
        std::vector<int> assigned;
        for (int u = 0; u < a.size(); ++u)
            if (f[u] >= 0) assigned.push_back(u);
        std::vector<int> queue;
        auto set = [&](int w, int t) {
            if (f[w] == t) return true;
            if (f[w] >= 0 || g[t] >= 0 || sa[w] != sb[t]) return false;
            f[w] = t;
            g[t] = w;
            queue.push_back(w);
            return true;
        };
        if (!set(x, y)) return false;
        while (!queue.empty()) {
            int u = queue.back();
            queue.pop_back();
            assigned.push_back(u);
            for (int v : assigned) {
                for (auto [p, q] : {std::pair{u, v}, std::pair{v, u}}) {
                    if (!set(a.op(p, q), b.op(f[p], f[q]))) return false;
                    if (!set(a.inv(p, q), b.inv(f[p], f[q]))) return false;
                }
            }
        }
        return true;
    }

    void run(const Perm& f, const Perm& g) {
        if (out.size() >= limit) return;
        int x = -1;
        for (int u = 0; u < a.size(); ++u)
            if (f[u] < 0) {
                x = u;
                break;
            }
        if (x < 0) {
            out.push_back(f);
            return;
        }
        for (int y = 0; y < b.size() && out.size() < limit; ++y) {
            if (g[y] >= 0 || sa[x] != sb[y]) continue;
            Perm f2 = f, g2 = g;
            if (assign(f2, g2, x, y)) run(f2, g2);
        }
    }
};

}  // namespace

std::vector<Perm> rack_isomorphisms(const Rack& a, const Rack& b, size_t limit) {
    if (a.size() != b.size()) return {};
    IsoSearch s{a, b, limit, {}, {}, {}};
    for (int x = 0; x < a.size(); ++x) {
        s.sa.push_back(element_signature(a, x));
        s.sb.push_back(element_signature(b, x));
    }
    auto ma = s.sa, mb = s.sb;
    std::sort(ma.begin(), ma.end());
    std::sort(mb.begin(), mb.end());
    if (ma != mb) return {};
    s.run(Perm(a.size(), -1), Perm(a.size(), -1));
    return s.out;
}

std::optional<Perm> find_rack_isomorphism(const Rack& a, const Rack& b) {
    auto v = rack_isomorphisms(a, b, 1);
    if (v.empty()) return std::nullopt;
    return v[0];
}

std::vector<Perm> rack_automorphisms(const Rack& r) { return rack_isomorphisms(r, r); }

std::string to_string(StandardKind k) {
    switch (k) {
        case StandardKind::Trivial: return "trivial";
        case StandardKind::Transpositions: return "transpositions";
        case StandardKind::Tetrahedron: return "tetrahedron";
        case StandardKind::Cube: return "cube";
        default: return "other";
    }
}

StandardId identify_standard(const Rack& r) {
    StandardId id;
    int k = r.size();
    bool trivial = true;
    for (int x = 0; x < k && trivial; ++x)
        for (int y = 0; y < k; ++y)
            if (r.op(x, y) != y) {
                trivial = false;
                break;
            }
    if (trivial) {
        id.kind = StandardKind::Trivial;
        id.iso = perm_identity(k);
        return id;
    }
    if (k > kIdentifyBound) {
        id.note = "size " + std::to_string(k) + " exceeds the identification bound " + std::to_string(kIdentifyBound);
        return id;
    }
    auto try_model = [&](const Rack& model, StandardKind kind, int n) {
        if (auto f = find_rack_isomorphism(r, model)) {
            id.kind = kind;
            id.n = n;
            id.iso = *f;
            return true;
        }
        return false;
    };
    if (k == 4 && try_model(tetrahedron(), StandardKind::Tetrahedron, 0)) return id;
    if (k == 6 && try_model(cube(), StandardKind::Cube, 0)) return id;
    for (int n = 3; n * (n - 1) / 2 <= k; ++n)
        if (n * (n - 1) / 2 == k && try_model(transpositions(n), StandardKind::Transpositions, n)) return id;
    id.note = "no match among trivial, transpositions, tetrahedron, cube";
    return id;
}

}  // namespace coideal
