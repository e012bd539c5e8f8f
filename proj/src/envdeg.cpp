#include "coideal/envdeg.hpp"

#include <algorithm>
#include <set>

#include "coideal/error.hpp"

namespace coideal {

Perm inn_image(const Rack& r, const Word& w) {
    Perm p = perm_identity(r.size());
    for (int x : w) p = perm_compose(p, r.phi(x));
    return p;
}

std::vector<int> orbit_counts(const Rack& r, const Word& w) {
    std::vector<int> c(r.num_orbits(), 0);
    for (int x : w) c[r.orbit_of(x)]++;
    return c;
}

Word hurwitz_sigma(const Rack& r, const Word& t, int i) {
    Word u = t;
    u[i - 1] = r.op(t[i - 1], t[i]);
    u[i] = t[i - 1];
    return u;
}

namespace {
Word hurwitz_sigma_inv(const Rack& r, const Word& t, int i) {
    Word u = t;
    u[i - 1] = t[i];
    u[i] = r.inv(t[i], t[i - 1]);
    return u;
}

// BFS; returns false when the budget ran out first.
template <class Moves>
bool closure(const Word& start, size_t budget, std::set<Word>& seen, Moves&& moves, const Word* stop_at = nullptr) {
    seen.insert(start);
    std::vector<Word> frontier{start};
    while (!frontier.empty()) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            bool over = false;
            moves(w, [&](Word&& u) {
                if (over) return;
                if (seen.insert(u).second) {
                    if (seen.size() > budget) {
                        over = true;
                        return;
                    }
                    next.push_back(std::move(u));
                }
            });
            if (over) return false;
            if (stop_at && seen.count(*stop_at)) return true;
        }
        frontier = std::move(next);
    }
    return true;
}
}  // namespace

DegreeClass degree_class(const Rack& r, const Word& w, size_t budget) {
    DegreeClass dc;
    dc.length = static_cast<int>(w.size());
    dc.inn_image = inn_image(r, w);
    dc.orbit_counts = orbit_counts(r, w);
    std::set<Word> seen;
    int n = dc.length;
    dc.exhausted = closure(w, budget, seen, [&](const Word& u, auto&& emit) {
        for (int i = 1; i < n; ++i) {
            emit(hurwitz_sigma(r, u, i));
            emit(hurwitz_sigma_inv(r, u, i));
        }
    });
    dc.visited = seen.size();
    dc.canonical = *seen.begin();
    return dc;
}

std::string to_string(DegreeCompare c) {
    switch (c) {
        case DegreeCompare::Equal: return "equal";
        case DegreeCompare::NotEqual: return "not-equal";
        default: return "undecided";
    }
}

DegreeComparison degrees_equal(const Rack& r, const Word& w1, const Word& w2, size_t budget) {
    if (w1.size() != w2.size()) return {DegreeCompare::NotEqual, "lengths differ"};
    if (inn_image(r, w1) != inn_image(r, w2)) return {DegreeCompare::NotEqual, "images in Inn(X) differ"};
    if (orbit_counts(r, w1) != orbit_counts(r, w2)) return {DegreeCompare::NotEqual, "letter counts per orbit differ"};
    if (w1 == w2) return {DegreeCompare::Equal, "identical words"};
    std::set<Word> seen;
    int n = static_cast<int>(w1.size());
    bool exhausted = closure(
        w1, budget, seen,
        [&](const Word& u, auto&& emit) {
            for (int i = 1; i < n; ++i) {
                emit(hurwitz_sigma(r, u, i));
                emit(hurwitz_sigma_inv(r, u, i));
            }
        },
        &w2);
    if (seen.count(w2)) return {DegreeCompare::Equal, "connected by Hurwitz moves"};
    return {DegreeCompare::Undecided, exhausted ? "invariants agree, Hurwitz orbits are disjoint"
                                                : "invariants agree, orbit budget exceeded"};
}

std::vector<Word> hurwitz_orbit(const Rack& r, const Word& t, size_t budget) {
    std::set<Word> seen;
    int n = static_cast<int>(t.size());
    bool ok = closure(t, budget, seen, [&](const Word& u, auto&& emit) {
        for (int i = 1; i < n; ++i) emit(hurwitz_sigma(r, u, i));
    });
    if (!ok) throw Error("BudgetExceeded", "Hurwitz orbit larger than " + std::to_string(budget));
    return std::vector<Word>(seen.begin(), seen.end());
}

char orbit_type(const Rack& r, const Word& q) {
    if (q.size() != 4) throw Error("InvalidArgument", "orbit_type needs a quadruple");
    auto box = [&](int x, int y) { return boxed(r, x, y); };
    auto apart = [&](std::initializer_list<std::pair<int, int>> pairs) {
        for (auto [i, j] : pairs)
            if (r.commute(q[i], q[j]) || r.commute(q[j], q[i])) return false;
        return true;
    };
    int x1 = q[0], x2 = q[1], x3 = q[2], x4 = q[3];
    if (box(x1, x3) && box(x2, r.op(x3, x4)) && box(x1, r.op(x2, x4)) && apart({{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}))
        return 'x';
    if (box(x2, x3) && box(x1, x4) && box(x1, r.op(x2, r.op(x3, x4))) && apart({{0, 1}, {0, 2}, {1, 3}, {2, 3}}))
        return 'y';
    if (box(x2, x4) && box(x1, r.op(x3, x4)) && box(x1, r.op(x2, x3)) && apart({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}))
        return 'z';
    // Third condition as carried over from (z) by sigma2: x1 □ phi_{x3}^{-1}(x2 > (x3 > x4)).
    if (box(x1, x2) && box(x3, x4) && box(x1, r.inv(x3, r.op(x2, r.op(x3, x4)))) && apart({{0, 2}, {0, 3}, {1, 2}, {1, 3}}))
        return 'u';
    return 'o';
}

bool quadruple_hypotheses(const Rack& r, const Word& q) {
    if (q.size() != 4) return false;
    if (!predicates(r).braided) return false;
    int a = q[0], b = q[1], c = q[2], d = q[3];
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            bool ac = (i == 0 && j == 2);
            bool comm = r.commute(q[i], q[j]);
            if (ac ? !boxed(r, a, c) : comm) return false;
        }
    return boxed(r, b, r.op(c, d)) && boxed(r, a, r.op(b, d));
}

std::vector<Word> admissible_quadruples(const Rack& r) {
    std::vector<Word> out;
    if (!predicates(r).braided) return out;
    int k = r.size();
    for (int a = 0; a < k; ++a)
        for (int c = 0; c < k; ++c) {
            if (!boxed(r, a, c)) continue;
            for (int b = 0; b < k; ++b)
                for (int d = 0; d < k; ++d)
                    if (quadruple_hypotheses(r, {a, b, c, d})) out.push_back({a, b, c, d});
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool disjoint_from_S4_unchecked(const Rack& r, const Word& abcd, const std::vector<int>& S, size_t budget) {
    std::vector<bool> in(r.size(), false);
    for (int s : S) in[s] = true;
    for (const Word& t : hurwitz_orbit(r, abcd, budget))
        if (std::all_of(t.begin(), t.end(), [&](int x) { return in[x]; })) return false;
    return true;
}

bool disjoint_from_S4(const Rack& r, const Word& abcd, const std::vector<int>& S, size_t budget) {
    if (!quadruple_hypotheses(r, abcd)) throw Error("HypothesesFail", "quadruple does not satisfy the commutation pattern");
    return disjoint_from_S4_unchecked(r, abcd, S, budget);
}

}  // namespace coideal
