#include "coideal/coideal.hpp"

#include <set>

namespace coideal {

SlimnessReport slimness(const Cocycle& q) {
    const Rack& r = q.rack();
    if (!predicates(r).conj_symmetric) throw Error("RackNotConjSymmetric", "rack is not a union of conjugacy classes");
    const Scalar one(q.domain(), 1), minus_one(q.domain(), -1);
    SlimnessReport rep;
    int k = r.size();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            if (a == b) continue;
            SlimCheck s;
            s.a = a;
            s.b = b;
            if (r.commute(a, b)) {
                s.commuting = true;
                s.product = q.q(a, b) * q.q(b, a);
                s.holds = s.product == one;
            } else {
                s.c = r.op(a, b);
                s.product = q.q(a, b) * q.q(s.c, a) * q.q(b, s.c);
                s.holds = s.product == minus_one;
            }
            if (!s.holds && rep.slim) {
                rep.slim = false;
                rep.failure = s;
            }
            rep.checks.push_back(std::move(s));
        }
    return rep;
}

std::optional<std::array<int, 4>> find_not_braided_quadruple(const Rack& r) {
    int k = r.size();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int c = r.op(b, a);
            if (a == b || c == a || c == b) continue;
            int d = r.op(c, b);
            if (d == a || d == b || d == c) continue;
            return std::array<int, 4>{a, b, c, d};
        }
    return std::nullopt;
}

namespace {
std::vector<int> sorted_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}
}  // namespace

Z3Plan z3_plan(const Rack& r, int a, int b, int c) {
    int k = r.size();
    for (int x : {a, b, c})
        if (x < 0 || x >= k) throw Error("PreconditionFail", "letter out of range");
    if (!predicates(r).braided) throw Error("PreconditionFail", "rack is not braided");
    if (a == b || b == c || a == c) throw Error("PreconditionFail", "a, b, c are not pairwise distinct");
    if (r.op(a, b) == b) throw Error("PreconditionFail", "a > b = b");
    Z3Plan p{a, b, c, 0, 0, {}, Z3Plan::Prediction::Open, ""};
    int ba = r.op(b, a);
    p.d = r.op(c, ba);
    p.e = r.op(p.d, r.op(c, b));
    p.S = sorted_set({a, b, p.d, p.e});
    if (!r.commute(c, a) && !r.commute(c, b) && !r.commute(c, ba) && (r.op(a, b) != c || r.op(a, c) != ba)) {
        p.prediction = Z3Plan::Prediction::Witness;
        p.rule = "c commutes with none of a, b, b>a";
    } else if (r.commute(c, b) && !r.commute(c, a)) {
        p.prediction = Z3Plan::Prediction::InS;
        p.rule = "c>b = b, c>a != a";
    } else if (r.commute(c, a) && !r.commute(c, b)) {
        p.prediction = Z3Plan::Prediction::InS;
        p.rule = "c>a = a, c>b != b";
    } else if (r.commute(c, ba) && !r.commute(c, a)) {
        p.prediction = Z3Plan::Prediction::InS;
        p.rule = "c>(b>a) = b>a, c>a != a";
    } else {
        p.rule = "no rule applies; decided by linear algebra";
    }
    return p;
}

Z4Plan z4_plan(const Rack& r, int a, int b, int c, int d) {
    int k = r.size();
    for (int x : {a, b, c, d})
        if (x < 0 || x >= k) throw Error("PreconditionFail", "letter out of range");
    if (!quadruple_hypotheses(r, Word{a, b, c, d}))
        throw Error("PreconditionFail", "commutation pattern (only a, c commute; b, c>d and a, b>d commute) fails");
    Z4Plan p{a, b, c, d, 0, 0, 0, {}};
    p.e = r.op(a, r.op(b, r.op(c, d)));
    p.f = r.op(p.e, r.op(a, r.op(b, c)));
    p.g = r.op(p.f, r.op(p.e, r.op(a, b)));
    if (p.e == d && p.f == c && p.g == b) throw Error("HypothesesFail", "e = d, f = c and g = b");
    p.S = sorted_set({b, c, d, p.e, p.f, p.g});
    return p;
}

BraidingBlocks braiding_blocks(const Cocycle& q) {
    const Rack& r = q.rack();
    BraidingBlocks bb;
    bb.blocks.resize(r.num_orbits());
    for (int x = 0; x < r.size(); ++x) bb.blocks[r.orbit_of(x)].push_back(x);
    const Scalar one(q.domain(), 1);
    for (int x = 0; x < r.size() && !bb.c2_defect; ++x)
        for (int y = 0; y < r.size(); ++y) {
            if (r.orbit_of(x) == r.orbit_of(y)) continue;
            bool trivial = r.commute(x, y) && r.commute(y, x) && q.q(x, y) * q.q(y, x) == one;
            if (!trivial) {
                bb.c2_defect = std::make_pair(x, y);
                break;
            }
        }
    return bb;
}

RestrictedCocycle restrict_cocycle(const Cocycle& q, const std::vector<int>& closed) {
    auto letters = sorted_set(closed);
    if (closure_set(q.rack(), letters).size() != letters.size()) throw Error("NotClosed", "subset is not a subrack");
    Subrack sub = induced_subrack(q.rack(), letters);
    int m = static_cast<int>(letters.size());
    std::vector<std::vector<Scalar>> rows(m, std::vector<Scalar>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) rows[i][j] = q.q(sub.embedding[i], sub.embedding[j]);
    return {validate(sub.rack, rows, q.domain()), sub.embedding};
}

std::vector<std::vector<int>> comodule_subsets(const Rack& r, int exhaustive_limit) {
    int k = r.size();
    auto letters_of = [k](uint32_t m) {
        std::vector<int> v;
        for (int x = 0; x < k; ++x)
            if (m >> x & 1u) v.push_back(x);
        return v;
    };
    std::vector<std::vector<int>> out;
    if (k <= exhaustive_limit) {
        for (uint32_t m = 0; m < (1u << k); ++m) out.push_back(letters_of(m));
        return out;
    }
    if (k > 20) throw Error("BudgetExceeded", "comodule enumeration limited to 20 letters");
    // Inner automorphism group, generated by the phi_x.
    std::set<Perm> group{perm_identity(k)};
    std::vector<Perm> frontier{perm_identity(k)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& g : frontier)
            for (int x = 0; x < k; ++x) {
                Perm h = perm_compose(r.phi(x), g);
                if (group.insert(h).second) next.push_back(std::move(h));
            }
        if (group.size() > 200000) throw Error("BudgetExceeded", "inner automorphism group too large");
        frontier = std::move(next);
    }
    std::vector<char> seen(size_t{1} << k, 0);
    for (uint32_t m = 0; m < (1u << k); ++m) {
        if (seen[m]) continue;
        out.push_back(letters_of(m));
        for (const auto& g : group) {
            uint32_t img = 0;
            for (int x = 0; x < k; ++x)
                if (m >> x & 1u) img |= 1u << g[x];
            seen[img] = 1;
        }
    }
    return out;
}

}  // namespace coideal
