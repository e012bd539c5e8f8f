#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coideal/cocycle.hpp"
#include "coideal/envdeg.hpp"
#include "coideal/nichols.hpp"

namespace coideal {

// ---------------------------------------------------------------------------
// Rack- and scalar-level checks (src/coideal.cpp)

// One degree-two check: a commuting pair (1 - q_ab q_ba must vanish) or a
// triangle a > b = c != b (1 + q_ab q_ca q_bc must vanish).
struct SlimCheck {
    bool commuting = false;
    int a = -1, b = -1, c = -1;
    Scalar product;  // q_ab q_ba, or q_ab q_ca q_bc
    bool holds = false;
};
struct SlimnessReport {
    bool slim = true;
    std::optional<SlimCheck> failure;  // first failing check
    std::vector<SlimCheck> checks;
};
// Error RackNotConjSymmetric.
SlimnessReport slimness(const Cocycle& q);

// Pairwise distinct a, b, c, d with b > a = c and c > b = d; exists iff the rack is not braided.
std::optional<std::array<int, 4>> find_not_braided_quadruple(const Rack& r);

// Rack-side data of the degree-three element Z(a,b,c) on v_c v_b v_a.
struct Z3Plan {
    int a, b, c, d, e;     // d = c > (b > a), e = d > (c > b)
    std::vector<int> S;    // {a, b, d, e}, sorted and deduplicated
    enum class Prediction { Witness, InS, Open } prediction = Prediction::Open;
    std::string rule;
};
// Checks braided, pairwise distinct and a > b != b (PreconditionFail otherwise).
Z3Plan z3_plan(const Rack& r, int a, int b, int c);

struct Z4Plan {
    int a, b, c, d, e, f, g;  // e = abc > d, f = eab > c, g = fea > b
    std::vector<int> S;       // {b, c, d, e, f, g}
};
// PreconditionFail when the commutation pattern fails, HypothesesFail when
// e = d, f = c and g = b all hold.
Z4Plan z4_plan(const Rack& r, int a, int b, int c, int d);

// Inn-orbits of the rack, plus the first ordered pair (x, y) from different
// orbits with c^2(v_x (x) v_y) != v_x (x) v_y.
struct BraidingBlocks {
    std::vector<std::vector<int>> blocks;
    std::optional<std::pair<int, int>> c2_defect;
};
BraidingBlocks braiding_blocks(const Cocycle& q);

// Cocycle on the subrack spanned by a closed subset; error NotClosed.
struct RestrictedCocycle {
    Cocycle cocycle;
    std::vector<int> embedding;
};
RestrictedCocycle restrict_cocycle(const Cocycle& q, const std::vector<int>& closed);

// Degree-one comodule subspaces as letter subsets: every subset for small
// racks, otherwise one representative per orbit under inner automorphisms
// (translates give isomorphic coideal subalgebras). Error BudgetExceeded past 20 letters.
constexpr int kExhaustiveSubsetLimit = 6;
std::vector<std::vector<int>> comodule_subsets(const Rack& r, int exhaustive_limit = kExhaustiveSubsetLimit);

// ---------------------------------------------------------------------------
// Graded subspaces of B(V)

// Split of the B(n) basis into Hurwitz orbits. Each orbit spans a
// G_X-homogeneous piece; orbits past the budget fall back to the coarse
// (Inn image, orbit counts) key and clear `exact`.
struct HomogeneousPartition {
    std::vector<int> class_of;
    int classes = 0;
    bool exact = true;
};

template <class F>
HomogeneousPartition homogeneous_partition(const GradedQuotient<F>& q, int n, size_t budget = kDefaultOrbitBudget) {
    HomogeneousPartition p;
    const auto& b = q.basis(n);
    const Rack& r = q.cocycle().rack();
    std::map<Word, int> seen, coarse;
    p.class_of.assign(b.size(), -1);
    for (size_t i = 0; i < b.size(); ++i) {
        if (auto it = seen.find(b[i]); it != seen.end()) {
            p.class_of[i] = it->second;
            continue;
        }
        try {
            auto orb = hurwitz_orbit(r, b[i], budget);
            int id = p.classes++;
            for (auto& w : orb) seen.emplace(std::move(w), id);
            p.class_of[i] = id;
        } catch (const Error& e) {
            if (e.kind() != "BudgetExceeded") throw;
            p.exact = false;
            auto [it, fresh] = coarse.emplace(q.block_key(b[i]), p.classes);
            if (fresh) ++p.classes;
            p.class_of[i] = it->second;
        }
    }
    return p;
}

template <class F>
struct GradedSubspace {
    using Vec = SparseVec<typename F::T>;
    std::vector<std::vector<Vec>> basis;  // degree n -> vectors in the B(n) basis, each homogeneous
    bool exact_partition = true;

    int top() const { return static_cast<int>(basis.size()) - 1; }
    std::vector<size_t> dims() const {
        std::vector<size_t> d;
        for (const auto& b : basis) d.push_back(b.size());
        return d;
    }
    Eliminator<F> eliminator(const F& f, int n) const {
        Eliminator<F> el(f);
        int id = 0;
        if (n >= 0 && n <= top())
            for (const auto& v : basis[n]) el.add(v, id++);
        return el;
    }
    bool contains(const F& f, int n, const Vec& v) const { return eliminator(f, n).contains(v); }
};

// Re-expresses a graded subspace (for instance a subalgebra series) through
// homogeneous vectors: components of a graded subspace along the orbit split
// stay inside it.
template <class F>
GradedSubspace<F> homogenize(const GradedQuotient<F>& q, const std::vector<std::vector<SparseVec<typename F::T>>>& rows,
                             size_t budget = kDefaultOrbitBudget) {
    using T = typename F::T;
    GradedSubspace<F> out;
    for (int n = 0; n < static_cast<int>(rows.size()); ++n) {
        if (n <= 1) {
            out.basis.push_back(rows[n]);
            continue;
        }
        auto part = homogeneous_partition(q, n, budget);
        out.exact_partition = out.exact_partition && part.exact;
        std::vector<Eliminator<F>> els(part.classes, Eliminator<F>(q.field()));
        std::vector<SparseVec<T>> basis;
        int id = 0;
        for (const auto& row : rows[n]) {
            std::map<int, SparseVec<T>> pieces;
            for (const auto& [i, a] : row) pieces[part.class_of[i]].emplace_back(i, a);
            for (auto& [c, v] : pieces)
                if (els[c].add(v, id++)) basis.push_back(v);
        }
        out.basis.push_back(std::move(basis));
    }
    return out;
}

template <class F>
GradedSubspace<F> generated_subspace(const GradedQuotient<F>& q, const std::vector<int>& W, int N,
                                     size_t budget = kDefaultOrbitBudget) {
    return homogenize(q, subalgebra_series(q, letter_generators(q, W), N).basis, budget);
}

struct CoidealCheck {
    bool ok = true;
    int failing_degree = -1;
};

// Delta_{1,n-1}(C(n)) in V (x) C(n-1) for 1 <= n <= min(N, top). Error DegreeNotComputed.
template <class F>
CoidealCheck is_left_coideal(const GradedQuotient<F>& q, const GradedSubspace<F>& C, int N) {
    q.degree(N);
    for (int n = 1; n <= std::min(N, C.top()); ++n) {
        auto el = C.eliminator(q.field(), n - 1);
        for (const auto& x : C.basis[n])
            for (const auto& part : q.left_coproduct(n, x))
                if (!part.empty() && !el.contains(part)) return {false, n};
    }
    return {};
}

// K(n) = {x in B(n) : Delta_{n-1,1}(x) in B(n-1) (x) W}, i.e. the common kernel
// of the right derivations d_y for y outside W, solved per orbit.
template <class F>
GradedSubspace<F> maximal_coideal(const GradedQuotient<F>& q, const std::vector<int>& W, int N,
                                  size_t budget = kDefaultOrbitBudget) {
    using T = typename F::T;
    using Vec = SparseVec<T>;
    q.degree(N);
    const F& f = q.field();
    int k = q.rack_size();
    std::vector<char> in_w(k, 0);
    for (int x : W) in_w[x] = 1;
    GradedSubspace<F> K;
    K.basis.push_back({q.unit()});
    if (N >= 1) {
        std::vector<Vec> d1;
        for (int x = 0; x < k; ++x)
            if (in_w[x]) d1.push_back({{x, f.one()}});
        K.basis.push_back(std::move(d1));
    }
    for (int n = 2; n <= N; ++n) {
        auto part = homogeneous_partition(q, n, budget);
        K.exact_partition = K.exact_partition && part.exact;
        int dp = static_cast<int>(q.dim(n - 1));
        std::vector<std::vector<int>> members(part.classes);
        for (size_t i = 0; i < part.class_of.size(); ++i) members[part.class_of[i]].push_back(static_cast<int>(i));
        std::vector<std::vector<Vec>> found(part.classes);
        long nc = part.classes;
#pragma omp parallel for schedule(dynamic) if (q.options().parallel)
        for (long c = 0; c < nc; ++c) {
            Eliminator<F> el(f, true);
            for (int i : members[c]) {
                Vec e{{i, f.one()}};
                std::map<int, T> row;
                for (int y = 0; y < k; ++y)
                    if (!in_w[y])
                        for (const auto& [j, a] : q.derivation(n, e, y)) row.emplace(y * dp + j, a);
                Vec rel;
                if (el.add(to_sparse(row), i, &rel)) continue;
                std::map<int, T> v;
                v.emplace(i, f.one());
                for (const auto& [j, a] : rel) add_entry(f, v, j, f.neg(a));
                found[c].push_back(to_sparse(v));
            }
        }
        std::vector<Vec> basis;
        for (auto& v : found)
            for (auto& x : v) basis.push_back(std::move(x));
        K.basis.push_back(std::move(basis));
    }
    return K;
}

// ---------------------------------------------------------------------------
// Extensions

// All support words in one Hurwitz orbit (a sufficient test for G_X-homogeneity).
inline bool same_orbit(const Rack& r, const std::vector<Word>& words, size_t budget = kDefaultOrbitBudget) {
    if (words.size() <= 1) return true;
    try {
        auto orb = hurwitz_orbit(r, words.front(), budget);
        for (const auto& w : words)
            if (!std::binary_search(orb.begin(), orb.end(), w)) return false;
        return true;
    } catch (const Error& e) {
        if (e.kind() != "BudgetExceeded") throw;
    }
    for (size_t i = 1; i < words.size(); ++i)
        if (degrees_equal(r, words.front(), words[i], budget).result != DegreeCompare::Equal) return false;
    return true;
}

// x of degree n extends <W>: x homogeneous, Delta_{1,n-1}(x) in V (x) <W>(n-1),
// x outside <W>(n). The flags are recomputed by verify_witness.
template <class F>
struct ExtensionWitness {
    using T = typename F::T;
    int degree = 0;
    std::vector<int> W;
    SparseVec<T> element;           // in the B(n) basis
    TensorVector<T> representative; // same element on basis words
    std::string provenance;         // explicit-formula | linear-solve
    std::string label;
    bool homogeneous = false, coproduct_in_W = false, outside_W = false;
    bool verified() const { return homogeneous && coproduct_in_W && outside_W; }
};

template <class F>
void verify_witness(const GradedQuotient<F>& q, ExtensionWitness<F>& w, size_t budget = kDefaultOrbitBudget) {
    int n = w.degree;
    w.homogeneous = w.coproduct_in_W = w.outside_W = false;
    if (n < 1 || w.element.empty()) return;
    auto sub = subalgebra_series(q, letter_generators(q, w.W), n);
    std::vector<Word> words;
    for (const auto& [i, a] : w.element) words.push_back(q.basis(n)[i]);
    w.homogeneous = same_orbit(q.cocycle().rack(), words, budget);
    Eliminator<F> el(q.field());
    int id = 0;
    for (const auto& r : sub.basis[n - 1]) el.add(r, id++);
    w.coproduct_in_W = true;
    for (const auto& part : q.left_coproduct(n, w.element))
        if (!part.empty() && !el.contains(part)) w.coproduct_in_W = false;
    w.outside_W = !sub.contains(q, n, w.element);
}

template <class F>
ExtensionWitness<F> explicit_witness(const GradedQuotient<F>& q, const TensorVector<typename F::T>& x, std::vector<int> W,
                                     std::string label) {
    ExtensionWitness<F> w;
    w.degree = x.empty() ? 0 : static_cast<int>(x.begin()->first.size());
    std::sort(W.begin(), W.end());
    W.erase(std::unique(W.begin(), W.end()), W.end());
    w.W = std::move(W);
    if (w.degree > 0) {
        w.element = q.reduce(x);
        w.representative = q.representative(w.degree, w.element);
    }
    w.provenance = "explicit-formula";
    w.label = std::move(label);
    verify_witness(q, w);
    return w;
}

// The product c_{ops[0]} c_{ops[1]} ... applied to v (rightmost first).
template <class F>
TensorVector<typename F::T> apply_braids(const BraidedSpace<F>& sp, const std::vector<int>& ops,
                                         TensorVector<typename F::T> v) {
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) v = sp.apply_c(*it, v);
    return v;
}

// sum_{j=0}^{m} (-1)^j T^j (word), with T the braid product `ops`.
template <class F>
TensorVector<typename F::T> alternating_orbit_sum(const BraidedSpace<F>& sp, const std::vector<int>& ops, const Word& w,
                                                  int m) {
    using T = typename F::T;
    const F& f = sp.field();
    TensorVector<T> cur{{w, f.one()}}, out;
    for (int j = 0; j <= m; ++j) {
        for (const auto& [u, a] : cur) BraidedSpace<F>::add_to(out, u, j % 2 ? f.neg(a) : a, f);
        cur = apply_braids(sp, ops, cur);
    }
    return out;
}

template <class F>
struct GenerationVerdict {
    bool all_generated = true;
    int degree = -1;  // first degree where the maximal coideal is larger
    std::optional<ExtensionWitness<F>> witness;
    std::vector<size_t> coideal_dims, generated_dims;
    bool exact_partition = true;
};

// Complete through N: an N0-graded comodule left coideal subalgebra with
// degree-one part W sits between <W> and the maximal coideal K, so <W> is the
// only one iff the two agree. At the first gap a homogeneous vector of K
// outside <W> is an extension. Errors DegreeNotComputed, Inconsistent.
template <class F>
GenerationVerdict<F> degree_one_generation_verdict(const GradedQuotient<F>& q, const std::vector<int>& W, int N,
                                                   size_t budget = kDefaultOrbitBudget) {
    q.degree(N);
    auto sub = subalgebra_series(q, letter_generators(q, W), N);
    auto K = maximal_coideal(q, W, N, budget);
    GenerationVerdict<F> v;
    v.generated_dims = sub.dims;
    v.coideal_dims = K.dims();
    v.exact_partition = K.exact_partition;
    for (int n = 0; n <= N; ++n) {
        auto kel = K.eliminator(q.field(), n);
        for (const auto& r : sub.basis[n])
            if (!kel.contains(r)) throw Error("Inconsistent", "generated subalgebra leaves the maximal coideal in degree " + std::to_string(n));
        if (sub.dims[n] == v.coideal_dims[n]) continue;
        v.all_generated = false;
        v.degree = n;
        for (const auto& x : K.basis[n]) {
            if (sub.contains(q, n, x)) continue;
            ExtensionWitness<F> w;
            w.degree = n;
            w.W = W;
            std::sort(w.W.begin(), w.W.end());
            w.element = x;
            w.representative = q.representative(n, x);
            w.provenance = "linear-solve";
            w.label = "maximal coideal";
            verify_witness(q, w, budget);
            v.witness = std::move(w);
            break;
        }
        break;
    }
    return v;
}

// ---------------------------------------------------------------------------
// Explicit constructions

// Degree-two element of the first failing slimness check, over W = {b}:
// mu(id - c)(v_a v_b) for commuting pairs, mu(id - c + c^2)(v_a v_b) for triangles.
template <class F>
ExtensionWitness<F> slimness_witness(const GradedQuotient<F>& q, const SlimCheck& s) {
    auto x = alternating_orbit_sum(q.space(), {1}, Word{s.a, s.b}, s.commuting ? 1 : 2);
    return explicit_witness(q, x, {s.b}, s.commuting ? "degree two, commuting pair" : "degree two, triangle");
}

// Same relation evaluated in the quotient: true iff the element vanishes in B(2).
template <class F>
bool slim_relation_holds(const GradedQuotient<F>& q, const SlimCheck& s) {
    auto x = alternating_orbit_sum(q.space(), {1}, Word{s.a, s.b}, s.commuting ? 1 : 2);
    return q.reduce(x).empty();
}

// x = v_b v_a - q_{b,a} v_c v_b over W = {a, c}. Errors RackIsBraided,
// RackNotConjSymmetric. The note records the degree certificate for x outside <W>.
template <class F>
ExtensionWitness<F> not_braided_witness(const GradedQuotient<F>& q, std::string* note = nullptr) {
    const Rack& r = q.cocycle().rack();
    if (!predicates(r).conj_symmetric) throw Error("RackNotConjSymmetric", "rack is not a union of conjugacy classes");
    auto quad = find_not_braided_quadruple(r);
    if (!quad) throw Error("RackIsBraided", "no quadruple b > a = c, c > b = d");
    auto [a, b, c, d] = *quad;
    auto x = alternating_orbit_sum(q.space(), {1}, Word{b, a}, 1);
    if (note) {
        bool apart = true;
        for (int s : {a, c})
            for (int t : {a, c}) apart = apart && degrees_equal(r, {b, a}, {s, t}).result == DegreeCompare::NotEqual;
        *note = "a=" + r.label(a) + " b=" + r.label(b) + " c=" + r.label(c) + " d=" + r.label(d) +
                (apart ? "; degree of v_b v_a differs from every word over {a, c}" : "; degree certificate undecided");
    }
    return explicit_witness(q, x, {a, c}, "not braided");
}

// z = mu(id - c)(v_x (x) v_y) for x, y in different blocks with c^2 != id.
// The extension is of the subalgebra generated by the block of y: the
// coproduct lands in V (x) V_y-block.
template <class F>
ExtensionWitness<F> reducible_witness(const GradedQuotient<F>& q, int x, int y) {
    const Rack& r = q.cocycle().rack();
    std::vector<int> block;
    for (int z = 0; z < r.size(); ++z)
        if (r.orbit_of(z) == r.orbit_of(y)) block.push_back(z);
    auto z = alternating_orbit_sum(q.space(), {1}, Word{x, y}, 1);
    return explicit_witness(q, z, block, "blocks with c^2 != id");
}

template <class F>
struct Z3Result {
    Z3Plan plan;
    bool in_S = false;  // decided by linear algebra
    ExtensionWitness<F> witness;
};

// Z(a,b,c) = mu(id - c1c2 + (c1c2)^2)(v_c v_b v_a) against S = {a, b, d, e}.
// Needs degree 3. Errors PreconditionFail (rack, distinctness, slimness).
template <class F>
Z3Result<F> z3_witness(const GradedQuotient<F>& q, int a, int b, int c) {
    q.degree(3);
    Z3Result<F> res;
    res.plan = z3_plan(q.cocycle().rack(), a, b, c);
    auto slim = slimness(q.cocycle());
    if (!slim.slim) throw Error("PreconditionFail", "cocycle is not slim in degree two");
    auto Z = alternating_orbit_sum(q.space(), {1, 2}, Word{c, b, a}, 2);
    res.witness = explicit_witness(q, Z, res.plan.S, "degree three");
    res.in_S = !res.witness.outside_W;
    return res;
}

template <class F>
struct Z4Result {
    Z4Plan plan;
    bool degree_certificate = false;  // S^4 misses the Hurwitz orbit of (a,b,c,d)
    ExtensionWitness<F> witness;
};

// Z(a,b,c,d) = mu(id - T + T^2 - T^3)(v_a v_b v_c v_d), T = c1c2c3, against
// S = {b, c, d, e, f, g}. Needs degree 4. Errors PreconditionFail, HypothesesFail.
template <class F>
Z4Result<F> z4_witness(const GradedQuotient<F>& q, int a, int b, int c, int d) {
    q.degree(4);
    Z4Result<F> res;
    const Rack& r = q.cocycle().rack();
    res.plan = z4_plan(r, a, b, c, d);
    if (!slimness(q.cocycle()).slim) throw Error("PreconditionFail", "cocycle is not slim in degree two");
    res.degree_certificate = disjoint_from_S4(r, Word{a, b, c, d}, res.plan.S);
    auto Z = alternating_orbit_sum(q.space(), {1, 2, 3}, Word{a, b, c, d}, 3);
    res.witness = explicit_witness(q, Z, res.plan.S, "degree four");
    return res;
}

// ---------------------------------------------------------------------------
// Duality criterion

struct DualityReport {
    bool no_extension = false;  // <V1> has no extension in degrees 2..N
    int N = 0;
    std::vector<size_t> v1_dims, v2_dims, v2_dual_dims, nichols_dims;
    size_t product_sum = 0, nichols_sum = 0;
    bool count_ok = false, dual_dims_ok = false;
};

// V = V1 + V2 (letter sets). Holds when sum_{i<=N} dim(<V1> (x) <V2>)(i) >=
// sum_{i<=N} dim B(i) and <V2>, <V2*> (in the dual Nichols algebra) have the
// same dims through N. Error DegreeNotComputed.
template <class F>
DualityReport duality_no_extension(const GradedQuotient<F>& q, const std::vector<int>& V1, const std::vector<int>& V2,
                                   int N) {
    q.degree(N);
    DualityReport rep;
    rep.N = N;
    rep.v1_dims = subalgebra_series(q, letter_generators(q, V1), N).dims;
    rep.v2_dims = subalgebra_series(q, letter_generators(q, V2), N).dims;
    GradedQuotient<F> dual(dual_bvs(q.cocycle()), q.field(), q.options());
    rep.v2_dual_dims = subalgebra_until_zero(dual, letter_generators(dual, V2), N).dims;
    rep.v2_dual_dims.resize(N + 1, 0);
    for (int i = 0; i <= N; ++i) {
        rep.nichols_dims.push_back(q.dim(i));
        rep.nichols_sum += q.dim(i);
        for (int l = 0; l <= i; ++l) rep.product_sum += rep.v1_dims[l] * rep.v2_dims[i - l];
    }
    rep.count_ok = rep.product_sum >= rep.nichols_sum;
    rep.dual_dims_ok = rep.v2_dims == rep.v2_dual_dims;
    rep.no_extension = rep.count_ok && rep.dual_dims_ok;
    return rep;
}

}  // namespace coideal
