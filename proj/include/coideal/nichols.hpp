#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "coideal/braid.hpp"
#include "coideal/envdeg.hpp"
#include "coideal/error.hpp"
#include "coideal/linalg.hpp"

namespace coideal {

struct QuotientOptions {
    bool parallel = true;   // OpenMP over blocks
    bool blocked = true;    // split candidates by G_X-degree invariants
    size_t candidate_budget = 0;  // rows per degree; 0 = engine default
};
constexpr size_t kExactCandidateBudget = 300000;
constexpr size_t kModularCandidateBudget = 5000000;

// Graded components B(n) = V^{(x)n} / ker S_n, built degree by degree.
//
// B(n) is a quotient of B(n-1) (x) V, so degree n is spanned by the candidates
// u.x (u a basis word of B(n-1), x a letter). With the right skew-derivations
// defined by Delta_{n-1,1}(w) = sum_y d_y(w) (x) v_y, an element lies in ker S_n
// iff every d_y of it vanishes in B(n-1), and
//     d_y(w'.x) = [x = y] w' + q(y, x) d_y(w').(y > x).
// So each candidate's image under (d_y)_y is computed from degree n-1 data alone
// and dim B(n) is the rank of those images. Candidates are eliminated in lex
// order; the basis is the lex-greedy set of words, identical for every engine
// that agrees on ranks.
template <class F>
class GradedQuotient {
public:
    using T = typename F::T;
    using Vec = SparseVec<T>;

    struct Degree {
        std::vector<Word> basis;            // lex increasing
        std::vector<Vec> reduce_candidate;  // index u*k + x: class of basis(n-1)[u].x over basis(n)
        std::vector<Vec> derivations;       // per basis element: column y*dim(n-1) + b holds d_y
    };

    GradedQuotient(const Cocycle& c, F f, QuotientOptions o = {})
        : cocycle_(c), space_(c, f), f_(std::move(f)), opts_(o), k_(c.size()) {
        Degree d0;
        d0.basis.push_back({});
        d0.derivations.push_back({});
        degrees_.push_back(std::move(d0));
    }

    const Cocycle& cocycle() const { return cocycle_; }
    const BraidedSpace<F>& space() const { return space_; }
    const F& field() const { return f_; }
    std::string engine_tag() const { return f_.tag(); }
    int rack_size() const { return k_; }
    int computed_degree() const { return static_cast<int>(degrees_.size()) - 1; }
    const QuotientOptions& options() const { return opts_; }
    void set_options(const QuotientOptions& o) { opts_ = o; }

    void compute_through(int n) {
        while (computed_degree() < n) compute_next();
    }
    // Stops early once a degree vanishes (then all higher ones do).
    void compute_until_zero(int n_max) {
        while (computed_degree() < n_max && dim(computed_degree()) > 0) compute_next();
    }
    bool vanishes_from(int n) const { return n <= computed_degree() && dim(n) == 0; }
    std::vector<size_t> dims() const {
        std::vector<size_t> out;
        for (const auto& d : degrees_) out.push_back(d.basis.size());
        return out;
    }
    size_t dim(int n) const { return degree(n).basis.size(); }
    const std::vector<Word>& basis(int n) const { return degree(n).basis; }
    const Degree& degree(int n) const {
        if (n < 0 || n > computed_degree())
            throw Error("DegreeNotComputed", "degree " + std::to_string(n) + " not computed");
        return degrees_[n];
    }
    int basis_index(const Word& w) const {
        const auto& b = basis(static_cast<int>(w.size()));
        auto it = std::lower_bound(b.begin(), b.end(), w);
        return (it != b.end() && *it == w) ? static_cast<int>(it - b.begin()) : -1;
    }
    // For restoring cached results.
    void restore(std::vector<Degree> ds) { degrees_ = std::move(ds); }

    // Class of e.v_a in B(n+1) for e in B(n).
    Vec right_mul_letter(int n, const Vec& e, int a) const {
        const Degree& d = degree(n + 1);
        std::map<int, T> acc;
        for (const auto& [u, c] : e) axpy(f_, acc, c, d.reduce_candidate[static_cast<size_t>(u) * k_ + a]);
        return to_sparse(acc);
    }
    Vec unit() const { return {{0, f_.one()}}; }
    Vec reduce_word(const Word& w) const {
        Vec e = unit();
        for (size_t i = 0; i < w.size() && !e.empty(); ++i) e = right_mul_letter(static_cast<int>(i), e, w[i]);
        return e;
    }
    Vec reduce(const TensorVector<T>& v) const {
        std::map<int, T> acc;
        for (const auto& [w, a] : v) axpy(f_, acc, a, reduce_word(w));
        return to_sparse(acc);
    }
    TensorVector<T> representative(int n, const Vec& e) const {
        TensorVector<T> out;
        const auto& b = basis(n);
        for (const auto& [i, a] : e) out.emplace(b[i], a);
        return out;
    }
    TensorVector<T> canonical(const TensorVector<T>& v) const {
        if (v.empty()) return {};
        return representative(static_cast<int>(v.begin()->first.size()), reduce(v));
    }
    // a in B(m), b in B(l): class of the product in B(m+l).
    Vec multiply(int m, const Vec& a, int l, const Vec& b) const {
        std::map<int, T> acc;
        const auto& bb = basis(l);
        for (const auto& [j, c] : b) {
            Vec r = a;
            for (int i = 0; i < l && !r.empty(); ++i) r = right_mul_letter(m + i, r, bb[j][i]);
            axpy(f_, acc, c, r);
        }
        return to_sparse(acc);
    }
    // d_y: B(n) -> B(n-1).
    Vec derivation(int n, const Vec& e, int y) const {
        const Degree& d = degree(n);
        size_t dp = dim(n - 1);
        std::map<int, T> acc;
        for (const auto& [i, c] : e)
            for (const auto& [col, a] : d.derivations[i])
                if (static_cast<size_t>(col) / dp == static_cast<size_t>(y))
                    add_entry(f_, acc, static_cast<int>(col % dp), f_.mul(c, a));
        return to_sparse(acc);
    }
    // Delta_{1,n-1}(e) = sum_x v_x (x) out[x], out[x] in B(n-1).
    std::vector<Vec> left_coproduct(int n, const Vec& e) const {
        std::vector<std::map<int, T>> acc(k_);
        const auto& b = basis(n);
        for (const auto& [i, c] : e) {
            space_.delta_1_left_word(b[i], [&](const Word& u, const T& s) {
                Word tail(u.begin() + 1, u.end());
                axpy(f_, acc[u[0]], f_.mul(c, s), reduce_word(tail));
            });
        }
        std::vector<Vec> out;
        for (auto& m : acc) out.push_back(to_sparse(m));
        return out;
    }
    // w minus its canonical form: the kernel vector with pivot word w (empty for basis words).
    TensorVector<T> kernel_vector(const Word& w) const {
        TensorVector<T> out;
        if (basis_index(w) >= 0) return out;
        out.emplace(w, f_.one());
        for (const auto& [i, a] : reduce_word(w)) out.emplace(basis(static_cast<int>(w.size()))[i], f_.neg(a));
        return out;
    }
    // All k^n - dim B(n) kernel vectors; intended for small n.
    std::vector<TensorVector<T>> kernel_basis(int n) const {
        std::vector<TensorVector<T>> out;
        for_each_word(k_, n, [&](const Word& w) {
            auto kv = kernel_vector(w);
            if (!kv.empty()) out.push_back(std::move(kv));
        });
        return out;
    }

    template <class Fn>
    static void for_each_word(int k, int n, Fn&& fn) {
        Word w(n, 0);
        while (true) {
            fn(w);
            int i = n - 1;
            while (i >= 0 && w[i] == k - 1) w[i--] = 0;
            if (i < 0) return;
            ++w[i];
        }
    }

    Word block_key(const Word& w) const {
        Word key = inn_image(cocycle_.rack(), w);
        auto c = orbit_counts(cocycle_.rack(), w);
        key.insert(key.end(), c.begin(), c.end());
        return key;
    }
    size_t last_block_count() const { return last_blocks_; }

private:
    Cocycle cocycle_;
    BraidedSpace<F> space_;
    F f_;
    QuotientOptions opts_;
    int k_;
    std::vector<Degree> degrees_;
    size_t last_blocks_ = 0;

    Vec candidate_image(int n, size_t c) const {
        const Degree& p = degrees_[n - 1];
        size_t dp = p.basis.size();
        size_t u = c / k_;
        int x = static_cast<int>(c % k_);
        std::map<int, T> acc;
        acc.emplace(static_cast<int>(x * dp + u), f_.one());
        if (n >= 2) {
            const Degree& pp = degrees_[n - 2];
            size_t dpp = pp.basis.size();
            for (const auto& [col, a] : p.derivations[u]) {
                int y = static_cast<int>(col / dpp);
                size_t b = col % dpp;
                int z = space_.op(y, x);
                T s = f_.mul(a, space_.q(y, x));
                const Vec& r = p.reduce_candidate[b * k_ + z];
                for (const auto& [j, v] : r) add_entry(f_, acc, static_cast<int>(y * dp + j), f_.mul(s, v));
            }
        }
        return to_sparse(acc);
    }

    void compute_next() {
        int n = computed_degree() + 1;
        const Degree& p = degrees_[n - 1];
        size_t ncand = p.basis.size() * k_;
        size_t budget = opts_.candidate_budget ? opts_.candidate_budget : kExactCandidateBudget;
        if (ncand > budget)
            throw Error("BudgetExceeded", "degree " + std::to_string(n) + " needs " + std::to_string(ncand) +
                                              " candidate rows (budget " + std::to_string(budget) + ")");
        std::vector<std::vector<size_t>> blocks;
        if (opts_.blocked) {
            std::map<Word, size_t> ids;
            for (size_t c = 0; c < ncand; ++c) {
                Word w = p.basis[c / k_];
                w.push_back(static_cast<int>(c % k_));
                auto [it, fresh] = ids.emplace(block_key(w), blocks.size());
                if (fresh) blocks.emplace_back();
                blocks[it->second].push_back(c);
            }
        } else {
            blocks.emplace_back();
            for (size_t c = 0; c < ncand; ++c) blocks[0].push_back(c);
        }
        last_blocks_ = blocks.size();

        std::vector<char> is_basis(ncand, 0);
        std::vector<Vec> relation(ncand), image(ncand);
        auto run_block = [&](const std::vector<size_t>& blk) {
            Eliminator<F> el(f_, true);
            for (size_t c : blk) {
                Vec img = candidate_image(n, c);
                Vec rel;
                if (el.add(img, static_cast<int>(c), &rel)) {
                    is_basis[c] = 1;
                    image[c] = std::move(img);
                } else {
                    relation[c] = std::move(rel);
                }
            }
        };
        long nb = static_cast<long>(blocks.size());
        if (opts_.parallel) {
#pragma omp parallel for schedule(dynamic)
            for (long b = 0; b < nb; ++b) run_block(blocks[b]);
        } else {
            for (long b = 0; b < nb; ++b) run_block(blocks[b]);
        }

        Degree d;
        std::vector<int> index(ncand, -1);
        for (size_t c = 0; c < ncand; ++c) {
            if (!is_basis[c]) continue;
            index[c] = static_cast<int>(d.basis.size());
            Word w = p.basis[c / k_];
            w.push_back(static_cast<int>(c % k_));
            d.basis.push_back(std::move(w));
            d.derivations.push_back(std::move(image[c]));
        }
        d.reduce_candidate.resize(ncand);
        for (size_t c = 0; c < ncand; ++c) {
            if (is_basis[c]) {
                d.reduce_candidate[c] = {{index[c], f_.one()}};
            } else {
                for (const auto& [j, a] : relation[c]) d.reduce_candidate[c].emplace_back(index[j], a);
            }
        }
        degrees_.push_back(std::move(d));
    }
};

// Independent route: rank of S_n built from Matsumoto lifts over all k^n words,
// one Hurwitz orbit at a time. Restricting to words over `letters` (when non-empty)
// gives the dimension of the image of W^{(x)n}, W = span of those letters.
template <class F>
size_t symmetrizer_rank(const BraidedSpace<F>& sp, const Rack& r, int n, const std::vector<int>& letters = {}) {
    using T = typename F::T;
    int k = sp.size();
    std::vector<int> alphabet = letters;
    if (alphabet.empty())
        for (int x = 0; x < k; ++x) alphabet.push_back(x);
    std::map<Word, std::vector<Word>> by_orbit;
    std::set<Word> seen;
    Word w(n, 0);
    std::vector<int> digit(n, 0);
    while (true) {
        for (int i = 0; i < n; ++i) w[i] = alphabet[digit[i]];
        if (!seen.count(w)) {
            auto orb = n >= 2 ? hurwitz_orbit(r, w) : std::vector<Word>{w};
            for (const auto& u : orb) seen.insert(u);
            by_orbit[orb.front()];
        }
        int i = n - 1;
        while (i >= 0 && digit[i] == static_cast<int>(alphabet.size()) - 1) digit[i--] = 0;
        if (i < 0) break;
        ++digit[i];
        if (n == 0) break;
    }
    if (n == 0) return 1;
    // Columns indexed by position in the orbit's sorted word list.
    size_t total = 0;
    std::vector<char> allowed(k, 0);
    for (int x : alphabet) allowed[x] = 1;
    for (auto& [rep, unused] : by_orbit) {
        auto orb = hurwitz_orbit(r, rep);
        std::map<Word, int> col;
        for (size_t i = 0; i < orb.size(); ++i) col[orb[i]] = static_cast<int>(i);
        Eliminator<F> el(sp.field());
        int id = 0;
        for (const Word& u : orb) {
            bool ok = true;
            for (int x : u) ok = ok && allowed[x];
            if (!ok) continue;
            std::map<int, T> row;
            sp.symmetrizer_word(u, [&](const Word& v, const T& s) { add_entry(sp.field(), row, col.at(v), s); });
            el.add(to_sparse(row), id++);
        }
        total += el.rank();
    }
    return total;
}

enum class Engine { Exact, Modular, Both };
Engine parse_engine(const std::string& s);
std::string to_string(Engine e);

struct DimsReport {
    std::vector<size_t> dims;      // degrees 0..computed
    bool vanished = false;         // true when the last listed degree is 0 (finite dimension known)
    std::string engine;            // exact | modular(p) | both-agree
    bool accepted = false;         // exact, or two agreeing primes
    std::vector<uint64_t> primes;
    size_t total() const {
        size_t s = 0;
        for (size_t d : dims) s += d;
        return s;
    }
};

// Dims through max_degree (stopping once a degree vanishes). Modular runs use
// `primes` admissible primes and require two of them to agree. Error EngineMismatch.
DimsReport nichols_dims(const Cocycle& c, int max_degree, Engine e, int primes = 2, uint64_t seed = 0,
                        QuotientOptions o = {});

using ExactQuotient = GradedQuotient<ExactField>;
using ModQuotient = GradedQuotient<ModField>;
ExactQuotient make_exact_quotient(const Cocycle& c, QuotientOptions o = {});
ModQuotient make_mod_quotient(const Cocycle& c, int prime_index, uint64_t seed, QuotientOptions o = {});

// Subalgebra generated by homogeneous elements (degree, class) inside B(V).
template <class F>
struct SubalgebraSeries {
    std::vector<size_t> dims;                              // degree 0..N
    std::vector<std::vector<SparseVec<typename F::T>>> basis;  // echelon rows per degree
    size_t total() const {
        size_t s = 0;
        for (size_t d : dims) s += d;
        return s;
    }
    bool contains(const GradedQuotient<F>& q, int n, const SparseVec<typename F::T>& v) const {
        Eliminator<F> el(q.field());
        int id = 0;
        for (const auto& r : basis[n]) el.add(r, id++);
        return el.contains(v);
    }
};

template <class F>
struct Generator {
    int degree;
    SparseVec<typename F::T> element;
};

namespace detail {
template <class F, class Ensure>
SubalgebraSeries<F> grow_subalgebra(const GradedQuotient<F>& q, const std::vector<Generator<F>>& gens, int N,
                                    Ensure&& ensure, bool stop_at_zero) {
    SubalgebraSeries<F> s;
    int maxdeg = 1;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree);
    int zeros = 0;
    for (int n = 0; n <= N; ++n) {
        Eliminator<F> el(q.field());
        int id = 0;
        if (n == 0) {
            el.add(q.unit(), id++);
        } else {
            ensure(n);
            for (const auto& g : gens) {
                if (g.degree > n || g.degree <= 0 || g.element.empty()) continue;
                for (const auto& row : s.basis[n - g.degree]) {
                    auto prod = q.multiply(n - g.degree, row, g.degree, g.element);
                    if (!prod.empty()) el.add(prod, id++);
                }
            }
        }
        s.basis.push_back(el.rows());
        s.dims.push_back(el.rank());
        zeros = el.rank() == 0 ? zeros + 1 : 0;
        // maxdeg consecutive zero degrees: nothing can be generated any more.
        if (stop_at_zero && zeros >= maxdeg) break;
    }
    return s;
}
}  // namespace detail

// S(0) = k1, S(n) = sum over generators g of S(n - deg g).g, for n <= N.
// Needs degrees through N computed. Error DegreeNotComputed.
template <class F>
SubalgebraSeries<F> subalgebra_series(const GradedQuotient<F>& q, const std::vector<Generator<F>>& gens, int N) {
    return detail::grow_subalgebra(q, gens, N, [&](int n) { q.degree(n); }, false);
}

// Computes quotient degrees on demand and stops once the series has died out
// (or at n_max, where the result may be truncated).
template <class F>
SubalgebraSeries<F> subalgebra_until_zero(GradedQuotient<F>& q, const std::vector<Generator<F>>& gens, int n_max) {
    return detail::grow_subalgebra(q, gens, n_max, [&](int n) { q.compute_through(n); }, true);
}

// Generators v_x for x in letters.
template <class F>
std::vector<Generator<F>> letter_generators(const GradedQuotient<F>& q, const std::vector<int>& letters) {
    std::vector<Generator<F>> gens;
    for (int x : letters) gens.push_back({1, {{x, q.field().one()}}});
    return gens;
}

// Degree-n component of the ideal generated by ker S_2 (quadratic cover),
// as dims of T(V)/(ker S_2). Computed in V^{(x)n} by elimination per Hurwitz block.
template <class F>
std::vector<size_t> quadratic_cover_dims(const GradedQuotient<F>& q, int N, size_t word_budget = 300000);

struct GenerationReport {
    bool generated = false;
    size_t kernel_dim = 0;      // dim ker S_n
    size_t generated_dim = 0;   // dim of V(x)ker S_{n-1} + ker S_{n-1}(x)V
    size_t new_generators = 0;  // kernel_dim - generated_dim
};
// Is ker S_n spanned by V(x)ker S_{n-1} + ker S_{n-1}(x)V? Degree 2 is generated
// by convention, with all of ker S_2 reported as new generators.
template <class F>
GenerationReport generation_check(const GradedQuotient<F>& q, int n);

}  // namespace coideal

#include "coideal/nichols_impl.hpp"
