#pragma once

// Template bodies for nichols.hpp.

namespace coideal {

template <class F>
std::vector<size_t> quadratic_cover_dims(const GradedQuotient<F>& q, int N, size_t budget) {
    using T = typename F::T;
    using Vec = SparseVec<T>;
    const F& f = q.field();
    int k = q.rack_size();
    std::vector<size_t> dims{1};
    if (N == 0) return dims;
    dims.push_back(static_cast<size_t>(k));
    if (N == 1) return dims;
    q.degree(2);  // throws DegreeNotComputed
    std::vector<TensorVector<T>> rel = q.kernel_basis(2);

    // A(n) = (A(n-1) (x) V) / image of A(n-2) (x) ker S_2. Columns are
    // candidates u*k + y, reversed so the pivot of a relation is its lex-last
    // word and the surviving basis is lex-early, as in the Nichols engine.
    struct ADeg {
        size_t dim = 0;
        std::vector<Vec> reduce_candidate;  // over A(n) basis
    };
    std::vector<ADeg> a(2);
    a[0].dim = 1;
    a[1].dim = static_cast<size_t>(k);
    for (int x = 0; x < k; ++x) a[1].reduce_candidate.push_back({{x, f.one()}});
    for (int n = 2; n <= N; ++n) {
        const ADeg& p = a[n - 1];
        const ADeg& pp = a[n - 2];
        size_t ncand = p.dim * k;
        if (ncand > budget) throw Error("BudgetExceeded", "quadratic cover degree " + std::to_string(n));
        auto rev = [&](size_t c) { return static_cast<int>(ncand - 1 - c); };
        Eliminator<F> el(f);
        int id = 0;
        for (size_t b = 0; b < pp.dim; ++b)
            for (const auto& kv : rel) {
                std::map<int, T> row;
                for (const auto& [w, c] : kv) {
                    Vec head = n == 2 ? Vec{{w[0], f.one()}} : p.reduce_candidate[b * k + w[0]];
                    for (const auto& [u, h] : head) add_entry(f, row, rev(static_cast<size_t>(u) * k + w[1]), f.mul(c, h));
                }
                if (!row.empty()) el.add(to_sparse(row), id++);
            }
        std::vector<char> pivot(ncand, 0);
        for (const auto& r : el.rows()) pivot[ncand - 1 - r.front().first] = 1;
        std::vector<int> index(ncand, -1);
        ADeg d;
        for (size_t c = 0; c < ncand; ++c)
            if (!pivot[c]) index[c] = static_cast<int>(d.dim++);
        d.reduce_candidate.resize(ncand);
        for (size_t c = 0; c < ncand; ++c) {
            if (!pivot[c]) {
                d.reduce_candidate[c] = {{index[c], f.one()}};
                continue;
            }
            std::map<int, T> m;
            for (const auto& [rc, v] : el.remainder({{rev(c), f.one()}})) m.emplace(index[ncand - 1 - rc], v);
            d.reduce_candidate[c] = to_sparse(m);
        }
        dims.push_back(d.dim);
        a.push_back(std::move(d));
    }
    return dims;
}

template <class F>
GenerationReport generation_check(const GradedQuotient<F>& q, int n) {
    using T = typename F::T;
    const F& f = q.field();
    int k = q.rack_size();
    GenerationReport r;
    size_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<size_t>(k);
    r.kernel_dim = total - q.dim(n);
    if (n <= 2) {
        r.generated = true;
        r.generated_dim = 0;
        r.new_generators = r.kernel_dim;
        return r;
    }
    // Modulo V (x) ker S_{n-1}, V^{(x)n} is V (x) B(n-1); count what ker S_{n-1} (x) V adds there.
    size_t dp = q.dim(n - 1);
    Eliminator<F> el(f);
    int id = 0;
    GradedQuotient<F>::for_each_word(k, n - 1, [&](const Word& w) {
        auto kv = q.kernel_vector(w);
        if (kv.empty()) return;
        for (int x = 0; x < k; ++x) {
            std::map<int, T> row;
            for (const auto& [u, c] : kv) {
                Word tail(u.begin() + 1, u.end());
                tail.push_back(x);
                for (const auto& [j, v] : q.reduce_word(tail))
                    add_entry(f, row, static_cast<int>(u[0] * dp + j), f.mul(c, v));
            }
            if (!row.empty()) el.add(to_sparse(row), id++);
        }
    });
    size_t quotient = static_cast<size_t>(k) * dp - el.rank();
    r.generated_dim = total - quotient;
    r.new_generators = r.kernel_dim - r.generated_dim;
    r.generated = r.new_generators == 0;
    return r;
}

}  // namespace coideal
