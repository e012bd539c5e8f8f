#pragma once

#include <map>
#include <unordered_map>
#include <utility>
#include <vector>

namespace coideal {

// Sorted by index, no zero entries.
template <class T>
using SparseVec = std::vector<std::pair<int, T>>;

template <class F>
void axpy(const F& f, std::map<int, typename F::T>& acc, const typename F::T& a, const SparseVec<typename F::T>& v) {
    for (const auto& [i, x] : v) {
        auto it = acc.find(i);
        if (it == acc.end()) {
            acc.emplace(i, f.mul(a, x));
        } else {
            f.fma(it->second, a, x);
            if (F::is_zero(it->second)) acc.erase(it);
        }
    }
}

template <class F>
void add_entry(const F& f, std::map<int, typename F::T>& acc, int i, const typename F::T& a) {
    if (F::is_zero(a)) return;
    auto it = acc.find(i);
    if (it == acc.end()) {
        acc.emplace(i, a);
    } else {
        it->second = f.add(it->second, a);
        if (F::is_zero(it->second)) acc.erase(it);
    }
}

template <class T>
SparseVec<T> to_sparse(const std::map<int, T>& m) {
    return SparseVec<T>(m.begin(), m.end());
}

// Incremental Gaussian elimination. Pivot = leading (smallest) column of the
// reduced row, so every stored row is zero left of its pivot and a single
// forward sweep reduces a new row. Optionally tracks how each row is expressed
// through the original rows, which yields dependency relations and kernels.
template <class F>
class Eliminator {
public:
    using T = typename F::T;
    using Vec = SparseVec<T>;

    explicit Eliminator(F f, bool track = false) : f_(std::move(f)), track_(track) {}

    // Adds row with identifier id. Returns true when it is independent of the
    // rows added so far. When dependent and tracking, *relation receives
    // coefficients r_j with row = sum_j r_j * row_j over earlier independent ids.
    bool add(const Vec& row, int id, Vec* relation = nullptr) {
        std::map<int, T> v(row.begin(), row.end());
        std::map<int, T> expr;
        if (track_) expr.emplace(id, f_.one());
        sweep(v, track_ ? &expr : nullptr);
        if (v.empty()) {
            if (relation) {
                relation->clear();
                for (const auto& [j, a] : expr)
                    if (j != id) relation->emplace_back(j, f_.neg(a));
            }
            return false;
        }
        T lead_inv = f_.inv(v.begin()->second);
        Pivot p;
        p.col = v.begin()->first;
        for (const auto& [c, a] : v) p.row.emplace_back(c, f_.mul(a, lead_inv));
        for (const auto& [j, a] : expr) p.expr.emplace_back(j, f_.mul(a, lead_inv));
        pivot_of_.emplace(p.col, pivots_.size());
        pivots_.push_back(std::move(p));
        return true;
    }

    // Remainder of v after reduction; empty iff v lies in the span.
    Vec remainder(const Vec& row) const {
        std::map<int, T> v(row.begin(), row.end());
        sweep(v, nullptr);
        return to_sparse(v);
    }
    bool contains(const Vec& row) const { return remainder(row).empty(); }

    size_t rank() const { return pivots_.size(); }
    std::vector<Vec> rows() const {
        std::vector<Vec> out;
        for (const auto& p : pivots_) out.push_back(p.row);
        return out;
    }
    const F& field() const { return f_; }

private:
    struct Pivot {
        int col = 0;
        Vec row, expr;
    };
    F f_;
    bool track_;
    std::vector<Pivot> pivots_;
    std::unordered_map<int, size_t> pivot_of_;

    void sweep(std::map<int, T>& v, std::map<int, T>* expr) const {
        auto it = v.begin();
        while (it != v.end()) {
            auto pit = pivot_of_.find(it->first);
            if (pit == pivot_of_.end()) {
                ++it;
                continue;
            }
            int col = it->first;
            const Pivot& p = pivots_[pit->second];
            T a = f_.neg(it->second);
            axpy(f_, v, a, p.row);
            if (expr) axpy(f_, *expr, a, p.expr);
            it = v.upper_bound(col);
        }
    }
};

}  // namespace coideal
