#pragma once

#include <map>
#include <utility>
#include <vector>

#include "coideal/cocycle.hpp"
#include "coideal/field.hpp"

namespace coideal {

using Word = std::vector<int>;
template <class T>
using TensorVector = std::map<Word, T>;  // no zero coefficients stored

// Reduced words for all of S_n in BFS order: entry p is s_{gen[p]} * entry parent[p],
// so tau(nu(p)) = c_gen o tau(nu(parent)). Entry 0 is the identity.
struct MatsumotoTable {
    int n = 0;
    std::vector<int> parent;
    std::vector<int> gen;  // 1-based generator index, 0 for the identity
    std::vector<Perm> perm;
};
const MatsumotoTable& matsumoto_table(int n);
constexpr int kMatsumotoThreshold = 6;

// (kX, c_q) with coefficients in F. Built from a validated cocycle or from
// raw tables (the latter only for the Yang-Baxter check on invalid input).
template <class F>
class BraidedSpace {
public:
    using T = typename F::T;

    BraidedSpace(const Cocycle& c, F f) : f_(std::move(f)), k_(c.size()) {
        const Rack& r = c.rack();
        for (int x = 0; x < k_; ++x)
            for (int y = 0; y < k_; ++y) {
                op_.push_back(r.op(x, y));
                inv_.push_back(r.inv(x, y));
                q_.push_back(f_.from(c.q(x, y)));
            }
        for (const T& v : q_) qinv_.push_back(f_.inv(v));
    }
    BraidedSpace(F f, int k, std::vector<int> op, std::vector<T> q)
        : f_(std::move(f)), k_(k), op_(std::move(op)), q_(std::move(q)) {}

    const F& field() const { return f_; }
    int size() const { return k_; }
    int op(int x, int y) const { return op_[x * k_ + y]; }
    int inv(int x, int y) const { return inv_[x * k_ + y]; }
    const T& q(int x, int y) const { return q_[x * k_ + y]; }
    const T& qinv(int x, int y) const { return qinv_[x * k_ + y]; }

    // c_i on a single word in place (i is 1-based); returns the scalar.
    T braid_word(int i, Word& w) const {
        int x = w[i - 1], y = w[i];
        w[i - 1] = op(x, y);
        w[i] = x;
        return q(x, y);
    }
    T braid_word_inverse(int i, Word& w) const {
        // c(x, y') = (x > y', x) with x > y' = a, x = b: y' = phi_b^{-1}(a)
        int a = w[i - 1], b = w[i];
        int y = inv(b, a);
        w[i - 1] = b;
        w[i] = y;
        return qinv(b, y);
    }

    TensorVector<T> apply_c(int i, const TensorVector<T>& v) const {
        TensorVector<T> out;
        for (const auto& [w, a] : v) {
            Word u = w;
            T s = braid_word(i, u);
            add_to(out, u, f_.mul(a, s));
        }
        return out;
    }
    TensorVector<T> apply_c_inverse(int i, const TensorVector<T>& v) const {
        TensorVector<T> out;
        for (const auto& [w, a] : v) {
            Word u = w;
            T s = braid_word_inverse(i, u);
            add_to(out, u, f_.mul(a, s));
        }
        return out;
    }

    // Delta_{1,n-1} = 1 + c1 + c1c2 + ... + c1...c_{n-1}; term j moves letter j+1 to the front.
    template <class Fn>
    void delta_1_left_word(const Word& w, Fn&& emit) const {
        int n = static_cast<int>(w.size());
        emit(w, f_.one());
        for (int j = 1; j < n; ++j) {
            Word u = w;
            T s = f_.one();
            for (int i = j; i >= 1; --i) s = f_.mul(s, braid_word(i, u));
            emit(u, s);
        }
    }
    // Delta_{n-1,1} = 1 + c_{n-1} + c_{n-1}c_{n-2} + ... ; term j moves letter j to the end.
    template <class Fn>
    void delta_1_right_word(const Word& w, Fn&& emit) const {
        int n = static_cast<int>(w.size());
        emit(w, f_.one());
        for (int j = n - 1; j >= 1; --j) {
            Word u = w;
            T s = f_.one();
            for (int i = j; i <= n - 1; ++i) s = f_.mul(s, braid_word(i, u));
            emit(u, s);
        }
    }
    template <class Fn>
    void symmetrizer_word(const Word& w, Fn&& emit) const {
        int n = static_cast<int>(w.size());
        if (n <= 1) {
            emit(w, f_.one());
            return;
        }
        const MatsumotoTable& mt = matsumoto_table(n);
        size_t N = mt.parent.size();
        std::vector<Word> words(N);
        std::vector<T> coef(N);
        words[0] = w;
        coef[0] = f_.one();
        emit(w, coef[0]);
        for (size_t p = 1; p < N; ++p) {
            words[p] = words[mt.parent[p]];
            coef[p] = f_.mul(coef[mt.parent[p]], braid_word(mt.gen[p], words[p]));
            emit(words[p], coef[p]);
        }
    }

    TensorVector<T> delta_1_left(const TensorVector<T>& v) const { return linear(v, [&](const Word& w, auto&& e) { delta_1_left_word(w, e); }); }
    TensorVector<T> delta_1_right(const TensorVector<T>& v) const { return linear(v, [&](const Word& w, auto&& e) { delta_1_right_word(w, e); }); }
    TensorVector<T> symmetrizer_matsumoto(const TensorVector<T>& v) const {
        return linear(v, [&](const Word& w, auto&& e) { symmetrizer_word(w, e); });
    }
    // S_n = (id (x) S_{n-1}) o Delta_{1,n-1}
    TensorVector<T> symmetrizer_recursive(const TensorVector<T>& v) const {
        if (v.empty() || v.begin()->first.size() <= 1) return v;
        TensorVector<T> d = delta_1_left(v);
        return apply_tail(d, 1, [&](const TensorVector<T>& tail) { return symmetrizer_recursive(tail); });
    }
    TensorVector<T> symmetrizer(const TensorVector<T>& v) const {
        if (v.empty()) return v;
        return v.begin()->first.size() <= kMatsumotoThreshold ? symmetrizer_matsumoto(v) : symmetrizer_recursive(v);
    }
    // Delta_{1^n} = (Delta_{1^{n-1}} (x) id) o Delta_{n-1,1}
    TensorVector<T> delta_1n(const TensorVector<T>& v) const {
        if (v.empty() || v.begin()->first.size() <= 1) return v;
        TensorVector<T> d = delta_1_right(v);
        return apply_head(d, [&](const TensorVector<T>& head) { return delta_1n(head); });
    }

    static void add_to(TensorVector<T>& out, const Word& w, const T& a, const F& f) {
        if (F::is_zero(a)) return;
        auto it = out.find(w);
        if (it == out.end()) {
            out.emplace(w, a);
            return;
        }
        it->second = f.add(it->second, a);
        if (F::is_zero(it->second)) out.erase(it);
    }
    void add_to(TensorVector<T>& out, const Word& w, const T& a) const { add_to(out, w, a, f_); }

private:
    F f_;
    int k_;
    std::vector<int> op_, inv_;
    std::vector<T> q_, qinv_;

    template <class Expand>
    TensorVector<T> linear(const TensorVector<T>& v, Expand&& ex) const {
        TensorVector<T> out;
        for (const auto& [w, a] : v)
            ex(w, [&](const Word& u, const T& s) { add_to(out, u, f_.mul(a, s)); });
        return out;
    }
    // Applies g to the last n-skip letters, grouped by the first skip letters.
    template <class G>
    TensorVector<T> apply_tail(const TensorVector<T>& v, int skip, G&& g) const {
        std::map<Word, TensorVector<T>> groups;
        for (const auto& [w, a] : v) groups[Word(w.begin(), w.begin() + skip)][Word(w.begin() + skip, w.end())] = a;
        TensorVector<T> out;
        for (const auto& [head, tail] : groups)
            for (const auto& [u, a] : g(tail)) {
                Word full = head;
                full.insert(full.end(), u.begin(), u.end());
                add_to(out, full, a);
            }
        return out;
    }
    template <class G>
    TensorVector<T> apply_head(const TensorVector<T>& v, G&& g) const {
        std::map<int, TensorVector<T>> groups;
        for (const auto& [w, a] : v) groups[w.back()][Word(w.begin(), w.end() - 1)] = a;
        TensorVector<T> out;
        for (const auto& [last, head] : groups)
            for (const auto& [u, a] : g(head)) {
                Word full = u;
                full.push_back(last);
                add_to(out, full, a);
            }
        return out;
    }
};

// c1c2c1 = c2c1c2 on all k^3 basis words; works on arbitrary (even invalid) tables.
bool yang_baxter_check(const std::vector<std::vector<int>>& op, const std::vector<std::vector<Scalar>>& q);
bool yang_baxter_check(const Cocycle& c);

}  // namespace coideal
