#include "coideal/braid.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "coideal/error.hpp"

namespace coideal {

const MatsumotoTable& matsumoto_table(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<MatsumotoTable>> cache;
    std::lock_guard<std::mutex> lk(mu);
    auto& slot = cache[n];
    if (slot) return *slot;
    if (n < 1 || n > 9) throw Error("InvalidArgument", "Matsumoto table only for 1 <= n <= 9");
    auto t = std::make_unique<MatsumotoTable>();
    t->n = n;
    std::map<Perm, int> seen;
    Perm id = perm_identity(n);
    t->parent.push_back(-1);
    t->gen.push_back(0);
    t->perm.push_back(id);
    seen[id] = 0;
    // BFS distance in the Cayley graph is the Coxeter length, so every
    // first discovery s_i * p extends a reduced word of p.
    for (size_t head = 0; head < t->perm.size(); ++head) {
        for (int i = 1; i < n; ++i) {
            Perm s = perm_identity(n);
            std::swap(s[i - 1], s[i]);
            Perm np = perm_compose(s, t->perm[head]);
            if (seen.count(np)) continue;
            seen[np] = static_cast<int>(t->perm.size());
            t->perm.push_back(np);
            t->parent.push_back(static_cast<int>(head));
            t->gen.push_back(i);
        }
    }
    slot = std::move(t);
    return *slot;
}

bool yang_baxter_check(const std::vector<std::vector<int>>& op, const std::vector<std::vector<Scalar>>& q) {
    int k = static_cast<int>(op.size());
    for (int x = 0; x < k; ++x)
        for (int y = 0; y < k; ++y)
            for (int z = 0; z < k; ++z) {
                // c1 c2 c1 (x,y,z)
                Scalar s1 = q[x][y];
                int a = op[x][y], b = x, c = z;
                s1 *= q[b][c];
                int b2 = op[b][c], c2 = b;
                s1 *= q[a][b2];
                Word l = {op[a][b2], a, c2};
                // c2 c1 c2 (x,y,z)
                Scalar s2 = q[y][z];
                int p = x, r = op[y][z], t = y;
                s2 *= q[p][r];
                int p2 = op[p][r], r2 = p;
                s2 *= q[r2][t];
                Word rr = {p2, op[r2][t], r2};
                if (l != rr || s1 != s2) return false;
            }
    return true;
}

bool yang_baxter_check(const Cocycle& c) {
    std::vector<std::vector<int>> op = c.rack().rows();
    return yang_baxter_check(op, c.rows());
}

}  // namespace coideal
