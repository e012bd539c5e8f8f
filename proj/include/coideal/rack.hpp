#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace coideal {

using Perm = std::vector<int>;

Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(i) = a[b[i]]
Perm perm_inverse(const Perm& a);
Perm perm_identity(int n);
int perm_order(const Perm& a);

// Finite rack on {0..k-1}; op(i, j) = i > j. Immutable once built.
class Rack {
public:
    Rack() = default;

    int size() const { return k_; }
    int op(int i, int j) const { return table_[static_cast<size_t>(i) * k_ + j]; }
    int inv(int i, int j) const { return inv_[static_cast<size_t>(i) * k_ + j]; }  // phi_i^{-1}(j)
    bool commute(int x, int y) const { return op(x, y) == y; }
    Perm phi(int i) const;
    std::vector<std::vector<int>> rows() const;

    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int i) const { return labels_[i]; }
    // Accepts a label (spaces ignored) or a decimal index; -1 when unknown.
    int index_of(const std::string& name) const;

    int num_orbits() const { return num_orbits_; }
    int orbit_of(int x) const { return orbit_[x]; }  // Inn(X)-orbit id, ordered by first element
    bool from_conjugacy() const { return conj_built_; }

    friend Rack make_rack(std::vector<std::vector<int>> table, std::vector<std::string> labels);
    friend Rack conjugacy_rack(const std::vector<Perm>& gens, const Perm& cls, size_t limit);

private:
    int k_ = 0;
    std::vector<int> table_, inv_;
    std::vector<std::string> labels_;
    std::vector<int> orbit_;
    int num_orbits_ = 0;
    bool conj_built_ = false;
};

// Validates both axioms. Errors: NonBijectiveColumn, NotSelfDistributive, InvalidTable.
Rack make_rack(std::vector<std::vector<int>> table, std::vector<std::string> labels = {});

struct RackPredicateReport {
    bool quandle = false;
    bool braided = false;
    bool conj_symmetric = false;
    bool indecomposable = false;
    bool injective_hint = false;
    int phi_order = 0;
};
RackPredicateReport predicates(const Rack& r);

Rack transpositions(int n);
Rack tetrahedron();
Rack cube();
Rack trivial_rack(int k);
Rack dihedral_quandle(int n);            // i > j = 2i - j mod n
Rack alexander_quandle(int n, int a);    // x > y = a*y + (1-a)*x mod n, gcd(a,n)=1
Rack permutation_rack(const Perm& s);    // x > y = s(y)
// Conjugation rack on the class of cls under <gens>. Error ClassTooLarge beyond limit.
Rack conjugacy_rack(const std::vector<Perm>& gens, const Perm& cls, size_t limit = 4096);
// Same rack with element x renamed to s[x].
Rack relabel(const Rack& r, const Perm& s);

struct Subrack {
    Rack rack;
    std::vector<int> embedding;  // subrack index -> ambient index, increasing
};
std::vector<int> closure_set(const Rack& r, const std::vector<int>& subset);
Subrack subrack_closure(const Rack& r, const std::vector<int>& subset);
// Induced rack on a subset that is already closed.
Subrack induced_subrack(const Rack& r, const std::vector<int>& closed);

// Bijections f with f(x > y) = f(x) > f(y); at most limit of them.
std::vector<Perm> rack_isomorphisms(const Rack& a, const Rack& b, size_t limit = SIZE_MAX);
std::optional<Perm> find_rack_isomorphism(const Rack& a, const Rack& b);
std::vector<Perm> rack_automorphisms(const Rack& r);

enum class StandardKind { Trivial, Transpositions, Tetrahedron, Cube, Other };
std::string to_string(StandardKind k);

struct StandardId {
    StandardKind kind = StandardKind::Other;
    int n = 0;     // for Transpositions
    Perm iso;      // iso[x] = index of x in the model rack (empty for Trivial/Other)
    std::string note;
};
constexpr int kIdentifyBound = 28;
StandardId identify_standard(const Rack& r);

}  // namespace coideal
