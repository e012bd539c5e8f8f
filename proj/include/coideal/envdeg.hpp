#pragma once

#include <string>
#include <vector>

#include "coideal/braid.hpp"
#include "coideal/rack.hpp"

namespace coideal {

constexpr size_t kDefaultOrbitBudget = 200000;

// phi_{w1} o ... o phi_{wn}, the image of g_{w1}...g_{wn} in Inn(X).
Perm inn_image(const Rack& r, const Word& w);
// Letter count per Inn-orbit (the image in the abelianization of G_X).
std::vector<int> orbit_counts(const Rack& r, const Word& w);

struct DegreeClass {
    Word canonical;  // lex-min of the visited set; meaningful only when exhausted
    int length = 0;
    Perm inn_image;
    std::vector<int> orbit_counts;
    bool exhausted = false;
    size_t visited = 0;
};
// Closure of w under sigma_i and sigma_i^{-1} up to budget visited words.
DegreeClass degree_class(const Rack& r, const Word& w, size_t budget = kDefaultOrbitBudget);

enum class DegreeCompare { Equal, NotEqual, Undecided };
std::string to_string(DegreeCompare c);
struct DegreeComparison {
    DegreeCompare result = DegreeCompare::Undecided;
    std::string certificate;
};
// Never answers wrongly: NotEqual only from G_X-invariants, Equal only from a Hurwitz path.
DegreeComparison degrees_equal(const Rack& r, const Word& w1, const Word& w2, size_t budget = kDefaultOrbitBudget);

// Orbit under the positive Hurwitz moves, sorted. Error BudgetExceeded.
std::vector<Word> hurwitz_orbit(const Rack& r, const Word& t, size_t budget = kDefaultOrbitBudget);
Word hurwitz_sigma(const Rack& r, const Word& t, int i);  // 1-based

// x□y: x > y = y and x != y.
inline bool boxed(const Rack& r, int x, int y) { return x != y && r.op(x, y) == y; }

// Quadruple patterns along Hurwitz orbits of admissible quadruples; returns 'x','y','z','u' or 'o' (other).
char orbit_type(const Rack& r, const Word& q);
// a,b,c,d pairwise non-commuting except a□c, plus b□(c>d) and a□(b>d); rack braided.
bool quadruple_hypotheses(const Rack& r, const Word& abcd);
std::vector<Word> admissible_quadruples(const Rack& r);

// S^4 ∩ O(a,b,c,d) = ∅ ? Error HypothesesFail when the quadruple is not admissible.
bool disjoint_from_S4(const Rack& r, const Word& abcd, const std::vector<int>& S, size_t budget = kDefaultOrbitBudget);
bool disjoint_from_S4_unchecked(const Rack& r, const Word& abcd, const std::vector<int>& S,
                                size_t budget = kDefaultOrbitBudget);

}  // namespace coideal
