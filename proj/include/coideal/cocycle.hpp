#pragma once

#include <optional>
#include <string>
#include <vector>

#include "coideal/rack.hpp"
#include "coideal/scalar.hpp"

namespace coideal {

// Validated two-cocycle q on a rack; q(x, y) is the scalar in
// c(v_x (x) v_y) = q(x, y) v_{x>y} (x) v_x.
class Cocycle {
public:
    Cocycle() = default;

    const Rack& rack() const { return rack_; }
    const ScalarDomain* domain() const { return dom_; }
    int size() const { return rack_.size(); }
    const Scalar& q(int x, int y) const { return q_[static_cast<size_t>(x) * rack_.size() + y]; }
    const std::vector<Scalar>& table() const { return q_; }
    std::vector<std::vector<Scalar>> rows() const;

    friend Cocycle validate(const Rack& r, const std::vector<std::vector<Scalar>>& q, const ScalarDomain* d);

private:
    Rack rack_;
    const ScalarDomain* dom_ = nullptr;
    std::vector<Scalar> q_;
};

struct CocycleViolation {
    int x, y, z;
};
// First violated triple of the cocycle identity, if any. Does not need a valid table.
std::optional<CocycleViolation> find_cocycle_violation(const Rack& r, const std::vector<std::vector<Scalar>>& q);

// Errors: ZeroEntry(x,y), CocycleViolation(x,y,z), InvalidTable. d may be null
// (taken from the entries, Q when all are rational).
Cocycle validate(const Rack& r, const std::vector<std::vector<Scalar>>& q, const ScalarDomain* d = nullptr);

Cocycle constant(const Rack& r, const Scalar& s);
Cocycle chi(int n);
Cocycle model_T3(const Scalar& t);
Cocycle model_Tn(int n, const Scalar& t, const Scalar& lambda);
Cocycle model_tetra(const Scalar& t, const Scalar& lambda);
Cocycle model_cube(const Scalar& t, const Scalar& lambda);

// Braided vector space of the dual: x >' y = phi_x^{-1}(y), q'(x, y) = q(x, phi_x^{-1}(y)).
Cocycle dual_bvs(const Cocycle& q);

// Rescaling s (v_x -> s_x v_x) together with a rack map sigma. Transporting q1
// gives q2(sigma x, sigma y) = s_y / s_{x>y} * q1(x, y).
struct GaugeMap {
    std::vector<Scalar> s;
    Perm sigma;
};
Cocycle transport(const Cocycle& q1, const GaugeMap& g, const Rack& target);
Cocycle transport(const Cocycle& q1, const GaugeMap& g);  // target rack = relabel(q1.rack(), sigma)

// Tries the rack map sigma only.
std::optional<GaugeMap> solve_gauge(const Cocycle& q1, const Cocycle& q2, const Perm& sigma);
constexpr int kAutomorphismSearchBound = 12;
std::optional<GaugeMap> gauge_equivalent(const Cocycle& q1, const Cocycle& q2, bool allow_automorphism);
// q1 and q2 may live on different (isomorphic) racks; tries every rack isomorphism.
std::optional<GaugeMap> find_braided_isomorphism(const Cocycle& q1, const Cocycle& q2, size_t iso_limit = 50000);

// Quantities unchanged by rescaling: diagonal entries, q(a,b)q(b,a) over
// commuting pairs, q(a,b)q(c,a)q(b,c) over triangles a>b=c != b.
struct GaugeInvariants {
    std::vector<Scalar> diagonal;
    std::vector<std::pair<std::pair<int, int>, Scalar>> commuting;
    std::vector<std::pair<std::pair<int, int>, Scalar>> triangles;
};
GaugeInvariants gauge_invariants(const Cocycle& q);

}  // namespace coideal
