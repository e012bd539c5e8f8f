#pragma once

#include <cstdint>
#include <string>

#include "coideal/scalar.hpp"

namespace coideal {

// Two coefficient backends share one interface so every linear-algebra
// routine is written once: exact arithmetic in the scalar domain, or its
// image in F_p.

struct ExactField {
    using T = Scalar;
    const ScalarDomain* dom = nullptr;

    T zero() const { return Scalar(dom, 0); }
    T one() const { return Scalar(dom, 1); }
    T from(const Scalar& s) const { return s; }
    static bool is_zero(const T& a) { return a.is_zero(); }
    static bool is_one(const T& a) { return a.is_one(); }
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T neg(const T& a) const { return -a; }
    T inv(const T& a) const { return a.inv(); }
    // a += b*c
    void fma(T& a, const T& b, const T& c) const { a += b * c; }
    std::string tag() const { return "exact"; }
};

struct ModField {
    using T = uint64_t;
    ModularContext ctx;

    T zero() const { return 0; }
    T one() const { return 1; }
    T from(const Scalar& s) const { return ctx.to_modular(s); }
    static bool is_zero(T a) { return a == 0; }
    static bool is_one(T a) { return a == 1; }
    T add(T a, T b) const { return ctx.add(a, b); }
    T sub(T a, T b) const { return ctx.sub(a, b); }
    T mul(T a, T b) const { return ctx.mul(a, b); }
    T neg(T a) const { return a == 0 ? 0 : ctx.p() - a; }
    T inv(T a) const { return ctx.inv(a); }
    void fma(T& a, T b, T c) const { a = ctx.add(a, ctx.mul(b, c)); }
    std::string tag() const { return "modular(" + std::to_string(ctx.p()) + ")"; }
};

}  // namespace coideal
