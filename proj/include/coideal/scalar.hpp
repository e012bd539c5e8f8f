#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace coideal {

// Dense univariate polynomial over Q, c[i] is the coefficient of x^i.
// The zero polynomial has no coefficients.
class QPoly {
public:
    std::vector<mpq_class> c;

    QPoly() = default;
    explicit QPoly(const mpq_class& a);
    explicit QPoly(std::vector<mpq_class> coeffs);
    static QPoly monomial(int e, const mpq_class& a = 1);

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const mpq_class& lead() const { return c.back(); }
    void trim();

    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator-() const;
    QPoly operator*(const QPoly& o) const;
    QPoly scaled(const mpq_class& a) const;
    bool operator==(const QPoly& o) const { return c == o.c; }
    bool operator!=(const QPoly& o) const { return c != o.c; }

    static void divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
    QPoly operator%(const QPoly& b) const;
    QPoly monic() const;
    mpq_class eval(const mpq_class& x) const;
};

QPoly gcd(QPoly a, QPoly b);
// Returns g = gcd(a, b) (monic) and s with s*a = g mod b.
QPoly ext_gcd_inverse(const QPoly& a, const QPoly& b, QPoly& g);
QPoly cyclotomic_poly(int m);
int euler_phi(int m);

// Ground field: Q(zeta_m) or Q(var). Domains are interned and live for the
// whole process, so scalars carry a plain pointer.
struct ScalarDomain {
    enum class Kind { Cyclotomic, RationalFunction };
    Kind kind = Kind::Cyclotomic;
    int m = 1;
    std::string var;
    QPoly phi;

    static const ScalarDomain* cyclotomic(int m);
    static const ScalarDomain* rational_function(const std::string& var);
    bool is_cyclotomic() const { return kind == Kind::Cyclotomic; }
    std::string name() const;
};

class Scalar {
public:
    Scalar() = default;  // zero of no particular domain
    Scalar(const ScalarDomain* d, long v);
    Scalar(const ScalarDomain* d, const mpq_class& v);
    static Scalar from_poly(const ScalarDomain* d, QPoly num, QPoly den = QPoly(mpq_class(1)));
    static Scalar generator(const ScalarDomain* d);  // zeta_m or the variable

    const ScalarDomain* domain() const { return dom_; }
    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar inv() const;
    Scalar pow(long e) const;
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Parseable text form, e.g. "-1/2+3*zeta6" or "(t^2-1)/(t+1)".
    std::string str() const;

private:
    const ScalarDomain* dom_ = nullptr;
    QPoly num_;
    QPoly den_{mpq_class(1)};  // always 1 for cyclotomic domains
    void normalize();
    static const ScalarDomain* join(const Scalar& a, const Scalar& b);
};

// zeta_{mp}^k inside d. Needs mp | m, or mp | 2m for odd m (since -1 is there).
Scalar root_of_unity(const ScalarDomain* d, int mp, long k);
// Multiplicative order of a root of unity, 0 if s is not one (checked up to bound).
int root_order(const Scalar& s, int bound = 1000);

// Image of a domain in F_p.
class ModularContext {
public:
    ModularContext() = default;
    // image is the chosen root of Phi_m (cyclotomic) or the evaluation point.
    ModularContext(uint64_t p, const ScalarDomain* d, uint64_t image);
    // index-th admissible prime above 2^30 for d; deterministic in seed.
    static ModularContext choose(const ScalarDomain* d, int index, uint64_t seed);

    uint64_t p() const { return p_; }
    uint64_t image() const { return image_; }
    const ScalarDomain* domain() const { return dom_; }

    uint64_t add(uint64_t a, uint64_t b) const { uint64_t s = a + b; return s >= p_ ? s - p_ : s; }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const;
    uint64_t inv(uint64_t a) const;
    uint64_t from_rational(const mpq_class& q) const;  // throws BadPrime
    uint64_t to_modular(const Scalar& s) const;         // throws BadPrime

private:
    uint64_t p_ = 0;
    uint64_t image_ = 0;
    const ScalarDomain* dom_ = nullptr;
};

uint64_t to_modular(const Scalar& s, const ModularContext& ctx);
bool is_prime_u64(uint64_t n);
uint64_t primitive_root(uint64_t p);

// Expression parsing. Grammar: + - * / ^ (integer exponents, may be negative),
// parentheses, integers, zeta<m> or zeta_<m>, and at most one free variable.
const ScalarDomain* infer_domain(const std::vector<std::string>& exprs);
Scalar parse_scalar(const std::string& expr, const ScalarDomain* d);

}  // namespace coideal
