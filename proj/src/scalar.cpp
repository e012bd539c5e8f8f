#include "coideal/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "coideal/error.hpp"

namespace coideal {

// ---------------------------------------------------------------- QPoly

QPoly::QPoly(const mpq_class& a) {
    if (a != 0) c.push_back(a);
}

QPoly::QPoly(std::vector<mpq_class> coeffs) : c(std::move(coeffs)) { trim(); }

QPoly QPoly::monomial(int e, const mpq_class& a) {
    QPoly p;
    if (a == 0) return p;
    p.c.assign(e + 1, mpq_class(0));
    p.c[e] = a;
    return p;
}

void QPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.c.resize(std::max(c.size(), o.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) {
        if (i < c.size()) r.c[i] += c[i];
        if (i < o.c.size()) r.c[i] += o.c[i];
    }
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    QPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, mpq_class(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const mpq_class& a) const {
    if (a == 0) return QPoly();
    QPoly r = *this;
    for (auto& x : r.c) x *= a;
    return r;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
    if (b.is_zero()) throw Error("DivisionByZero", "polynomial division by zero");
    r = a;
    q = QPoly();
    if (a.deg() < b.deg()) return;
    q.c.assign(a.deg() - b.deg() + 1, mpq_class(0));
    const mpq_class& lb = b.lead();
    while (!r.is_zero() && r.deg() >= b.deg()) {
        int shift = r.deg() - b.deg();
        mpq_class f = r.lead() / lb;
        q.c[shift] = f;
        for (int i = 0; i <= b.deg(); ++i) r.c[shift + i] -= f * b.c[i];
        r.trim();
    }
    q.trim();
}

QPoly QPoly::operator%(const QPoly& b) const {
    if (deg() < b.deg()) return *this;
    QPoly q, r;
    divmod(*this, b, q, r);
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / lead());
}

mpq_class QPoly::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly ext_gcd_inverse(const QPoly& a, const QPoly& b, QPoly& g) {
    QPoly r0 = a, r1 = b, s0(mpq_class(1)), s1;
    while (!r1.is_zero()) {
        QPoly q, r;
        QPoly::divmod(r0, r1, q, r);
        QPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.is_zero()) {
        g = r0;
        return s0;
    }
    mpq_class l = r0.lead();
    g = r0.scaled(1 / l);
    return s0.scaled(1 / l);
}

int euler_phi(int m) {
    int r = m;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p) continue;
        while (m % p == 0) m /= p;
        r -= r / p;
    }
    if (m > 1) r -= r / m;
    return r;
}

QPoly cyclotomic_poly(int m) {
    if (m < 1) throw Error("InvalidDomain", "cyclotomic order must be positive");
    static std::mutex mu;
    static std::map<int, QPoly> cache;
    {
        std::lock_guard<std::mutex> lk(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    QPoly p = QPoly::monomial(m) - QPoly(mpq_class(1));
    for (int d = 1; d < m; ++d) {
        if (m % d) continue;
        QPoly q, r;
        QPoly::divmod(p, cyclotomic_poly(d), q, r);
        p = q;
    }
    std::lock_guard<std::mutex> lk(mu);
    cache[m] = p;
    return p;
}

// ---------------------------------------------------------------- domains

namespace {
std::mutex g_domain_mu;
std::map<std::string, std::unique_ptr<ScalarDomain>>& domain_registry() {
    static std::map<std::string, std::unique_ptr<ScalarDomain>> reg;
    return reg;
}
}  // namespace

const ScalarDomain* ScalarDomain::cyclotomic(int m) {
    if (m < 1) throw Error("InvalidDomain", "cyclotomic order must be positive");
    QPoly phi = cyclotomic_poly(m);
    std::lock_guard<std::mutex> lk(g_domain_mu);
    auto& slot = domain_registry()["cyc:" + std::to_string(m)];
    if (!slot) {
        slot = std::make_unique<ScalarDomain>();
        slot->kind = Kind::Cyclotomic;
        slot->m = m;
        slot->phi = std::move(phi);
    }
    return slot.get();
}

const ScalarDomain* ScalarDomain::rational_function(const std::string& var) {
    if (var.empty()) throw Error("InvalidDomain", "empty variable name");
    std::lock_guard<std::mutex> lk(g_domain_mu);
    auto& slot = domain_registry()["rat:" + var];
    if (!slot) {
        slot = std::make_unique<ScalarDomain>();
        slot->kind = Kind::RationalFunction;
        slot->var = var;
    }
    return slot.get();
}

std::string ScalarDomain::name() const {
    if (is_cyclotomic()) return m == 1 ? "Q" : "Q(zeta" + std::to_string(m) + ")";
    return "Q(" + var + ")";
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const ScalarDomain* d, long v) : Scalar(d, mpq_class(v)) {}

Scalar::Scalar(const ScalarDomain* d, const mpq_class& v) : dom_(d), num_(v), den_(mpq_class(1)) {
    normalize();
}

Scalar Scalar::from_poly(const ScalarDomain* d, QPoly num, QPoly den) {
    if (den.is_zero()) throw Error("DivisionByZero", "zero denominator");
    for (auto& a : num.c) a.canonicalize();
    for (auto& a : den.c) a.canonicalize();
    num.trim();
    den.trim();
    if (den.is_zero()) throw Error("DivisionByZero", "zero denominator");
    Scalar s;
    s.dom_ = d;
    if (d && d->is_cyclotomic() && den.deg() > 0) {
        Scalar n = from_poly(d, std::move(num));
        Scalar dd = from_poly(d, std::move(den));
        return n / dd;
    }
    if (!d && (num.deg() > 0 || den.deg() > 0))
        throw Error("DomainMismatch", "non-constant polynomial without a domain");
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

Scalar Scalar::generator(const ScalarDomain* d) {
    if (!d) throw Error("DomainMismatch", "generator of an empty domain");
    return from_poly(d, QPoly::monomial(1));
}

void Scalar::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(mpq_class(1));
        return;
    }
    if (!dom_ || dom_->is_cyclotomic()) {
        // den_ is constant here
        if (den_.deg() == 0 && den_.c[0] != 1) {
            num_ = num_.scaled(1 / den_.c[0]);
            den_ = QPoly(mpq_class(1));
        }
        if (dom_) num_ = num_ % dom_->phi;
        return;
    }
    QPoly g = gcd(num_, den_);
    if (g.deg() > 0) {
        QPoly q, r;
        QPoly::divmod(num_, g, q, r);
        num_ = q;
        QPoly::divmod(den_, g, q, r);
        den_ = q;
    }
    mpq_class l = den_.lead();
    if (l != 1) {
        num_ = num_.scaled(1 / l);
        den_ = den_.scaled(1 / l);
    }
}

const ScalarDomain* Scalar::join(const Scalar& a, const Scalar& b) {
    if (!a.dom_) return b.dom_;
    if (!b.dom_ || a.dom_ == b.dom_) return a.dom_;
    throw Error("DomainMismatch", a.dom_->name() + " vs " + b.dom_->name());
}

bool Scalar::is_one() const { return num_.deg() == 0 && num_.c[0] == 1 && den_.deg() == 0; }

Scalar Scalar::operator+(const Scalar& o) const {
    const ScalarDomain* d = join(*this, o);
    Scalar r;
    r.dom_ = d;
    if (den_ == o.den_) {
        r.num_ = num_ + o.num_;
        r.den_ = den_;
    } else {
        r.num_ = num_ * o.den_ + o.num_ * den_;
        r.den_ = den_ * o.den_;
    }
    r.normalize();
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    r.num_ = -r.num_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    const ScalarDomain* d = join(*this, o);
    Scalar r;
    r.dom_ = d;
    if (is_zero() || o.is_zero()) return r;
    r.num_ = num_ * o.num_;
    r.den_ = den_ * o.den_;
    r.normalize();
    return r;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw Error("DivisionByZero", "inverse of zero");
    Scalar r;
    r.dom_ = dom_;
    if (!dom_ || dom_->is_cyclotomic()) {
        if (num_.deg() == 0) {
            r.num_ = QPoly(1 / num_.c[0]);
        } else {
            QPoly g;
            r.num_ = ext_gcd_inverse(num_, dom_->phi, g);
            if (g.deg() != 0) throw Error("DivisionByZero", "non-invertible cyclotomic element");
        }
        r.den_ = QPoly(mpq_class(1));
        r.normalize();
        return r;
    }
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
    join(*this, o);
    return *this * o.inv();
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar base = *this, acc(dom_, 1);
    while (e) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const {
    if (dom_ && o.dom_ && dom_ != o.dom_) return false;
    return num_ == o.num_ && den_ == o.den_;
}

namespace {
std::string poly_str(const QPoly& p, const std::string& sym) {
    if (p.is_zero()) return "0";
    std::string out;
    for (int k = 0; k <= p.deg(); ++k) {
        const mpq_class& a = p.c[k];
        if (a == 0) continue;
        std::string term;
        if (k == 0) {
            term = a.get_str();
        } else {
            std::string pw = k == 1 ? sym : sym + "^" + std::to_string(k);
            if (a == 1) term = pw;
            else if (a == -1) term = "-" + pw;
            else term = a.get_str() + "*" + pw;
        }
        if (!out.empty() && term[0] != '-') out += "+";
        out += term;
    }
    return out;
}
}  // namespace

std::string Scalar::str() const {
    if (!dom_) return poly_str(num_, "?");
    if (dom_->is_cyclotomic()) return poly_str(num_, "zeta" + std::to_string(dom_->m));
    if (den_.deg() == 0) return poly_str(num_, dom_->var);
    return "(" + poly_str(num_, dom_->var) + ")/(" + poly_str(den_, dom_->var) + ")";
}

Scalar root_of_unity(const ScalarDomain* d, int mp, long k) {
    if (mp < 1) throw Error("NotEmbeddable", "order must be positive");
    int m = (d && d->is_cyclotomic()) ? d->m : 1;
    long kk = ((k % mp) + mp) % mp;
    if (m % mp == 0) {
        if (!d || !d->is_cyclotomic()) return Scalar(d, 1);
        return Scalar::generator(d).pow(kk * (m / mp));
    }
    if (m % 2 == 1 && (2 * m) % mp == 0) {
        // For odd m, -zeta_m^((m+1)/2) is a primitive 2m-th root of unity.
        Scalar z2m = m == 1 ? Scalar(d, -1)
                            : -Scalar::generator(d).pow((m + 1) / 2);
        return z2m.pow(kk * ((2 * m) / mp));
    }
    throw Error("NotEmbeddable", "zeta" + std::to_string(mp) + " is not in " +
                                     (d ? d->name() : std::string("Q")));
}

int root_order(const Scalar& s, int bound) {
    if (s.is_zero()) return 0;
    Scalar x = s;
    for (int n = 1; n <= bound; ++n) {
        if (x.is_one()) return n;
        x = x * s;
    }
    return 0;
}

// ---------------------------------------------------------------- modular

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    auto mulm = [n](uint64_t a, uint64_t b) {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % n);
    };
    auto powm = [&](uint64_t a, uint64_t e) {
        uint64_t r = 1;
        a %= n;
        while (e) {
            if (e & 1) r = mulm(r, a);
            a = mulm(a, a);
            e >>= 1;
        }
        return r;
    };
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powm(a, d);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulm(x, x);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

namespace {
std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> f;
    for (uint64_t p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        f.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) f.push_back(n);
    return f;
}
}  // namespace

uint64_t ModularContext::pow(uint64_t a, uint64_t e) const {
    uint64_t r = 1 % p_;
    a %= p_;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

uint64_t ModularContext::inv(uint64_t a) const {
    if (a % p_ == 0) throw Error("BadPrime", "inverse of zero mod " + std::to_string(p_));
    return pow(a, p_ - 2);
}

uint64_t primitive_root(uint64_t p) {
    if (p == 2) return 1;
    auto fs = prime_factors(p - 1);
    ModularContext tmp(p, nullptr, 0);
    for (uint64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (uint64_t q : fs) {
            if (tmp.pow(g, (p - 1) / q) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) return g;
    }
    throw Error("BadPrime", "no primitive root");
}

ModularContext::ModularContext(uint64_t p, const ScalarDomain* d, uint64_t image)
    : p_(p), image_(image), dom_(d) {
    if (p < 3 || p >= (1ull << 62) || !is_prime_u64(p))
        throw Error("BadPrime", std::to_string(p) + " is not an odd prime below 2^62");
    if (d && d->is_cyclotomic()) {
        // The image has to be a root of Phi_m mod p.
        uint64_t acc = 0;
        for (size_t i = d->phi.c.size(); i-- > 0;) acc = add(mul(acc, image % p), from_rational(d->phi.c[i]));
        if (acc != 0)
            throw Error("BadPrime", std::to_string(image) + " is not a root of Phi_" +
                                        std::to_string(d->m) + " mod " + std::to_string(p));
    }
}

ModularContext ModularContext::choose(const ScalarDomain* d, int index, uint64_t seed) {
    uint64_t m = (d && d->is_cyclotomic()) ? d->m : 1;
    uint64_t step = std::lcm<uint64_t>(m, 2);
    uint64_t p = ((1ull << 30) / step + 1) * step + 1;
    int found = -1;
    for (;; p += step) {
        if (!is_prime_u64(p)) continue;
        if (++found == index) break;
    }
    if (!d) return ModularContext(p, d, 0);
    if (d->is_cyclotomic()) {
        uint64_t g = primitive_root(p);
        ModularContext tmp(p, nullptr, 0);
        return ModularContext(p, d, tmp.pow(g, (p - 1) / m));
    }
    std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(index));
    uint64_t pt = 2 + rng() % (p - 4);
    return ModularContext(p, d, pt);
}

uint64_t ModularContext::from_rational(const mpq_class& q) const {
    unsigned long n = mpz_fdiv_ui(q.get_num_mpz_t(), p_);
    unsigned long dd = mpz_fdiv_ui(q.get_den_mpz_t(), p_);
    if (dd == 0) throw Error("BadPrime", "denominator divisible by " + std::to_string(p_));
    return mul(n, inv(dd));
}

uint64_t ModularContext::to_modular(const Scalar& s) const {
    if (s.domain() && dom_ && s.domain() != dom_)
        throw Error("DomainMismatch", s.domain()->name() + " vs " + dom_->name());
    auto ev = [&](const QPoly& poly) {
        uint64_t acc = 0;
        for (size_t i = poly.c.size(); i-- > 0;) acc = add(mul(acc, image_), from_rational(poly.c[i]));
        return acc;
    };
    uint64_t n = ev(s.num());
    uint64_t dd = ev(s.den());
    if (dd == 0) throw Error("BadPrime", "denominator vanishes at the evaluation point");
    return mul(n, inv(dd));
}

uint64_t to_modular(const Scalar& s, const ModularContext& ctx) { return ctx.to_modular(s); }

// ---------------------------------------------------------------- parsing

namespace {

struct Token {
    enum Kind { Num, Ident, Op, End } kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Num, s.substr(i, j - i), i});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
            out.push_back({Token::Ident, s.substr(i, j - i), i});
            i = j;
        } else if (std::string("+-*/^()").find(ch) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, ch), i});
            ++i;
        } else {
            throw Error("ParseError", "unexpected '" + std::string(1, ch) + "' at position " +
                                          std::to_string(i) + " in \"" + s + "\"");
        }
    }
    out.push_back({Token::End, "", s.size()});
    return out;
}

// zeta<m> / zeta_<m> -> m, otherwise 0.
int zeta_order(const std::string& id) {
    if (id.rfind("zeta", 0) != 0) return 0;
    std::string rest = id.substr(4);
    if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
    if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit)) return 0;
    int m = std::stoi(rest);
    return m > 0 ? m : 0;
}

class Parser {
public:
    Parser(const std::string& src, const ScalarDomain* d) : src_(src), toks_(tokenize(src)), d_(d) {}

    Scalar parse() {
        Scalar v = expr();
        if (peek().kind != Token::End) fail("trailing input");
        return v;
    }

private:
    const std::string& src_;
    std::vector<Token> toks_;
    size_t i_ = 0;
    const ScalarDomain* d_;

    const Token& peek() const { return toks_[i_]; }
    bool is_op(const char* op) const { return peek().kind == Token::Op && peek().text == op; }
    [[noreturn]] void fail(const std::string& why) const {
        throw Error("ParseError", why + " at position " + std::to_string(peek().pos) + " in \"" + src_ + "\"");
    }

    Scalar expr() {
        Scalar v = term();
        while (is_op("+") || is_op("-")) {
            bool plus = peek().text == "+";
            ++i_;
            Scalar r = term();
            v = plus ? v + r : v - r;
        }
        return v;
    }
    Scalar term() {
        Scalar v = unary();
        while (is_op("*") || is_op("/")) {
            bool times = peek().text == "*";
            ++i_;
            Scalar r = unary();
            if (!times && r.is_zero()) fail("division by zero");
            v = times ? v * r : v / r;
        }
        return v;
    }
    Scalar unary() {
        if (is_op("-")) {
            ++i_;
            return -unary();
        }
        if (is_op("+")) {
            ++i_;
            return unary();
        }
        return power();
    }
    Scalar power() {
        Scalar base = atom();
        if (!is_op("^")) return base;
        ++i_;
        bool neg = false;
        if (is_op("-") || is_op("+")) {
            neg = peek().text == "-";
            ++i_;
        }
        if (peek().kind != Token::Num) fail("integer exponent expected");
        long e = std::stol(peek().text);
        ++i_;
        if (neg) e = -e;
        if (e < 0 && base.is_zero()) fail("zero to a negative power");
        return base.pow(e);
    }
    Scalar atom() {
        const Token& t = peek();
        if (t.kind == Token::Num) {
            ++i_;
            return Scalar(d_, mpq_class(mpz_class(t.text)));
        }
        if (t.kind == Token::Ident) {
            ++i_;
            if (int m = zeta_order(t.text)) return root_of_unity(d_, m, 1);
            if (d_ && !d_->is_cyclotomic() && d_->var == t.text) return Scalar::generator(d_);
            fail("unknown symbol '" + t.text + "'");
        }
        if (is_op("(")) {
            ++i_;
            Scalar v = expr();
            if (!is_op(")")) fail("')' expected");
            ++i_;
            return v;
        }
        fail("value expected");
    }
};

}  // namespace

const ScalarDomain* infer_domain(const std::vector<std::string>& exprs) {
    int m = 1;
    bool any_zeta = false;
    std::set<std::string> vars;
    for (const auto& e : exprs) {
        for (const auto& t : tokenize(e)) {
            if (t.kind != Token::Ident) continue;
            if (int z = zeta_order(t.text)) {
                m = std::lcm(m, z);
                any_zeta = true;
            } else {
                vars.insert(t.text);
            }
        }
    }
    if (vars.size() > 1) throw Error("ParseError", "more than one free variable");
    if (!vars.empty() && any_zeta)
        throw Error("ParseError", "mixing a free variable with roots of unity is not supported");
    if (!vars.empty()) return ScalarDomain::rational_function(*vars.begin());
    return ScalarDomain::cyclotomic(m);
}

Scalar parse_scalar(const std::string& expr, const ScalarDomain* d) {
    Parser p(expr, d);
    return p.parse();
}

}  // namespace coideal
