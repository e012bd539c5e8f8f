#include "doctest.h"

#include <random>

#include "coideal/error.hpp"
#include "coideal/scalar.hpp"

using namespace coideal;

namespace {
Scalar random_scalar(const ScalarDomain* d, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4);
    QPoly n, dn(mpq_class(1));
    int deg = d->is_cyclotomic() ? std::max(0, static_cast<int>(d->phi.deg()) - 1) : 2;
    for (int i = 0; i <= deg; ++i) n.c.push_back(mpq_class(coef(rng), den(rng)));
    n.trim();
    if (!d->is_cyclotomic()) {
        dn = QPoly(std::vector<mpq_class>{mpq_class(den(rng)), mpq_class(coef(rng)), mpq_class(1)});
    }
    return Scalar::from_poly(d, n, dn);
}
}  // namespace

TEST_CASE("cyclotomic relations") {
    auto d6 = ScalarDomain::cyclotomic(6);
    Scalar t = Scalar::generator(d6);
    CHECK((t * t - t + Scalar(d6, 1)).is_zero());
    auto d3 = ScalarDomain::cyclotomic(3);
    Scalar u = Scalar::generator(d3);
    CHECK((u * u + u + Scalar(d3, 1)).is_zero());
    CHECK(cyclotomic_poly(12).deg() == 4);
    CHECK(cyclotomic_poly(1).c.size() == 2);
}

TEST_CASE("rational function cancellation") {
    auto dx = ScalarDomain::rational_function("x");
    Scalar x = Scalar::generator(dx);
    Scalar one(dx, 1);
    Scalar r = (x * x - one) / (x - one);
    CHECK(r == x + one);
    CHECK(r.den().deg() == 0);
    CHECK(parse_scalar("(x^2-1)/(x-1)", dx) == x + one);
}

TEST_CASE("roots of unity") {
    auto d4 = ScalarDomain::cyclotomic(4);
    CHECK(root_of_unity(d4, 4, 1).pow(2) == Scalar(d4, -1));
    auto d6 = ScalarDomain::cyclotomic(6);
    CHECK(root_of_unity(d6, 2, 1) == Scalar(d6, -1));
    CHECK(root_of_unity(d6, 2, 1) == Scalar::generator(d6).pow(3));
    CHECK_THROWS_AS(root_of_unity(d4, 3, 1), Error);
    // odd m also carries the 2m-th roots
    auto d3 = ScalarDomain::cyclotomic(3);
    CHECK(root_order(root_of_unity(d3, 6, 1)) == 6);
    for (int m = 1; m <= 24; ++m) {
        auto d = ScalarDomain::cyclotomic(m);
        CHECK(root_order(root_of_unity(d, m, 1)) == m);
        for (int k = 0; k < m; ++k)
            CHECK(root_order(root_of_unity(d, m, k)) == m / std::gcd(m, k));
    }
}

TEST_CASE("field axioms on random samples") {
    std::mt19937_64 rng(7);
    for (auto d : {ScalarDomain::cyclotomic(1), ScalarDomain::cyclotomic(3), ScalarDomain::cyclotomic(8),
                   ScalarDomain::cyclotomic(12), ScalarDomain::rational_function("t")}) {
        for (int it = 0; it < 30; ++it) {
            Scalar a = random_scalar(d, rng), b = random_scalar(d, rng), c = random_scalar(d, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a * b == b * a);
            if (!a.is_zero()) CHECK((a * a.inv()).is_one());
            if (!b.is_zero()) CHECK((a / b) * b == a);
        }
    }
}

TEST_CASE("domain errors") {
    auto d3 = ScalarDomain::cyclotomic(3), d4 = ScalarDomain::cyclotomic(4);
    CHECK_THROWS_AS(Scalar(d3, 1) + Scalar(d4, 1), Error);
    CHECK_THROWS_AS(Scalar(d3, 0).inv(), Error);
    try {
        Scalar(d3, 0).inv();
    } catch (const Error& e) {
        CHECK(e.kind() == "DivisionByZero");
    }
}

TEST_CASE("parser and domain inference") {
    auto d = infer_domain({"zeta3", "-zeta3^-1"});
    CHECK(d == ScalarDomain::cyclotomic(3));
    Scalar t = parse_scalar("zeta3", d);
    CHECK(parse_scalar("-zeta3^-1", d) == -t.inv());
    CHECK(parse_scalar("zeta_3^3", d).is_one());
    CHECK(infer_domain({"-1", "1/2"}) == ScalarDomain::cyclotomic(1));
    CHECK(infer_domain({"zeta4", "zeta6"}) == ScalarDomain::cyclotomic(12));
    CHECK(infer_domain({"t^2+1"}) == ScalarDomain::rational_function("t"));
    CHECK_THROWS_AS(infer_domain({"t", "zeta3"}), Error);
    CHECK_THROWS_AS(infer_domain({"t", "s"}), Error);
    CHECK_THROWS_AS(parse_scalar("1+", d), Error);
    CHECK_THROWS_AS(parse_scalar("1.5", d), Error);
    // str() output re-parses to the same value
    std::mt19937_64 rng(3);
    for (auto dd : {ScalarDomain::cyclotomic(12), ScalarDomain::rational_function("t")}) {
        for (int i = 0; i < 20; ++i) {
            Scalar a = random_scalar(dd, rng);
            CHECK(parse_scalar(a.str(), dd) == a);
        }
    }
}

TEST_CASE("modular images") {
    auto d1 = ScalarDomain::cyclotomic(1);
    auto d6 = ScalarDomain::cyclotomic(6);
    ModularContext c13(13, d6, 4);
    CHECK(c13.to_modular(Scalar(d6, -1)) == 12);
    CHECK(c13.to_modular(Scalar::generator(d6)) == 4);
    CHECK(ModularContext(13, d1, 1).to_modular(Scalar(d1, mpq_class(1, 2))) == 7);
    CHECK_THROWS_AS(ModularContext(13, d6, 3), Error);  // 3 has order 3 mod 13
    CHECK_THROWS_AS(ModularContext(13, d1, 1).to_modular(Scalar(d1, mpq_class(1, 13))), Error);

    std::mt19937_64 rng(11);
    for (auto d : {ScalarDomain::cyclotomic(5), ScalarDomain::cyclotomic(12), ScalarDomain::rational_function("t")}) {
        for (int idx = 0; idx < 2; ++idx) {
            auto ctx = ModularContext::choose(d, idx, 42);
            CHECK(ctx.p() > (1ull << 20));
            for (int i = 0; i < 20; ++i) {
                Scalar a = random_scalar(d, rng), b = random_scalar(d, rng);
                CHECK(ctx.to_modular(a + b) == ctx.add(ctx.to_modular(a), ctx.to_modular(b)));
                CHECK(ctx.to_modular(a * b) == ctx.mul(ctx.to_modular(a), ctx.to_modular(b)));
            }
        }
        CHECK(ModularContext::choose(d, 0, 42).p() != ModularContext::choose(d, 1, 42).p());
    }
}
