#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cftnvm/finite_field.hpp"

#include <set>
#include <vector>

using namespace cftnvm;

TEST_CASE("frozen small-field models") {
    Field f4(2, 2);
    CHECK(f4.q() == 4);
    CHECK(f4.modulus() == std::vector<unsigned long>{1, 1, 1});

    Field f7(7, 1);
    CHECK(f7.modulus() == std::vector<unsigned long>{0, 1});
    CHECK(f7.generator().index() == 3);

    Field f9(3, 2);
    CHECK(f9.modulus() == std::vector<unsigned long>{1, 0, 1});

    // Element order is ascending in the integer encoding, zero first.
    auto els = f4.elements();
    REQUIRE(els.size() == 4);
    CHECK(els[0].coeffs() == std::vector<unsigned long>{0, 0});
    CHECK(els[1].coeffs() == std::vector<unsigned long>{1, 0});
    CHECK(els[2].coeffs() == std::vector<unsigned long>{0, 1});
    CHECK(els[3].coeffs() == std::vector<unsigned long>{1, 1});

    // alpha * alpha = alpha + 1 under x^2 + x + 1.
    FieldElement alpha = f4.from_coeffs({0, 1});
    CHECK(alpha * alpha == f4.from_coeffs({1, 1}));
}

TEST_CASE("trace values and properties") {
    Field f4(2, 2);
    CHECK(f4.trace(f4.zero()) == 0);
    CHECK(f4.trace(f4.from_coeffs({0, 1})) == 1);

    Field f9(3, 2);
    CHECK(f9.trace(f9.from_coeffs({0, 1})) == 0);

    for (auto [p, m] : std::vector<std::pair<unsigned long, unsigned long>>{
             {2, 1}, {2, 2}, {2, 4}, {3, 2}, {5, 2}, {7, 2}, {2, 5}, {3, 3}}) {
        Field f(p, m);
        auto els = f.elements();
        // Linearity over the prime subfield, exhaustively.
        if (f.q() <= 49) {
            for (const auto& x : els) {
                for (const auto& y : els) {
                    CHECK(f.trace(x + y) == (f.trace(x) + f.trace(y)) % p);
                }
                for (unsigned long c = 0; c < p; ++c) {
                    FieldElement cx = f.from_integer(static_cast<long>(c)) * x;
                    CHECK(f.trace(cx) == c * f.trace(x) % p);
                }
            }
        }
        // Frobenius invariance.
        for (const auto& x : els) CHECK(f.trace(f.frobenius(x)) == f.trace(x));
        // Surjectivity with equal fibers of size p^(m-1).
        if (f.q() <= 64) {
            std::vector<unsigned long> fiber(p, 0);
            for (const auto& x : els) ++fiber[f.trace(x)];
            for (unsigned long c = 0; c < p; ++c) CHECK(fiber[c] == f.q() / p);
        }
    }
}

TEST_CASE("generator order and discrete logs") {
    for (auto [p, m] : std::vector<std::pair<unsigned long, unsigned long>>{
             {2, 1}, {3, 1}, {7, 1}, {13, 1}, {2, 3}, {3, 2}, {5, 2}, {2, 6}}) {
        Field f(p, m);
        FieldElement g = f.generator();
        CHECK(f.pow(g, f.q() - 1) == f.one());
        for (unsigned long k = 1; k < f.q() - 1; ++k) {
            CHECK(f.pow(g, k) != f.one());
        }
        for (unsigned long t = 0; t < f.q() - 1; ++t) {
            CHECK(f.discrete_log(f.pow(g, t)) == t);
        }
        CHECK(f.discrete_log(f.one()) == 0);
        if (f.q() > 2) CHECK(f.discrete_log(g) == 1);
    }
    Field f7(7, 1);
    CHECK(f7.discrete_log(f7.from_integer(6)) == 3);
}

TEST_CASE("arithmetic laws") {
    for (auto [p, m] : std::vector<std::pair<unsigned long, unsigned long>>{{5, 1}, {2, 3}, {3, 2}}) {
        Field f(p, m);
        auto els = f.elements();
        for (const auto& x : els) {
            CHECK(x + f.zero() == x);
            CHECK(x * f.one() == x);
            CHECK(x - x == f.zero());
            if (!x.is_zero()) {
                CHECK(x * x.inverse() == f.one());
            }
            for (const auto& y : els) {
                CHECK(x + y == y + x);
                CHECK(x * y == y * x);
                for (const auto& z : els) {
                    CHECK(x * (y + z) == x * y + x * z);
                }
            }
        }
    }
}

TEST_CASE("construction is deterministic and validated") {
    Field a(3, 3);
    Field b(3, 3);
    CHECK(a == b);
    CHECK(a.generator().index() == b.generator().index());

    CHECK_THROWS_AS(Field(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Field(6, 2), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(Field(2, 17), std::invalid_argument);  // 2^17 above the cap

    Field f5(5, 1);
    CHECK_THROWS_AS(f5.inv(f5.zero()), std::domain_error);
    CHECK_THROWS_AS(f5.discrete_log(f5.zero()), std::domain_error);
    Field f25(5, 2);
    CHECK_THROWS_AS(f5.add(f5.one(), f25.one()), std::invalid_argument);
}

TEST_CASE("prime power factoring") {
    CHECK(factor_prime_power(4) == std::pair<unsigned long, unsigned long>{2, 2});
    CHECK(factor_prime_power(7) == std::pair<unsigned long, unsigned long>{7, 1});
    CHECK(factor_prime_power(64) == std::pair<unsigned long, unsigned long>{2, 6});
    CHECK(factor_prime_power(97) == std::pair<unsigned long, unsigned long>{97, 1});
    CHECK_THROWS_AS(factor_prime_power(12), std::invalid_argument);
    CHECK_THROWS_AS(factor_prime_power(1), std::invalid_argument);
    Field f = make_field_for_q(49);
    CHECK(f.p() == 7);
    CHECK(f.m() == 2);
}

TEST_CASE("moduli are irreducible by brute factor scan") {
    // Independent check: no monic factor of degree 1..m/2 divides the modulus.
    for (auto [p, m] : std::vector<std::pair<unsigned long, unsigned long>>{
             {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 6}}) {
        Field f(p, m);
        const auto& mod = f.modulus();
        // Evaluate the modulus at every scalar; m >= 2 so no roots allowed.
        for (unsigned long a = 0; a < p; ++a) {
            unsigned long value = 0, power = 1;
            for (unsigned long i = 0; i <= m; ++i) {
                value = (value + mod[i] * power) % p;
                power = power * a % p;
            }
            CHECK(value != 0);
        }
        // The subring generated by the class of x must have p^m elements,
        // which forces irreducibility of the modulus for these degrees.
        FieldElement alpha = f.from_coeffs({0, 1});
        std::set<std::uint32_t> seen;
        FieldElement acc = f.one();
        for (unsigned long t = 0; t < f.q() - 1; ++t) {
            seen.insert(acc.index());
            acc = acc * alpha;
        }
        CHECK(acc == f.one());
    }
}
