#include <random>

#include "doctest.h"
#include "geodetic/ideals.hpp"

using namespace geodetic;

TEST_CASE("quadratic integers enforce the half-coordinate parity") {
    CHECK_THROWS_AS(QuadInt(1, 0, 5), DomainError);  // 1/2 not integral
    CHECK_NOTHROW(QuadInt(2, 0, 5));                 // the rational integer 1
    CHECK_NOTHROW(QuadInt(1, 1, 3));                 // (1+sqrt(-3))/2
    CHECK_THROWS_AS(QuadInt(1, 2, 3), DomainError);
    CHECK_THROWS_AS(QuadInt(2, 2, 4), DomainError);  // d not square-free
    CHECK(QuadInt(2, 2, 5).norm() == 6);             // 1 + sqrt(-5)
    CHECK(QuadInt(1, 1, 3).norm() == 1);             // a unit of O_3
}

TEST_CASE("quadratic integer products multiply norms") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<long> pick(-10, 10);
    const long ds[] = {1, 2, 3, 5, 6, 7, 10, 15};
    for (int i = 0; i < 200; ++i) {
        Int d = ds[i % 8];
        bool half = mod_floor(d, Int(4)) == 3;
        auto draw = [&]() {
            Int x = 2 * pick(rng), y = 2 * pick(rng);
            if (half && pick(rng) % 2) {
                x += 1;
                y += 1;
            }
            return QuadInt(x, y, d);
        };
        QuadInt a = draw(), b = draw();
        CHECK((a * b).norm() == a.norm() * b.norm());
        CHECK((a * b).conj().x == (a.conj() * b.conj()).x);
        CHECK(a.pow(3).norm() == a.norm() * a.norm() * a.norm());
    }
}

TEST_CASE("prime splitting in O_5 matches the classical table") {
    // 2 and 5 ramify; 3, 7, 23 and 29 split; 11, 13, 17, 19 stay prime.
    CHECK(std::holds_alternative<Ramified>(split_type(2, 5)));
    CHECK(std::holds_alternative<Split>(split_type(3, 5)));
    CHECK(std::holds_alternative<Ramified>(split_type(5, 5)));
    CHECK(std::holds_alternative<Split>(split_type(7, 5)));
    for (long p : {11L, 13L, 17L, 19L}) CHECK(std::holds_alternative<Inert>(split_type(p, 5)));
    CHECK(std::holds_alternative<Split>(split_type(23, 5)));
    CHECK(std::holds_alternative<Split>(split_type(29, 5)));

    auto sp3 = std::get<Split>(split_type(3, 5));
    CHECK(sp3.first.u == 1);
    CHECK(sp3.second.u == 2);
    auto sp23 = std::get<Split>(split_type(23, 5));
    CHECK(sp23.first.u == 8);  // the ideal (23, 22 + 3 sqrt(-5)) carries root 15
    CHECK(sp23.second.u == 15);
}

TEST_CASE("splitting of 2 follows d mod 8") {
    CHECK(std::holds_alternative<Ramified>(split_type(2, 1)));
    CHECK(std::holds_alternative<Ramified>(split_type(2, 2)));
    CHECK(std::holds_alternative<Inert>(split_type(2, 3)));
    CHECK(std::holds_alternative<Split>(split_type(2, 7)));
    CHECK(std::holds_alternative<Inert>(split_type(2, 11)));
    CHECK(std::holds_alternative<Split>(split_type(2, 15)));
}

TEST_CASE("split_type agrees with the Kronecker symbol of the discriminant") {
    for (Int d = 1; d <= 50; ++d) {
        if (!is_squarefree(d)) continue;
        Int D = discriminant_of(d);
        for (long p : small_primes()) {
            if (p >= 1000) break;
            int sym = mpz_kronecker_si(D.get_mpz_t(), p);
            SplitType st = split_type(p, d);
            if (sym == 1) CHECK(std::holds_alternative<Split>(st));
            if (sym == 0) CHECK(std::holds_alternative<Ramified>(st));
            if (sym == -1) CHECK(std::holds_alternative<Inert>(st));
        }
    }
}

TEST_CASE("conjugation swaps the root tags") {
    auto sp = std::get<Split>(split_type(3, 5));
    CHECK(conjugate(sp.first) == sp.second);
    CHECK(conjugate(conjugate(sp.first)) == sp.first);
    auto ram = std::get<Ramified>(split_type(2, 5));
    CHECK(conjugate(ram.ideal) == ram.ideal);
    auto sp2 = std::get<Split>(split_type(2, 7));
    CHECK(conjugate(sp2.first).u == 3);
}

TEST_CASE("ideal class orders and canonical generators") {
    auto sp3 = std::get<Split>(split_type(3, 5));
    auto [s3, gen3] = ideal_class_order(sp3.first, 5);
    CHECK(s3 == 2);
    CHECK(prime_power_generator(sp3.first, 5, 2) == QuadInt(4, 2, 5));
    CHECK_THROWS_AS(prime_power_generator(sp3.first, 5, 1), DomainError);

    auto sp29 = std::get<Split>(split_type(29, 5));
    CHECK(ideal_class_order(sp29.first, 5).first == 1);
    CHECK(prime_power_generator(sp29.first, 5, 1) == QuadInt(6, 4, 5));

    auto sp5 = std::get<Split>(split_type(5, 1));
    CHECK(prime_power_generator(sp5.first, 1, 1) == QuadInt(2, 4, 1));

    auto ram = std::get<Ramified>(split_type(2, 5));
    CHECK_THROWS_AS(prime_power_generator(ram.ideal, 5, 1), DomainError);
}

TEST_CASE("factor_principal reproduces worked factorizations") {
    // 4 + 5 sqrt(-3), norm 91 = 7 * 13: one conjugate each
    auto f = factor_principal(QuadInt(8, 10, 3));
    REQUIRE(f.size() == 2);
    CHECK(f[0].first.p == 7);
    CHECK(f[0].first.u == 5);  // 8 = 5 * 10 (mod 7)
    CHECK(f[0].second == 1);
    CHECK(f[1].first.p == 13);
    CHECK(f[1].first.u == 6);
    CHECK(f[1].second == 1);

    // the rational integer 2 in O_5 ramifies: (2) = (2, 1+sqrt(-5))^2
    auto f2 = factor_principal(QuadInt(4, 0, 5));
    REQUIRE(f2.size() == 1);
    CHECK(f2[0].first.kind == PrimeIdeal::Kind::ramified);
    CHECK(f2[0].second == 2);

    // 3 + 2 sqrt(-5) generates a split prime of norm 29
    auto f29 = factor_principal(QuadInt(6, 4, 5));
    REQUIRE(f29.size() == 1);
    CHECK(f29[0].first.p == 29);
    CHECK(f29[0].second == 1);

    // units factor into nothing
    CHECK(factor_principal(QuadInt(2, 0, 5)).empty());
    CHECK_THROWS_AS(factor_principal(QuadInt(0, 0, 5)), DomainError);

    // rational integers work too: (3) = P P-bar, (11) stays prime in O_5
    auto f3 = factor_principal(QuadInt(6, 0, 5));
    REQUIRE(f3.size() == 2);
    CHECK(f3[0].first.u + f3[1].first.u == 3);
    CHECK(f3[0].second == 1);
    auto f11 = factor_principal(QuadInt(22, 0, 5));
    REQUIRE(f11.size() == 1);
    CHECK(f11[0].first.kind == PrimeIdeal::Kind::inert);
    CHECK(f11[0].second == 1);
}

TEST_CASE("valuations split across both conjugates above 2 when d = 7 mod 8") {
    // 1 + sqrt(-7) = 2w with w = (1+sqrt(-7))/2 of norm 2: ideal P1^2 P3
    QuadInt a(2, 2, 7);
    auto sp = std::get<Split>(split_type(2, 7));
    CHECK(ideal_valuation(a, sp.first) == 2);
    CHECK(ideal_valuation(a, sp.second) == 1);
    auto f = factor_principal(a);
    REQUIRE(f.size() == 2);
    CHECK(f[0].second + f[1].second == 3);
}

TEST_CASE("random primitive elements factor into split and ramified primes") {
    std::mt19937 rng(37);
    std::uniform_int_distribution<long> pick(1, 60);
    const long ds[] = {1, 2, 3, 5, 6, 7, 10};
    int checked = 0;
    for (int i = 0; checked < 1000; ++i) {
        Int d = ds[i % 7];
        Int a = pick(rng), b = pick(rng);
        if (gcd_int(a, b) != 1) continue;
        QuadInt alpha(2 * a, 2 * b, d);
        Int norm_back = 1;
        for (const auto& [ideal, e] : factor_principal(alpha)) {
            // the only inert prime that can appear is (2) for d = 3 (mod 8),
            // where it enters through the half-integer units
            if (ideal.kind == PrimeIdeal::Kind::inert) {
                CHECK(ideal.p == 2);
                CHECK(mod_floor(d, Int(8)) == 3);
                for (Int k = 0; k < e; ++k) norm_back *= 4;
            } else {
                CHECK(ideal_valuation(alpha, ideal) == e);
                for (Int k = 0; k < e; ++k) norm_back *= ideal.p;
            }
        }
        CHECK(norm_back == alpha.norm());
        ++checked;
    }
}
