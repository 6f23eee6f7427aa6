#include <atomic>
#include <thread>

#include "doctest.h"
#include "geodetic/basis.hpp"

using namespace geodetic;

namespace {

// Reduced form attached to a split prime ideal, for the order cross-check.
QuadForm form_of_prime(const PrimeIdeal& P, const Int& d) {
    Int D = discriminant_of(d);
    Int B;
    if (P.p == 2) {
        B = 1;  // d = 7 (mod 8): B^2 = 1 = D (mod 8)
    } else if (mod_floor(d, Int(4)) == 3) {
        B = mod_floor(P.u, Int(2)) == 1 ? P.u : P.p - P.u;  // odd root lift
    } else {
        B = 2 * P.u;
    }
    Int C = div_exact(B * B - D, 4 * P.p);
    return reduce({P.p, B, C});
}

}  // namespace

TEST_CASE("the worked basis angle <3>_5") {
    BasisResult r = basis_angle(3, 5);
    REQUIRE(r.status == BasisStatus::defined);
    CHECK(r.angle->s == 2);
    CHECK(r.angle->a == 4);
    CHECK(r.angle->b == 2);
    // value = (1/2) arctan(sqrt(5)/2)
    RealInterval direct =
        RealInterval::from_int(5, 160).sqrt().scaled(Rat(1, 2)).atan().scaled(Rat(1, 2));
    RealInterval diff = r.angle->evaluate(128) - direct;
    CHECK(diff.contains(Rat(0)));
}

TEST_CASE("markers for inert and ramified primes") {
    CHECK(basis_angle(11, 5).status == BasisStatus::inert);
    CHECK(basis_angle(2, 5).status == BasisStatus::ramified);
    CHECK(basis_angle(2, 1).status == BasisStatus::ramified);
    CHECK(basis_angle(3, 3).status == BasisStatus::ramified);
    CHECK(basis_angle(2, 3).status == BasisStatus::inert);
}

TEST_CASE("Stormer conventions for d = 1 and d = 3") {
    BasisResult five = basis_angle(5, 1);
    REQUIRE(five.status == BasisStatus::defined);
    CHECK(five.angle->s == 1);
    CHECK(five.angle->a == 2);
    CHECK(five.angle->b == 4);  // arctan 2, from 1 + 2i
    RealInterval two_atan =
        RealInterval::from_rat(Rat(2), 160).atan() - five.angle->evaluate(128);
    CHECK(two_atan.contains(Rat(0)));

    BasisResult t13 = basis_angle(13, 1);
    REQUIRE(t13.status == BasisStatus::defined);
    CHECK(t13.angle->a == 6);
    CHECK(t13.angle->b == 4);  // arctan(2/3), b divisible by 4

    BasisResult p7 = basis_angle(7, 3);
    REQUIRE(p7.status == BasisStatus::defined);
    CHECK(p7.angle->a == 4);
    CHECK(p7.angle->b == 2);  // 2 + sqrt(-3), b even
}

TEST_CASE("the non-principal splitting of 23 in O_5") {
    // (23)^2 has the generator 22 + 3 sqrt(-5)
    BasisResult r = basis_angle(23, 5);
    REQUIRE(r.status == BasisStatus::defined);
    CHECK(r.angle->s == 2);
    CHECK(r.angle->a == 44);
    CHECK(r.angle->b == 6);
    CHECK(r.angle->positive_ideal().u == 15);
}

TEST_CASE("witness equation, Lagrange bound and conventions for p <= 100, d <= 30") {
    for (long p : small_primes()) {
        if (p > 100) break;
        for (Int d = 1; d <= 30; ++d) {
            if (!is_squarefree(d)) continue;
            BasisResult r = basis_angle(p, d);
            if (r.status != BasisStatus::defined) continue;
            const BasisAngle& ang = *r.angle;
            Int ps = 1;
            for (Int i = 0; i < ang.s; ++i) ps *= p;
            CHECK(ang.a * ang.a + d * ang.b * ang.b == 4 * ps);
            CHECK(ang.a > 0);
            CHECK(ang.b > 0);
            auto group = class_group(d);
            CHECK(mod_floor(group->c, ang.s) == 0);
            if (d == 1) CHECK(mod_floor(ang.b, Int(4)) == 0);
            if (d == 3) CHECK(mod_floor(ang.b, Int(2)) == 0);
            // s equals the composition order of the attached form class
            auto sp = std::get<Split>(split_type(p, d));
            CHECK(form_order(form_of_prime(sp.first, d), *group) == ang.s);
            // s = 1 exactly when the prime ideal itself is principal
            CHECK((ang.s == 1) == form_of_prime(sp.first, d).is_principal());
            // 0 < s * value < pi/2 at 128 bits
            RealInterval scaled = ang.evaluate(128).scaled(Rat(ang.s));
            CHECK(scaled.lo_rat() > Rat(0));
            CHECK((RealInterval::pi(128).scaled(Rat(1, 2)) - scaled).lo_rat() > Rat(0));
        }
    }
}

TEST_CASE("the canonical witness is the unique admissible representation") {
    for (long p : small_primes()) {
        if (p > 50) break;
        for (Int d = 1; d <= 20; ++d) {
            if (!is_squarefree(d)) continue;
            BasisResult r = basis_angle(p, d);
            if (r.status != BasisStatus::defined) continue;
            const BasisAngle& ang = *r.angle;
            Int ps = 1;
            for (Int i = 0; i < ang.s; ++i) ps *= p;
            int admissible = 0;
            for (Int b = 1; d * b * b <= 4 * ps; ++b) {
                Int rem = 4 * ps - d * b * b;
                if (!is_perfect_square(rem)) continue;
                Int a = isqrt(rem);
                if (a == 0) continue;
                bool parity = (mod_floor(d, Int(4)) == 3) ? mod_floor(a - b, Int(2)) == 0
                                                          : (a % 2 == 0 && b % 2 == 0);
                if (!parity) continue;
                if (d == 1 && mod_floor(b, Int(4)) != 0) continue;
                if (d == 3 && mod_floor(b, Int(2)) != 0) continue;
                // only witnesses of a full prime power count, not p^k scalings
                if (mod_floor(a, p) == 0 && mod_floor(b, p) == 0) continue;
                ++admissible;
                CHECK(a == ang.a);
                CHECK(b == ang.b);
            }
            CHECK(admissible == 1);
        }
    }
}

TEST_CASE("enclosure width honors the precision contract") {
    BasisResult r = basis_angle(3, 2);
    REQUIRE(r.status == BasisStatus::defined);
    for (mpfr_prec_t prec : {64, 128, 256}) {
        Rat bound(Int(1), Int(1) << static_cast<unsigned long>(prec - 1));
        CHECK(r.angle->evaluate(prec).width() <= bound);
    }
    CHECK_THROWS_AS(r.angle->evaluate(16), DomainError);
}

TEST_CASE("memoized caches tolerate concurrent readers and writers") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int w = 0; w < 8; ++w) {
        workers.emplace_back([&ok, w] {
            for (long i = 0; i < 40; ++i) {
                Int d = 1 + (w * 41 + i * 7) % 60;
                if (!is_squarefree(d)) continue;
                if (class_group(d)->D != discriminant_of(d)) ok = false;
                BasisResult r = basis_angle(small_primes()[(w + i) % 20], d);
                if (r.status == BasisStatus::defined && !(r.angle->a > 0)) ok = false;
            }
        });
    }
    for (auto& t : workers) t.join();
    CHECK(ok);
}

TEST_CASE("basis table cells") {
    auto cells = basis_table(13, 10);
    // primes 2,3,5,7,11,13 x square-free d in {1,2,3,5,6,7,10}
    CHECK(cells.size() == 6 * 7);
    auto find = [&](long p, long d) -> const BasisCell& {
        for (const auto& c : cells)
            if (c.p == p && c.d == d) return c;
        throw std::runtime_error("missing cell");
    };
    CHECK(find(3, 5).status == BasisStatus::defined);
    CHECK(find(3, 5).angle->s == 2);
    CHECK(find(2, 5).status == BasisStatus::ramified);
    CHECK(find(11, 5).status == BasisStatus::inert);
    CHECK(find(13, 1).angle->a == 6);
    CHECK(find(13, 1).angle->b == 4);
    CHECK(find(3, 2).radians == "0.9553166181");  // arctan(sqrt 2)
    CHECK_THROWS_AS(basis_table(1, 5), DomainError);
}
