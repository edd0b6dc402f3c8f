#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revring/integer.hpp"
#include "revring/rational.hpp"

using namespace revring;

TEST_CASE("integer helpers") {
    CHECK(int_gcd(Int(240), Int(46)) == 2);
    CHECK(int_lcm(Int(4), Int(6)) == 12);
    CHECK(int_mod(Int(-7), Int(5)) == 3);
    CHECK(int_radical(Int(12)) == 6);
    CHECK(int_radical(Int(1)) == 1);
    CHECK(int_omega(Int(12)) == 3);
    CHECK(int_omega(Int(-1)) == 0);
    CHECK(int_is_prime(Int(5)));
    CHECK(!int_is_prime(Int(1)));
    CHECK(!int_is_prime(Int(12)));

    auto f = int_factor(Int(12));
    REQUIRE(f.size() == 3);
    CHECK(f[0] == 2);
    CHECK(f[1] == 2);
    CHECK(f[2] == 3);

    auto d = int_divisors(Int(12));
    CHECK(d == std::vector<Int>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("extended gcd, frozen Euclid trace") {
    auto e = int_extended_gcd(Int(240), Int(46));
    CHECK(e.d == 2);
    CHECK(e.x == -9);
    CHECK(e.y == 47);
    CHECK(Int(240) * e.x + Int(46) * e.y == e.d);

    auto z = int_extended_gcd(Int(-5), Int(0));
    CHECK(z.d == 5);
    CHECK(z.x == -1);
    CHECK(z.y == 0);
}

TEST_CASE("extended gcd identity on a sample grid") {
    for (long a = -40; a <= 40; a += 7)
        for (long b = -35; b <= 35; b += 3) {
            if (a == 0 && b == 0) continue;
            auto e = int_extended_gcd(Int(a), Int(b));
            CHECK(e.d == int_gcd(Int(a), Int(b)));
            CHECK(Int(a) * e.x + Int(b) * e.y == e.d);
        }
}

TEST_CASE("rationals stay reduced with positive denominators") {
    Rat q(Int(6), Int(4));
    CHECK(q.num() == 3);
    CHECK(q.den() == 2);
    CHECK(q.str() == "3/2");

    Rat r(Int(2), Int(-8));
    CHECK(r.num() == -1);
    CHECK(r.den() == 4);

    CHECK((Rat(1, 2) + Rat(1, 2)) == Rat(1));
    CHECK((Rat(1, 3) - Rat(1, 2)) == Rat(-1, 6));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK((Rat(1, 2) / Rat(3, 2)) == Rat(1, 3));
    CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
    CHECK(Rat(5).pow(0) == Rat(1));
    CHECK(Rat(0).str() == "0");

    CHECK_THROWS_AS(Rat(Int(1), Int(0)), ZeroDenominator);
    CHECK_THROWS_AS(Rat(1) / Rat(0), ZeroDenominator);
}

TEST_CASE("rational arithmetic exceeds machine width exactly") {
    Rat big(Int("100000000000000000000000000003"), Int(7));
    CHECK(big.den() == 7);  // numerator is 1 mod 7
    Rat sum = big + big;
    CHECK(sum.num() == Int("200000000000000000000000000006"));
    CHECK(sum.den() == 7);
}
