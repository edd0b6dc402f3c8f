#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revring/ideal.hpp"
#include "revring/poly_text.hpp"

using namespace revring;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

// brute-force radical generator of (m) in Z, scanning 0 < a <= m for a
// power landing in the ideal
Int radical_bruteforce(long m) {
    for (long a = 1; a <= m; ++a) {
        Int p = 1;
        for (int k = 1; k <= 16; ++k) {
            p *= a;
            if (p % m == 0) return Int(a);
        }
    }
    return Int(m);
}

} // namespace

TEST_CASE("contains: frozen examples") {
    FgIdeal i46 = FgIdeal::integers({Int(4), Int(6)});
    CHECK(contains(i46, Value(Int(2))));
    CHECK(!contains(i46, Value(Int(3))));
    CHECK(contains(i46, Value(Int(0))));

    FgIdeal mono = FgIdeal::monomial({P("x0^2"), P("x1")});
    CHECK(!contains(mono, Value(P("x0"))));
    CHECK(contains(mono, Value(P("x0^2*x1"))));
    CHECK(contains(mono, Value(P("x0^3 + x1"))));
    CHECK(!contains(mono, Value(P("x0^2 + x0"))));
    CHECK(contains(mono, Value(MultiPoly{})));

    FgIdeal zm = FgIdeal::modular(12, {Int(8)});  // (8) = (4) in Z/12
    CHECK(contains(zm, Value(Int(4))));
    CHECK(!contains(zm, Value(Int(2))));

    FgIdeal qx = FgIdeal::rational_poly({P("x0^2 - 1")});
    CHECK(contains(qx, Value(P("x0^4 - 1"))));
    CHECK(!contains(qx, Value(P("x0 - 1"))));
}

TEST_CASE("ideal_quotient: frozen examples") {
    FgIdeal i12 = FgIdeal::integers({Int(12)});
    CHECK(as_int(ideal_quotient(i12, Value(Int(4))).principal_value()) == 3);
    CHECK(as_int(ideal_quotient(i12, Value(Int(1))).principal_value()) == 12);

    FgIdeal qx = FgIdeal::rational_poly({P("x0^2 - 1")});
    CHECK(as_poly(ideal_quotient(qx, Value(P("x0 - 1"))).principal_value()) == P("x0 + 1"));

    // Z/n: (8 : 2) in Z/12 -> {r : 2r in (4)} = (2)
    FgIdeal zm = FgIdeal::modular(12, {Int(8)});
    CHECK(as_int(ideal_quotient(zm, Value(Int(2))).principal_value()) == 2);

    // monomial: ((x0*x1) : x0) = (x1)
    FgIdeal mono = FgIdeal::monomial({P("x0*x1")});
    FgIdeal quo = ideal_quotient(mono, Value(P("x0")));
    CHECK(contains(quo, Value(P("x1"))));
    CHECK(!contains(quo, Value(P("x0"))));
}

TEST_CASE("ideal quotient definition check in Z") {
    // (m : a) = { r : ra in (m) } verified pointwise
    for (long m = 1; m <= 40; ++m)
        for (long a = 1; a <= 40; ++a) {
            FgIdeal im = FgIdeal::integers({Int(m)});
            Int q = as_int(ideal_quotient(im, Value(Int(a))).principal_value());
            for (long r = -50; r <= 50; ++r)
                CHECK(((Int(r) % q == 0)) == ((Int(r) * a) % m == 0));
        }
}

TEST_CASE("radical: frozen examples and brute-force oracle") {
    CHECK(as_int(radical(FgIdeal::integers({Int(12)})).principal_value()) == 6);
    CHECK(as_int(radical(FgIdeal::integers({Int(7)})).principal_value()) == 7);

    FgIdeal mono = FgIdeal::monomial({P("x0^2*x1")});
    FgIdeal rad = radical(mono);
    CHECK(contains(rad, Value(P("x0*x1"))));
    CHECK(!contains(rad, Value(P("x0"))));

    for (long m = 2; m <= 120; ++m)
        CHECK(as_int(radical(FgIdeal::integers({Int(m)})).principal_value()) ==
              radical_bruteforce(m));

    // Z/12: sqrt(0) = (6)
    CHECK(as_int(radical(FgIdeal::modular(12, {Int(0)})).principal_value()) == 6);
}

TEST_CASE("radical identities in Z") {
    for (long m = 1; m <= 60; ++m) {
        FgIdeal im = FgIdeal::integers({Int(m)});
        FgIdeal rm = radical(im);
        // I subset sqrt(I), idempotence
        CHECK(contains(rm, Value(Int(m))));
        CHECK(as_int(radical(rm).principal_value()) == as_int(rm.principal_value()));
        for (long n = 1; n <= 60; ++n) {
            // sqrt(I cap J) = sqrt(I) cap sqrt(J); intersections are lcm ideals
            Int lhs = as_int(radical(FgIdeal::integers({int_lcm(Int(m), Int(n))})).principal_value());
            Int rhs = int_lcm(as_int(rm.principal_value()),
                              as_int(radical(FgIdeal::integers({Int(n)})).principal_value()));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("classify_ideal: frozen examples") {
    IdealClass four = classify_ideal(FgIdeal::integers({Int(4)}));
    CHECK(four.primary == Flag::Yes);
    CHECK(four.prime == Flag::No);
    CHECK(four.semiprime == Flag::No);

    IdealClass twelve = classify_ideal(FgIdeal::integers({Int(12)}));
    CHECK(twelve.primary == Flag::No);  // witness 4*3 = 12, 4 not in I, 3^k never in I

    IdealClass seven = classify_ideal(FgIdeal::integers({Int(7)}));
    CHECK(seven.prime == Flag::Yes);
    CHECK(seven.primary == Flag::Yes);
    CHECK(seven.semiprime == Flag::Yes);
    CHECK(seven.maximal == Flag::Yes);

    IdealClass zero = classify_ideal(FgIdeal::integers({Int(0)}));
    CHECK(zero.prime == Flag::Yes);
    CHECK(zero.maximal == Flag::No);
}

TEST_CASE("classification laws, exhaustive at desk scale") {
    // Z: mZ for m <= 120
    for (long m = 0; m <= 120; ++m) {
        IdealClass c = classify_ideal(FgIdeal::integers({Int(m)}));
        CHECK(is_yes(c.prime) == (is_yes(c.primary) && is_yes(c.semiprime)));
        if (is_yes(c.primary)) {
            IdealClass r = classify_ideal(radical(FgIdeal::integers({Int(m)})));
            CHECK(is_yes(r.prime));
        }
        if (is_yes(c.primary) && m != 1) {
            CHECK(is_yes(c.primal));  // with adjoint = sqrt(I), checked in Z/n below
        }
    }
    // Z/n, all ideals (d | n), n <= 40
    for (unsigned long n = 2; n <= 40; ++n) {
        for (const Int& d : int_divisors(Int(static_cast<long>(n)))) {
            FgIdeal ideal = FgIdeal::modular(n, {int_mod(d, Int(n))});
            IdealClass c = classify_ideal(ideal);
            CHECK(is_yes(c.prime) == (is_yes(c.primary) && is_yes(c.semiprime)));
            if (is_yes(c.primary)) {
                IdealClass r = classify_ideal(radical(ideal));
                CHECK(is_yes(r.prime));
            }
            // primary and proper => primal with adjoint = sqrt(I)
            bool proper = !contains(ideal, Value(ring_one(ideal.ring)));
            if (is_yes(c.primary) && proper) {
                CHECK(is_yes(c.primal));
                REQUIRE(c.adjoint_known);
                FgIdeal rad = radical(ideal);
                for (long a = 0; a < static_cast<long>(n); ++a) {
                    bool in_adj = false;
                    for (const Value& v : c.adjoint)
                        if (as_int(v) == a) in_adj = true;
                    CHECK(in_adj == contains(rad, Value(Int(a))));
                }
            }
        }
    }
}

TEST_CASE("monomial ideal classification") {
    IdealClass c1 = classify_ideal(FgIdeal::monomial({P("x0"), P("x1")}));
    CHECK(c1.prime == Flag::Yes);
    CHECK(c1.semiprime == Flag::Yes);
    CHECK(c1.primary == Flag::Yes);

    IdealClass c2 = classify_ideal(FgIdeal::monomial({P("x0*x1")}));
    CHECK(c2.prime == Flag::No);
    CHECK(c2.semiprime == Flag::Yes);
    CHECK(c2.primary == Flag::No);

    IdealClass c3 = classify_ideal(FgIdeal::monomial({P("x0^2"), P("x0*x1"), P("x1^3")}));
    CHECK(c3.primary == Flag::Yes);
    CHECK(c3.semiprime == Flag::No);

    IdealClass c4 = classify_ideal(FgIdeal::monomial({P("x0^2"), P("x0*x1")}));
    CHECK(c4.primary == Flag::No);  // y | x0*x1 but no pure power of x1
}

TEST_CASE("comaximal: frozen examples and radical lift") {
    FgIdeal i4 = FgIdeal::integers({Int(4)});
    FgIdeal i9 = FgIdeal::integers({Int(9)});
    ComaximalResult r = comaximal(i4, i9);
    CHECK(r.comaximal);
    REQUIRE(r.certificate.has_value());
    Int i = as_int(r.certificate->first), j = as_int(r.certificate->second);
    CHECK(i + j == 1);
    CHECK(i % 4 == 0);
    CHECK(j % 9 == 0);

    CHECK(!comaximal(FgIdeal::integers({Int(2)}), FgIdeal::integers({Int(4)})).comaximal);

    FgIdeal whole = FgIdeal::integers({Int(1)});
    CHECK(comaximal(FgIdeal::integers({Int(6)}), whole).comaximal);

    // lift: sqrt comaximal => comaximal, exhaustive m, n <= 60
    for (long m = 2; m <= 60; ++m)
        for (long n = 2; n <= 60; ++n) {
            FgIdeal im = FgIdeal::integers({Int(m)});
            FgIdeal in = FgIdeal::integers({Int(n)});
            bool rad_comax = comaximal(radical(im), radical(in)).comaximal;
            bool comax = comaximal(im, in).comaximal;
            CHECK(rad_comax == comax);  // both equal gcd(m, n) = 1 in Z
            if (rad_comax) CHECK(comax);
        }

    // Q[x]
    FgIdeal f1 = FgIdeal::rational_poly({P("x0")});
    FgIdeal f2 = FgIdeal::rational_poly({P("x0 - 1")});
    ComaximalResult pr = comaximal(f1, f2);
    CHECK(pr.comaximal);
    CHECK(as_poly(pr.certificate->first) + as_poly(pr.certificate->second) ==
          MultiPoly::constant(1));
}

TEST_CASE("quotient rings with canonical representatives") {
    QuotientRing z5 = quotient_ring(RingId::integers(), FgIdeal::integers({Int(5)}));
    CHECK(as_int(z5.q(Value(Int(7)))) == 2);
    CHECK(as_int(z5.q(Value(Int(0)))) == 0);
    CHECK(as_int(z5.q(Value(Int(-3)))) == 2);
    CHECK(as_int(z5.mul(Value(Int(3)), Value(Int(4)))) == 2);

    QuotientRing gauss = quotient_ring(RingId::rational_poly(),
                                       FgIdeal::rational_poly({P("x0^2 + 1")}));
    CHECK(as_poly(gauss.q(Value(P("x0^3")))) == P("-x0"));
    CHECK(as_poly(gauss.q(Value(P("x0")))) == P("x0"));

    // q(r) - r in I; q(r) = q(s) iff r - s in I
    FgIdeal i5 = FgIdeal::integers({Int(5)});
    for (long r = -20; r <= 20; ++r) {
        CHECK(contains(i5, Value(as_int(z5.q(Value(Int(r)))) - Int(r))));
        for (long s = -20; s <= 20; ++s)
            CHECK((as_int(z5.q(Value(Int(r)))) == as_int(z5.q(Value(Int(s))))) ==
                  contains(i5, Value(Int(r - s))));
    }

    // zero ideal: q is the identity
    QuotientRing zid = quotient_ring(RingId::integers(), FgIdeal::integers({Int(0)}));
    CHECK(as_int(zid.q(Value(Int(-17)))) == -17);
}

TEST_CASE("ideal correspondence") {
    auto pairs12 = ideal_correspondence(12);
    CHECK(pairs12.size() == 6);
    CHECK(as_int(pairs12.front().first.principal_value()) == 1);
    CHECK(as_int(pairs12.back().first.principal_value()) == 12);

    CHECK(ideal_correspondence(1).size() == 1);
    CHECK(ideal_correspondence(7).size() == 2);

    // pairing preserves the classification flags
    for (unsigned long n : {12ul, 18ul, 25ul, 30ul, 7ul}) {
        for (const auto& [upstairs, downstairs] : ideal_correspondence(n)) {
            IdealClass up = classify_ideal(upstairs);
            IdealClass down = classify_ideal(downstairs);
            CHECK(up.prime == down.prime);
            CHECK(up.primary == down.primary);
            CHECK(up.semiprime == down.semiprime);
            CHECK(up.maximal == down.maximal);
        }
    }
}

TEST_CASE("proper extension in finite rings") {
    FgIdeal zero12 = FgIdeal::modular(12, {Int(0)});
    auto j = proper_extension(RingId::modular(12), zero12);
    REQUIRE(j.has_value());
    CHECK(as_int(j->principal_value()) == 2);  // least-generator tie break

    FgIdeal zero4 = FgIdeal::modular(4, {Int(0)});
    CHECK(!proper_extension(RingId::modular(4), zero4).has_value());  // sqrt(0) = (2) maximal

    FgIdeal whole = FgIdeal::modular(12, {Int(1)});
    CHECK(!proper_extension(RingId::modular(12), whole).has_value());

    CHECK_THROWS_AS(proper_extension(RingId::integers(), FgIdeal::integers({Int(4)})),
                    NotFiniteRing);

    // returned ideal strictly contains the radical and is proper
    for (unsigned long n = 2; n <= 60; ++n) {
        for (const Int& d : int_divisors(Int(static_cast<long>(n)))) {
            FgIdeal ideal = FgIdeal::modular(n, {int_mod(d, Int(n))});
            auto ext = proper_extension(RingId::modular(n), ideal);
            FgIdeal rad = radical(ideal);
            if (ext.has_value()) {
                CHECK(!contains(*ext, Value(ring_one(ideal.ring))));
                for (long a = 0; a < static_cast<long>(n); ++a)
                    if (contains(rad, Value(Int(a)))) CHECK(contains(*ext, Value(Int(a))));
                bool strict = false;
                for (long a = 0; a < static_cast<long>(n); ++a)
                    if (contains(*ext, Value(Int(a))) && !contains(rad, Value(Int(a))))
                        strict = true;
                CHECK(strict);
            }
        }
    }
}

TEST_CASE("zero-primary iff proper extensions contain a non-zero-divisor (Z/n)") {
    for (unsigned long n = 2; n <= 60; ++n) {
        FgIdeal zero = FgIdeal::modular(n, {Int(0)});
        bool primary = is_yes(classify_ideal(zero).primary);
        FgIdeal rad = radical(zero);
        // every proper ideal strictly containing sqrt(0) contains a unit-like
        // (non-zero-divisor) element
        bool all_have_nzd = true;
        for (const Int& d : int_divisors(Int(static_cast<long>(n)))) {
            FgIdeal j = FgIdeal::modular(n, {int_mod(d, Int(n))});
            if (contains(j, Value(ring_one(j.ring)))) continue;  // not proper
            bool strictly_bigger = false;
            for (long a = 0; a < static_cast<long>(n); ++a)
                if (contains(j, Value(Int(a))) && !contains(rad, Value(Int(a))))
                    strictly_bigger = true;
            bool contains_rad = true;
            for (long a = 0; a < static_cast<long>(n); ++a)
                if (contains(rad, Value(Int(a))) && !contains(j, Value(Int(a))))
                    contains_rad = false;
            if (!strictly_bigger || !contains_rad) continue;
            bool has_nzd = false;
            for (long a = 0; a < static_cast<long>(n); ++a) {
                if (!contains(j, Value(Int(a)))) continue;
                bool zd = false;
                for (long b = 1; b < static_cast<long>(n); ++b)
                    if (int_mod(Int(a * b), Int(n)) == 0) zd = true;
                if (!zd) has_nzd = true;
            }
            all_have_nzd = all_have_nzd && has_nzd;
        }
        CHECK(primary == all_have_nzd);
    }
}

TEST_CASE("unsupported combinations are typed errors") {
    FgIdeal mono = FgIdeal::monomial({P("x0")});
    CHECK_THROWS_AS(comaximal(mono, mono), UndecidableBackend);
    CHECK_THROWS_AS(quotient_ring(RingId::multipoly(), mono), UndecidableBackend);
    CHECK_THROWS_AS(ideal_quotient(mono, Value(P("x0 + x1"))), NotMonomialIdeal);
}
