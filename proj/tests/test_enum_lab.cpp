#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "revring/chains.hpp"
#include "revring/linear_ring.hpp"
#include "revring/priority_merge.hpp"
#include "revring/zorn.hpp"
#include "revring/poly_text.hpp"

#include <random>
#include <set>

using namespace revring;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s); }

StageEnumeration evens_schedule(long count) {
    // 2m enters at stage m^2
    std::vector<StageEnumeration::Entry> e;
    for (long m = 0; m < count; ++m)
        e.push_back({2 * m, static_cast<unsigned>(m * m)});
    return StageEnumeration::from_entries(std::move(e));
}

} // namespace

TEST_CASE("schedule parsing and round trip") {
    StageEnumeration k = StageEnumeration::parse("enter 4 at 2\nenter 1 at 7\n\n# note\n");
    CHECK(k.entries().size() == 2);
    CHECK(k.entry_stage(4) == 2u);
    CHECK(k.contains_at(4, 2));
    CHECK(!k.contains_at(4, 1));
    CHECK(StageEnumeration::parse(k.to_text()).entries() == k.entries());
    CHECK_THROWS_AS(StageEnumeration::parse("enter x at 2\n"), BadSchedule);
    CHECK_THROWS_AS(StageEnumeration::from_entries({{1, 2}, {1, 5}}), BadSchedule);

    StageEnumeration norm = k.normalized();   // |A_s| = s
    CHECK(norm.members_at(1).size() == 1);
    CHECK(norm.members_at(2).size() == 2);
}

TEST_CASE("modulus of a stand-in enumeration") {
    StageEnumeration evens = evens_schedule(8);
    CHECK(modulus(evens, 5, 100) == 4);  // need 2 @ 1 and 4 @ 4
    CHECK(modulus(evens, 1, 100) == 0);
    CHECK(modulus(StageEnumeration{}, 10, 0) == 0);
    CHECK_THROWS_AS(modulus(evens, 14, 20), HorizonTooSmall);  // 12 enters at 36

    // domination corollary: f >= mu decides K by asking n in K_{f(n+1)}
    for (long n = 0; n < 10; ++n) {
        unsigned f = modulus(evens, n + 1, 100);
        bool decided = evens.contains_at(n, f);
        CHECK(decided == evens.contains_ever(n));
    }
}

TEST_CASE("dense set construction replays the dumping argument") {
    // K empty: nothing dumped
    DenseSetResult none = dense_set_build(StageEnumeration{}, 50);
    CHECK(none.a.entries().empty());
    for (size_t i = 0; i < none.complement_prefix.size(); ++i)
        CHECK(none.complement_prefix[i] == static_cast<long>(i));

    // K = {0 @ 3}: c_0..c_3 = 0..3 dumped at stage 3; b_0 = 4
    DenseSetResult one = dense_set_build(StageEnumeration::parse("enter 0 at 3\n"), 50);
    CHECK(one.a.members_at(50) == std::vector<long>{0, 1, 2, 3});
    CHECK(one.complement_prefix[0] == 4);

    // evens schedule: b_i >= mu_K(i) for stable i
    StageEnumeration evens = evens_schedule(7);
    DenseSetResult d = dense_set_build(evens, 100, 16);
    CHECK(d.stable_count >= 10);
    for (size_t i = 0; i < std::min(d.stable_count, static_cast<size_t>(11)); ++i) {
        unsigned mu = modulus(evens, static_cast<long>(i), 100);
        CHECK(d.complement_prefix[i] >= static_cast<long>(mu));
    }

    // complement stays infinite at every horizon: some element survives
    // beyond every dump
    for (unsigned h : {10u, 25u, 100u}) {
        DenseSetResult r = dense_set_build(evens, h, 8);
        CHECK(!r.complement_prefix.empty());
    }
}

TEST_CASE("strictify: extract a strict subchain with witnesses") {
    // monomial chain I_n = (x_0 .. x_{n/2}) over the monomial listing
    DecidableChain chain;
    chain.ring = RingId::multipoly();
    chain.element = [](size_t j) { return Value(MultiPoly::variable(static_cast<uint32_t>(j))); };
    chain.member = [](size_t n, const Value& v) {
        const MultiPoly& p = as_poly(v);
        if (p.is_zero()) return true;
        uint32_t var = p.lead_exponent().support()[0];
        return var <= n / 2;
    };
    StrictChainResult r = strictify_chain(chain, 24);
    REQUIRE(r.indices.size() >= 4);
    for (size_t k = 1; k < r.indices.size(); ++k) {
        CHECK(r.indices[k] > r.indices[k - 1]);
        CHECK(chain.member(r.indices[k], r.witnesses[k]));
        CHECK(!chain.member(r.indices[k - 1], r.witnesses[k]));
    }

    // constant chain stabilizes immediately
    DecidableChain constant;
    constant.ring = RingId::integers();
    constant.element = [](size_t j) { return Value(Int(static_cast<long>(j))); };
    constant.member = [](size_t, const Value& v) { return as_int(v) % 2 == 0; };
    CHECK_THROWS_AS(strictify_chain(constant, 30), StabilizedWithinBudget);
}

TEST_CASE("bad sequences convert to strictly increasing generated chains") {
    // bad sequence x0, x1, x2, ... -> chain (x0) < (x0, x1) < ...
    std::vector<Value> seq;
    for (uint32_t i = 0; i < 5; ++i) seq.emplace_back(MultiPoly::variable(i));
    Sigma1IdealChain chain = bad_seq_to_chain(RingId::multipoly(), seq);

    // each next element eventually appears in its own ideal's enumeration
    for (size_t n = 0; n < 5; ++n) {
        bool found = false;
        for (size_t i = 0; i < 4096 && !found; ++i)
            found = ring_eq(chain.ring, chain.enumerate(n, i), seq[n]);
        CHECK(found);
    }

    size_t st = chain_stabilization(chain, {seq[0], seq[2]}, 4096);
    CHECK(st == 2);

    Sigma1IdealChain zchain =
        bad_seq_to_chain(RingId::integers(), {Value(Int(4)), Value(Int(2)), Value(Int(2))});
    CHECK(chain_stabilization(zchain, {Value(Int(2))}, 2048) == 1);
    CHECK(chain_stabilization(zchain, {Value(Int(4))}, 2048) == 0);
    CHECK_THROWS_AS(chain_stabilization(zchain, {Value(Int(9999))}, 64), GeneratorNotFound);
}

TEST_CASE("priority merge: strictly increasing output on non-stabilizing input") {
    // doubled monomial chain: I_n = (x_0 .. x_{n/2}), enumerated via small
    // combinations; every ideal repeated twice
    Sigma1IdealChain chain;
    chain.ring = RingId::multipoly();
    chain.enumerate = [](size_t n, size_t i) -> Value {
        size_t top = n / 2;
        // list multiples of the generators fairly: variable (i mod (top+1)),
        // multiplied by a small monomial coefficient
        uint32_t var = static_cast<uint32_t>(i % (top + 1));
        size_t code = i / (top + 1);
        MultiPoly coeff = MultiPoly::constant(Rat(1 + static_cast<long>(code % 3)));
        if (code % 7 == 3) coeff = MultiPoly::variable(static_cast<uint32_t>(code % 5));
        return Value(coeff * MultiPoly::variable(var));
    };

    PriorityMergeResult r = priority_merge(chain, 40);
    REQUIRE(r.output_chain.size() == 41);

    // J-chain is increasing as sets
    for (size_t i = 1; i < r.output_chain.size(); ++i)
        for (const Value& v : r.output_chain[i - 1]) {
            bool present = false;
            for (const Value& w : r.output_chain[i])
                if (ring_eq(chain.ring, v, w)) present = true;
            CHECK(present);
        }

    // settled witnesses certify strictness: x_n in J_n minus J_{n-1}
    size_t settled_count = 0;
    for (size_t n = 1; n < r.settled.size(); ++n) {
        if (!r.settled[n]) continue;
        ++settled_count;
        REQUIRE(r.witnesses[n].has_value());
        bool in_jn = false;
        for (const Value& w : r.output_chain[n])
            if (ring_eq(chain.ring, w, *r.witnesses[n])) in_jn = true;
        CHECK(in_jn);
        bool in_prev = false;
        for (const Value& w : r.output_chain[n - 1])
            if (ring_eq(chain.ring, w, *r.witnesses[n])) in_prev = true;
        CHECK(!in_prev);
    }
    CHECK(settled_count >= 20);

    // markers nondecreasing within each history
    for (const auto& hist : r.marker_history)
        for (size_t k = 1; k < hist.size(); ++k) CHECK(hist[k].second >= hist[k - 1].second);
}

TEST_CASE("priority merge surfaces stabilized input") {
    // constant chain: the same principal ideal forever
    Sigma1IdealChain constant;
    constant.ring = RingId::integers();
    constant.enumerate = [](size_t, size_t i) { return Value(Int(2 * (static_cast<long>(i % 40) - 20))); };
    CHECK_THROWS_AS(priority_merge(constant, 30, 2000), NoFreshWitness);
}

TEST_CASE("priority merge on strictly increasing input: markers never move after assignment") {
    Sigma1IdealChain strict;
    strict.ring = RingId::multipoly();
    strict.enumerate = [](size_t n, size_t i) -> Value {
        uint32_t var = static_cast<uint32_t>(i % (n + 1));
        return Value(MultiPoly::variable(var).scale(Rat(1 + static_cast<long>(i / (n + 1) % 2))));
    };
    PriorityMergeResult r = priority_merge(strict, 25);
    for (size_t n = 0; n < r.marker_history.size(); ++n) {
        // one initial assignment plus at most one immediate placeholder
        // injury (the witness chosen inside J_{s-1} at creation)
        CHECK(r.marker_history[n].size() <= 2);
    }
}

TEST_CASE("linear ring: multiplication formula and normalization") {
    LinearRingElement a = lin_add(LinearRingElement::scalar(1), LinearRingElement::variable(0));
    LinearRingElement b = lin_add(LinearRingElement::scalar(2), LinearRingElement::variable(1));
    LinearRingElement ab = lin_mul(a, b);
    CHECK(ab.constant == Rat(2));
    CHECK(ab.coeffs.at(0) == Rat(2));
    CHECK(ab.coeffs.at(1) == Rat(1));

    CHECK(lin_mul(LinearRingElement{}, b).is_zero());

    // oracle: expand in Q[xbar] and kill all terms of degree >= 2
    std::mt19937_64 eng(5);
    auto to_poly = [](const LinearRingElement& e) {
        MultiPoly p = MultiPoly::constant(e.constant);
        for (const auto& [i, c] : e.coeffs) p += MultiPoly::variable(i).scale(c);
        return p;
    };
    for (int trial = 0; trial < 300; ++trial) {
        LinearRingElement x = LinearRingElement::scalar(Rat(static_cast<long>(eng() % 7) - 3));
        LinearRingElement y = LinearRingElement::scalar(Rat(static_cast<long>(eng() % 7) - 3));
        for (uint32_t v = 0; v < 4; ++v) {
            if (eng() % 2) x = lin_add(x, LinearRingElement::variable(v, Rat(static_cast<long>(eng() % 9) - 4)));
            if (eng() % 2) y = lin_add(y, LinearRingElement::variable(v, Rat(static_cast<long>(eng() % 9) - 4)));
        }
        MultiPoly expanded = to_poly(x) * to_poly(y);
        MultiPoly truncated;
        for (const auto& [e, c] : expanded.terms())
            if (e.total_degree() < 2) truncated += MultiPoly::monomial(e, c);
        CHECK(to_poly(lin_mul(x, y)) == truncated);
    }
}

TEST_CASE("normalize_independent produces constant-free sequences of full rank") {
    // a_0 = x0, a_1 = 3 + x1, a_2 = 1 + x2, a_3 = x0 + x3
    std::vector<LinearRingElement> seq = {
        LinearRingElement::variable(0),
        lin_add(LinearRingElement::scalar(3), LinearRingElement::variable(1)),
        lin_add(LinearRingElement::scalar(1), LinearRingElement::variable(2)),
        lin_add(LinearRingElement::variable(0), LinearRingElement::variable(3)),
    };
    auto norm = normalize_independent(seq);
    REQUIRE(norm.size() == 3);
    for (const auto& e : norm) CHECK(e.constant.is_zero());
    CHECK(coefficient_rank(seq) == 4);
    CHECK(coefficient_rank(norm) == 3);  // exact independence preserved

    // all-constant-zero input: identity normalization
    std::vector<LinearRingElement> flat = {LinearRingElement::variable(2),
                                           LinearRingElement::variable(5)};
    CHECK(normalize_independent(flat) == flat);
}

TEST_CASE("dominating function from an independent sequence in the ideal") {
    // A = dense stand-in; complement c_0 < c_1 < ...; take a'_i = x_{c_i}
    StageEnumeration k = StageEnumeration::parse("enter 0 at 3\n");
    DenseSetResult dense = dense_set_build(k, 60, 14);
    std::vector<LinearRingElement> seq;
    for (size_t i = 0; i < 12; ++i)
        seq.push_back(LinearRingElement::variable(
            static_cast<uint32_t>(dense.complement_prefix[i])));
    DominationTable t = dominating_f(seq, dense.a, 60, 10);
    CHECK(t.dominates);
    for (size_t n = 0; n + 1 < seq.size() && n < 10; ++n)
        CHECK(t.f[n] == dense.complement_prefix[n + 1]);
}

TEST_CASE("zorn greedy chain") {
    // (N, <=) enumerated in order: strictly increasing chain
    std::vector<StageEnumeration::Entry> nat;
    for (long i = 0; i < 30; ++i) nat.push_back({i, static_cast<unsigned>(i)});
    StageEnumeration carrier = StageEnumeration::from_entries(std::move(nat));
    StagedOrder leq{[](long a, long b, unsigned) { return a <= b; }};
    GreedyChainResult r = zorn_greedy_chain(carrier, leq, 4000);
    REQUIRE(r.chain.size() >= 5);
    for (size_t i = 1; i < r.chain.size(); ++i)
        CHECK(r.chain[i].element > r.chain[i - 1].element);

    // finite poset with a top element: terminates reporting it
    StagedOrder capped{[](long a, long b, unsigned) {
        auto rank = [](long x) { return x == 7 ? 2 : (x % 2 == 0 ? 1 : 0); };
        return rank(a) < rank(b) || a == b;
    }};
    std::vector<StageEnumeration::Entry> few;
    for (long i = 0; i < 9; ++i) few.push_back({i, static_cast<unsigned>(i)});
    GreedyChainResult top = zorn_greedy_chain(StageEnumeration::from_entries(std::move(few)),
                                              capped, 3000);
    CHECK(top.maximal_so_far);
    CHECK(top.chain.back().element == 7);

    // order revealed with delay: still strict, stages recorded
    StagedOrder delayed{[](long a, long b, unsigned k) { return a <= b && k >= 5; }};
    GreedyChainResult slow = zorn_greedy_chain(carrier, delayed, 6000);
    CHECK(slow.chain.size() >= 3);
    for (size_t i = 1; i < slow.chain.size(); ++i) {
        CHECK(slow.chain[i].stage >= 5);
        CHECK(slow.chain[i].element > slow.chain[i - 1].element);
    }
}

TEST_CASE("block-merge poset") {
    // K empty: order is <=, blocks are singletons
    BlockMergePoset triv(StageEnumeration{}, 40);
    for (long a = 0; a < 20; ++a)
        for (long b = 0; b < 20; ++b) CHECK(triv.less(a, b) == (a < b));

    // K = {0 @ 4}: blocks merge through the block containing 4
    BlockMergePoset merged(StageEnumeration::parse("enter 0 at 4\n"), 40);
    CHECK(merged.block_of(0) == merged.block_of(4));
    CHECK(merged.block_of(0) != merged.block_of(5));
    CHECK(!merged.less(1, 4));
    CHECK(merged.less(4, 5));

    // block partition invariants below a horizon: intervals, incomparable
    // within, comparable across
    StageEnumeration evens = evens_schedule(6);
    BlockMergePoset poset(evens, 60);
    for (long a = 0; a < 50; ++a)
        for (long b = 0; b < 50; ++b) {
            bool same = poset.block_of(a) == poset.block_of(b);
            CHECK(same == (!poset.less(a, b) && !poset.less(b, a)));
            if (a < b) CHECK(!poset.less(b, a));
        }

    // greedy chain through the final poset dominates the modulus
    std::vector<long> f = poset.greedy_chain(12);
    auto check = poset.check_chain(f, evens, 60, 10);
    CHECK(check.dominates);

    // a within-block "chain" is rejected
    std::vector<long> bad = {merged.block_starts()[0], merged.block_starts()[0] + 1};
    if (merged.block_of(bad[0]) == merged.block_of(bad[1]))
        CHECK_THROWS_AS(merged.check_chain(bad, StageEnumeration::parse("enter 0 at 4\n"), 40, 5),
                        ChainViolation);
}
