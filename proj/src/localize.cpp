#include "revring/localize.hpp"

#include "revring/errors.hpp"
#include "revring/t_ring.hpp"

#include <algorithm>
#include <set>

namespace revring {

MultiplicativeSet MultiplicativeSet::units_only(const RingId& r) {
    return {r, Tag::UnitsOnly, {}};
}

MultiplicativeSet MultiplicativeSet::powers_of(const RingId& r, Value a) {
    if (ring_eq(r, a, ring_zero(r)))
        throw ZeroDivisorInM("powers_of: 0 generates no multiplicative set");
    return {r, Tag::PowersOf, {std::move(a)}};
}

MultiplicativeSet MultiplicativeSet::finite_closure(const RingId& r, std::vector<Value> list) {
    for (const Value& v : list)
        if (ring_eq(r, v, ring_zero(r)))
            throw ZeroDivisorInM("finite_closure: 0 in the list");
    return {r, Tag::FiniteClosure, std::move(list)};
}

MultiplicativeSet MultiplicativeSet::variable_complement() {
    return {RingId::multipoly(), Tag::ComplementOfVariableIdeals, {}};
}

namespace {

// Prime support of the generators of M over Z.
std::vector<Int> prime_support(const MultiplicativeSet& m) {
    std::set<std::string> seen;
    std::vector<Int> primes;
    for (const Value& v : m.basis) {
        const Int a = int_abs(as_int(v));
        if (a <= 1) continue;
        for (const Int& p : int_factor(a))
            if (seen.insert(int_str(p)).second) primes.push_back(p);
    }
    return primes;
}

} // namespace

bool MultiplicativeSet::contains(const Value& v) const {
    switch (tag) {
        case Tag::UnitsOnly:
            if (ring.kind == RingKind::Integers) return int_abs(as_int(v)) == 1;
            return ring_eq(ring, v, ring_one(ring));
        case Tag::PowersOf: {
            if (ring.kind == RingKind::Integers) {
                const Int a = as_int(basis[0]);
                Int x = as_int(v);
                if (x == 0) return false;
                if (x == 1) return true;
                Int p = a;
                // powers grow in absolute value (|a| >= 2) or cycle (|a| = 1)
                for (int k = 0; k < 256; ++k) {
                    if (p == x) return true;
                    if (int_abs(p) > int_abs(x) && int_abs(a) >= 2) return false;
                    p *= a;
                }
                return false;
            }
            Value p = ring_one(ring);
            for (int k = 0; k < 64; ++k) {
                if (ring_eq(ring, p, v)) return true;
                p = ring_mul(ring, p, basis[0]);
            }
            return false;
        }
        case Tag::FiniteClosure: {
            // membership for Z: v is a product of basis elements; bounded
            // search over exponent tuples by absolute value
            if (ring.kind != RingKind::Integers)
                throw UnsupportedRing("finite_closure membership: Z only");
            Int x = as_int(v);
            if (x == 1) return true;
            if (x == 0) return false;
            std::set<std::string> seen;
            std::vector<Int> frontier = {Int(1)};
            for (int rounds = 0; rounds < 64 && !frontier.empty(); ++rounds) {
                std::vector<Int> next;
                for (const Int& f : frontier)
                    for (const Value& b : basis) {
                        Int g = f * as_int(b);
                        if (g == x) return true;
                        if (int_abs(g) <= int_abs(x) && seen.insert(int_str(g)).second)
                            next.push_back(g);
                    }
                frontier = std::move(next);
            }
            return false;
        }
        case Tag::ComplementOfVariableIdeals:
            return in_M(as_poly(v));
    }
    return false;
}

std::vector<Int> saturate(const MultiplicativeSet& m, unsigned long bound) {
    if (m.ring.kind != RingKind::Integers)
        throw UnsupportedRing("saturate: exact saturation implemented over Z");
    // r is in the saturation iff some s has rs in M iff r divides a product
    // of M-elements iff the prime support of r lies inside that of M.
    std::vector<Int> primes;
    if (m.tag == MultiplicativeSet::Tag::PowersOf ||
        m.tag == MultiplicativeSet::Tag::FiniteClosure)
        primes = prime_support(m);
    else if (m.tag == MultiplicativeSet::Tag::UnitsOnly)
        primes = {};
    else
        throw UnsupportedRing("saturate: undecidable multiplicative set tag");

    std::vector<Int> out;
    for (long r = -static_cast<long>(bound); r <= static_cast<long>(bound); ++r) {
        if (r == 0) continue;
        Int n = int_abs(Int(r));
        for (const Int& p : primes)
            while (n % p == 0) n /= p;
        if (n == 1) out.emplace_back(r);
    }
    return out;
}

EnumeratedStructure::EnumeratedStructure(RingId ring, Enumerator enumerate)
    : ring_(std::move(ring)), enumerate_(std::move(enumerate)) {}

void EnumeratedStructure::grow(unsigned stage) {
    unsigned from = primed_ ? cached_stage_ + 1 : 0;
    for (unsigned s = from; s <= stage; ++s) {
        std::vector<Fraction> listed = enumerate_(s);
        for (Fraction& f : listed) {
            bool dup = false;
            for (const Fraction& g : cache_)
                if (fraction_eq(f, g)) { dup = true; break; }
            if (!dup) {
                cache_.push_back(std::move(f));
                first_stage_.push_back(s);
            }
        }
        cached_stage_ = s;
        primed_ = true;
    }
}

std::vector<Fraction> EnumeratedStructure::elements_at(unsigned stage) {
    grow(stage);
    std::vector<Fraction> out;
    for (size_t i = 0; i < cache_.size(); ++i)
        if (first_stage_[i] <= stage) out.push_back(cache_[i]);
    return out;
}

namespace {

Value nth_ring_element(const RingId& ring, unsigned n) {
    switch (ring.kind) {
        case RingKind::Integers: {
            // 0, 1, -1, 2, -2, ...
            long k = (n + 1) / 2;
            return Int(n % 2 == 1 ? k : -k);
        }
        case RingKind::Modular:
            return int_mod(Int(n), Int(ring.modulus));
        case RingKind::MultiPolyQ: {
            // diagonal listing of monomials with small integer coefficients
            unsigned coef = n % 5;
            unsigned rest = n / 5;
            unsigned var = rest % 3;
            unsigned exp = rest / 3;
            long c = coef == 0 ? 1 : (coef == 1 ? -1 : static_cast<long>(coef));
            return MultiPoly::monomial(ExponentVector::variable(var, exp % 4), Rat(c));
        }
        default:
            throw UnsupportedRing("ring enumeration for " + ring.str());
    }
}

} // namespace

EnumeratedStructure enumerate_ring(const RingId& ring) {
    return EnumeratedStructure(ring, [ring](unsigned stage) {
        std::vector<Fraction> out;
        const unsigned limit =
            ring.kind == RingKind::Modular
                ? std::min<unsigned>(stage + 1, static_cast<unsigned>(ring.modulus))
                : stage + 1;
        for (unsigned i = 0; i < limit; ++i)
            out.push_back(Fraction::embed(ring, nth_ring_element(ring, i)));
        return out;
    });
}

EnumeratedStructure localize(const RingId& ring, const MultiplicativeSet& m) {
    if (!m.contains(ring_one(ring)))
        throw ZeroDivisorInM("localize: M must contain 1");
    return EnumeratedStructure(ring, [ring, m](unsigned stage) {
        // denominators discovered by this stage
        std::vector<Value> dens = {ring_one(ring)};
        switch (m.tag) {
            case MultiplicativeSet::Tag::UnitsOnly:
                break;
            case MultiplicativeSet::Tag::PowersOf: {
                Value p = ring_one(ring);
                for (unsigned k = 1; k <= stage; ++k) {
                    p = ring_mul(ring, p, m.basis[0]);
                    dens.push_back(p);
                }
                break;
            }
            case MultiplicativeSet::Tag::FiniteClosure: {
                std::vector<Value> frontier = {ring_one(ring)};
                for (unsigned round = 0; round < stage; ++round) {
                    std::vector<Value> next;
                    for (const Value& f : frontier)
                        for (const Value& b : m.basis) {
                            Value g = ring_mul(ring, f, b);
                            bool seen = false;
                            for (const Value& d : dens)
                                if (ring_eq(ring, d, g)) { seen = true; break; }
                            if (!seen) {
                                dens.push_back(g);
                                next.push_back(g);
                            }
                        }
                    frontier = std::move(next);
                }
                break;
            }
            case MultiplicativeSet::Tag::ComplementOfVariableIdeals: {
                // enough of M to exercise the handle for T
                for (unsigned i = 1; i <= stage; ++i) {
                    Value v = nth_ring_element(ring, i);
                    if (m.contains(v)) dens.push_back(v);
                }
                break;
            }
        }
        std::vector<Fraction> out;
        for (unsigned i = 0; i <= stage; ++i) {
            Value num = nth_ring_element(ring, i);
            for (const Value& den : dens) out.push_back(Fraction::of(ring, num, den));
        }
        return out;
    });
}

IndexedRing::IndexedRing(EnumeratedStructure structure, unsigned stage_budget)
    : structure_(std::move(structure)), budget_(stage_budget) {
    iso_ = structure_.elements_at(stage_budget);
    if (iso_.empty())
        throw StageBudgetExhausted("index_structure: nothing enumerated within the budget");
}

std::optional<size_t> IndexedRing::index_of(const Fraction& f) const {
    for (size_t i = 0; i < iso_.size(); ++i)
        if (fraction_eq(iso_[i], f)) return i;
    return std::nullopt;
}

IndexedRing::OpResult IndexedRing::locate(const Fraction& f) {
    // enumerate-until-found: the stage consumed is the first stage whose
    // listing contains the result
    for (size_t i = 0; i < iso_.size(); ++i)
        if (fraction_eq(iso_[i], f)) return {i, structure_.first_stage(i)};
    throw StageBudgetExhausted("IndexedRing: operation result not enumerated in time");
}

IndexedRing::OpResult IndexedRing::add(size_t a, size_t b) {
    return locate(structure_.op_add(iso_.at(a), iso_.at(b)));
}

IndexedRing::OpResult IndexedRing::mul(size_t a, size_t b) {
    return locate(structure_.op_mul(iso_.at(a), iso_.at(b)));
}

IndexedRing index_structure(EnumeratedStructure structure, unsigned stages) {
    return IndexedRing(std::move(structure), stages);
}

} // namespace revring
