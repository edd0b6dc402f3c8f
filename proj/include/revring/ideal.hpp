#pragma once

#include "revring/ring.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace revring {

// Finitely generated ideal with a pluggable decidable membership backend.
// Unsupported (ring, operation) combinations raise UndecidableBackend: every
// answer this module gives is exact.
enum class IdealBackend {
    Integers,      // gcd of generators
    Modular,       // exhaustive in Z/n
    RationalPoly,  // univariate gcd in Q[x]
    Monomial,      // exponent divisibility in Q[x0,x1,...]
    PidT,          // meet of exponent parts
    Staged,        // staged ring handle
};

struct FgIdeal {
    RingId ring;
    std::vector<Value> generators;  // nonempty
    IdealBackend backend;

    static FgIdeal integers(std::vector<Int> gens);
    static FgIdeal modular(unsigned long n, std::vector<Int> gens);
    static FgIdeal rational_poly(std::vector<MultiPoly> gens);
    static FgIdeal monomial(std::vector<MultiPoly> gens);  // single-term generators
    static FgIdeal pid_t(std::vector<TElement> gens);
    static FgIdeal staged(std::shared_ptr<const StagedRing> handle);

    // Canonical single generator for the principal backends:
    // Z -> gcd >= 0; Z/n -> gcd(gens, n); Q[x] -> monic gcd (0 for the zero ideal).
    Value principal_value() const;
};

bool contains(const FgIdeal& ideal, const Value& r);

// (I : a) = { r : r*a in I }.
FgIdeal ideal_quotient(const FgIdeal& ideal, const Value& a);

// sqrt(I) = { a : a^n in I for some n > 0 }.
FgIdeal radical(const FgIdeal& ideal);

struct IdealClass {
    Flag prime = Flag::Undecided;
    Flag primary = Flag::Undecided;
    Flag semiprime = Flag::Undecided;
    Flag primal = Flag::Undecided;
    Flag maximal = Flag::Undecided;
    std::vector<Value> adjoint;  // materialized for finite backends only
    bool adjoint_known = false;
};

IdealClass classify_ideal(const FgIdeal& ideal);

struct ComaximalResult {
    bool comaximal = false;
    // i in I, j in J with i + j = 1.
    std::optional<std::pair<Value, Value>> certificate;
};

ComaximalResult comaximal(const FgIdeal& i, const FgIdeal& j);

// Quotient ring with canonical representatives: least non-negative residues
// over Z, remainders under long division over Q[x]. The zero ideal is
// allowed (q is the identity).
class QuotientRing {
public:
    QuotientRing(RingId base, FgIdeal ideal);

    const RingId& base() const { return base_; }
    const FgIdeal& ideal() const { return ideal_; }

    Value q(const Value& r) const;  // canonical representative
    Value add(const Value& a, const Value& b) const { return q(ring_add(base_, a, b)); }
    Value mul(const Value& a, const Value& b) const { return q(ring_mul(base_, a, b)); }

private:
    RingId base_;
    FgIdeal ideal_;
};

QuotientRing quotient_ring(const RingId& base, const FgIdeal& ideal);

// The bijection d | n  <->  ideals of Z and of Z/n: pairs (dZ, image of dZ),
// ascending in d. Flags are preserved by the pairing.
std::vector<std::pair<FgIdeal, FgIdeal>> ideal_correspondence(unsigned long n);

// On the finite ring Z/n: a proper ideal J strictly containing sqrt(I), if
// one exists (least-generator tie break), else nothing (sqrt(I) maximal or
// the whole ring). Throws NotFiniteRing off Z/n.
std::optional<FgIdeal> proper_extension(const RingId& ring, const FgIdeal& ideal);

} // namespace revring
