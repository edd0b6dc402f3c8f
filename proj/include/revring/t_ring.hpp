#pragma once

#include "revring/multipoly.hpp"
#include "revring/stage_enum.hpp"

#include <vector>

namespace revring {

// The concrete PID T: the localization of Q[x0, x1, ...] at the
// multiplicative set M of polynomials lying in no ideal (x_i). Every nonzero
// element has the normal form x^beta * (m/q) with m, q in M, so divisibility
// and ideal structure reduce to the pointwise order on exponent vectors.

// p lies in M iff p != 0 and, for every variable occurring in p, some term
// of p omits that variable; equivalently the meet of supp(p) is the zero
// exponent vector.
bool in_M(const MultiPoly& p);

class TElement {
public:
    TElement() : num_(), den_(MultiPoly::constant(1)) {}
    TElement(MultiPoly num, MultiPoly den);  // throws DenominatorNotInM
    static TElement from_poly(MultiPoly p) { return TElement(std::move(p), MultiPoly::constant(1)); }
    static TElement one() { return from_poly(MultiPoly::constant(1)); }
    static TElement monomial(const ExponentVector& e) {
        return from_poly(MultiPoly::monomial(e, 1));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    // Equality by cross-multiplication.
    bool operator==(const TElement& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const TElement& o) const { return !(*this == o); }

    TElement operator+(const TElement& o) const;
    TElement operator-(const TElement& o) const;
    TElement operator*(const TElement& o) const;
    TElement operator-() const;

    // The exponent part of the normal form; requires nonzero.
    ExponentVector beta() const;

    bool is_unit() const { return !is_zero() && beta().is_zero(); }
    TElement inverse() const;  // requires unit

    std::string str() const;

private:
    MultiPoly num_, den_;
};

struct TNormalForm {
    ExponentVector beta;
    MultiPoly unit_num;  // in M
    MultiPoly unit_den;  // in M
};

// t = x^beta * (unit_num/unit_den); throws ZeroElement on 0.
TNormalForm normal_form(const TElement& t);

// Divisibility in T: beta(a) <= beta(b) pointwise. 0 | 0 holds; a = 0
// divides nothing else; units divide everything.
bool t_divides(const TElement& a, const TElement& b);

struct TIdeal {
    std::vector<TElement> generators;  // nonempty
};

struct TPrincipal {
    TElement generator;                 // x^alpha, alpha = meet of the betas
    std::vector<TElement> combination;  // generator = sum combination[i] * gens[i]
};

// Principal generator of a finitely generated ideal of T, with an exact
// combination certificate. Throws AllZero when every generator is 0.
TPrincipal t_principal_generator(const TIdeal& ideal);

// In the localization of T at { x_n : n entered by the horizon }, t is a
// unit iff beta(t) is supported on entered indices. Constants are always
// units; t = 0 never is.
bool localized_units(const StageEnumeration& schedule, const TElement& t, unsigned horizon);

// One simulated index of the staged irreducibility construction: x_e starts
// split as y_{e,0} * z_{e,0}; each schedule entry at stage s localizes the
// previous y and re-splits x_e as y_{e,s} * z_{e,s}.
struct Pi2Status {
    bool reducible_with_witness;     // else: irreducible at this horizon
    unsigned witness_stage;          // split stage of the current witness
    std::vector<unsigned> localized; // stages whose y became a unit
};

// Replays the construction through the horizon. An index is reported
// irreducible-at-horizon exactly when every split committed strictly before
// the horizon has been refuted (its y localized) by the horizon; a split
// created at the horizon itself is not yet a committed witness. Raising the
// horizon can only replace a witness with a newer split, never revive a
// localized one.
std::vector<Pi2Status> pi2_simulate(const std::vector<StageEnumeration>& w, unsigned horizon);

} // namespace revring
