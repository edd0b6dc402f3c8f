#include "revring/t_ring.hpp"

#include "revring/errors.hpp"

#include <algorithm>
#include <set>

namespace revring {

bool in_M(const MultiPoly& p) {
    if (p.is_zero()) return false;
    auto supp = p.support();
    return meet_exponents(supp).is_zero();
}

TElement::TElement(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (!in_M(den_)) throw DenominatorNotInM("TElement: denominator not in M");
}

TElement TElement::operator+(const TElement& o) const {
    return TElement(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

TElement TElement::operator-(const TElement& o) const {
    return TElement(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

TElement TElement::operator*(const TElement& o) const {
    return TElement(num_ * o.num_, den_ * o.den_);
}

TElement TElement::operator-() const { return TElement(-num_, den_); }

ExponentVector TElement::beta() const {
    if (is_zero()) throw ZeroElement("beta of zero element");
    auto supp = num_.support();
    return meet_exponents(supp);
}

TElement TElement::inverse() const {
    if (!is_unit()) throw Error("TElement::inverse: not a unit");
    return TElement(den_, num_);
}

std::string TElement::str() const {
    if (den_ == MultiPoly::constant(1)) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

TNormalForm normal_form(const TElement& t) {
    if (t.is_zero()) throw ZeroElement("normal_form: zero element");
    ExponentVector beta = t.beta();
    return {beta, t.num().divide_monomial(beta), t.den()};
}

bool t_divides(const TElement& a, const TElement& b) {
    if (a.is_zero()) return b.is_zero();
    if (b.is_zero()) return true;
    return a.beta().divides(b.beta());
}

TPrincipal t_principal_generator(const TIdeal& ideal) {
    std::vector<size_t> nonzero;
    for (size_t i = 0; i < ideal.generators.size(); ++i)
        if (!ideal.generators[i].is_zero()) nonzero.push_back(i);
    if (nonzero.empty()) throw AllZero("t_principal_generator: all generators zero");

    std::vector<ExponentVector> betas;
    betas.reserve(nonzero.size());
    for (size_t i : nonzero) betas.push_back(ideal.generators[i].beta());
    const ExponentVector alpha = meet_exponents(betas);

    // Pick generators so that every coordinate of the chosen betas attains
    // the meet: start with one, then repeatedly cover any coordinate whose
    // running minimum still exceeds alpha. Each added generator fixes at
    // least one coordinate for good, so this terminates.
    std::vector<size_t> chosen = {0};
    for (;;) {
        std::set<uint32_t> coords;
        for (size_t c : chosen)
            for (uint32_t v : betas[c].support()) coords.insert(v);
        std::optional<uint32_t> uncovered;
        for (uint32_t v : coords) {
            uint32_t mn = UINT32_MAX;
            for (size_t c : chosen) mn = std::min(mn, betas[c].get(v));
            if (mn > alpha.get(v)) { uncovered = v; break; }
        }
        if (!uncovered) break;
        for (size_t i = 0; i < betas.size(); ++i) {
            if (betas[i].get(*uncovered) == alpha.get(*uncovered) &&
                std::find(chosen.begin(), chosen.end(), i) == chosen.end()) {
                chosen.push_back(i);
                break;
            }
        }
    }

    // sum_{c in chosen} x^{beta_c} = x^alpha * m with m in M, so with
    // g_c = x^{beta_c} * (m_c / q_c) we get
    // x^alpha = sum_c (q_c / (m * m_c)) * g_c.
    MultiPoly m;
    for (size_t c : chosen) m += MultiPoly::monomial(betas[c].minus(alpha), 1);

    TPrincipal out;
    out.generator = TElement::monomial(alpha);
    out.combination.assign(ideal.generators.size(), TElement::from_poly(MultiPoly{}));
    for (size_t c : chosen) {
        const TElement& g = ideal.generators[nonzero[c]];
        MultiPoly unit_num = g.num().divide_monomial(betas[c]);  // m_c
        out.combination[nonzero[c]] = TElement(g.den(), m * unit_num);
    }
    return out;
}

bool localized_units(const StageEnumeration& schedule, const TElement& t, unsigned horizon) {
    if (t.is_zero()) return false;
    for (uint32_t v : t.beta().support())
        if (!schedule.contains_at(static_cast<long>(v), horizon)) return false;
    return true;
}

std::vector<Pi2Status> pi2_simulate(const std::vector<StageEnumeration>& w, unsigned horizon) {
    std::vector<Pi2Status> out;
    out.reserve(w.size());
    for (const StageEnumeration& we : w) {
        Pi2Status st;
        st.reducible_with_witness = true;
        st.witness_stage = 0;  // the initial split y_{e,0} z_{e,0}
        unsigned last_entry = 0;
        bool entered_at_horizon = false;
        unsigned prev_split = 0;
        unsigned prev_stage = 0;
        for (const auto& e : we.entries()) {
            if (e.stage == 0) throw BadSchedule("pi2_simulate: nothing may enter at stage 0");
            if (e.stage == prev_stage)
                throw BadSchedule("pi2_simulate: one entry per stage per index");
            prev_stage = e.stage;
            if (e.stage > horizon) continue;
            // Entry at stage s: localize the latest y, split afresh.
            st.localized.push_back(prev_split);
            prev_split = e.stage;
            last_entry = e.stage;
            entered_at_horizon = (e.stage == horizon);
        }
        st.witness_stage = last_entry;
        st.reducible_with_witness = !entered_at_horizon;
        out.push_back(std::move(st));
    }
    return out;
}

} // namespace revring
