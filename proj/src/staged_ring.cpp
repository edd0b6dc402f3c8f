#include "revring/staged_ring.hpp"

#include "revring/errors.hpp"

namespace revring {

MultiPoly staged_var_x() { return MultiPoly::variable(0); }
MultiPoly staged_var_y() { return MultiPoly::variable(1); }
MultiPoly staged_var_z(uint32_t j) { return MultiPoly::variable(2 + j); }

MultiPoly staged_product_generator() { return staged_var_x() * staged_var_y(); }

StagedRing::StagedRing(StageEnumeration a, StageEnumeration b)
    : a_(std::move(a)), b_(std::move(b)) {
    for (const auto& e : a_.entries()) {
        if (e.stage == 0) throw BadSchedule("staged ring: nothing enters at stage 0");
        if (e.element < 0) throw BadSchedule("staged ring: negative index");
        if (b_.contains_ever(e.element))
            throw BadSchedule("staged ring: schedules not disjoint");
    }
    for (const auto& e : b_.entries()) {
        if (e.stage == 0) throw BadSchedule("staged ring: nothing enters at stage 0");
        if (e.element < 0) throw BadSchedule("staged ring: negative index");
    }
}

std::vector<MultiPoly> StagedRing::generators_at(unsigned stage) const {
    std::vector<MultiPoly> gens = {staged_product_generator()};
    for (const auto& e : a_.entries())
        if (e.stage <= stage)
            gens.push_back(staged_var_z(static_cast<uint32_t>(e.element)).pow(e.stage));
    for (const auto& e : b_.entries())
        if (e.stage <= stage)
            gens.push_back((staged_var_z(static_cast<uint32_t>(e.element)) -
                            MultiPoly::constant(1))
                               .pow(e.stage));
    return gens;
}

bool StagedRing::staged_membership(const MultiPoly& p) const {
    if (p.is_zero()) return true;
    const unsigned stage = static_cast<unsigned>(p.total_degree());
    const std::vector<MultiPoly> gens = generators_at(stage);

    // Reduction: cancel any term divisible by a generator's leading
    // monomial. Each step lowers the multiset of divisible leading terms, so
    // this terminates; coprime leading monomials make the normal form
    // independent of reduction order and zero exactly on ideal members.
    MultiPoly r = p;
    bool progressed = true;
    while (!r.is_zero() && progressed) {
        progressed = false;
        for (const MultiPoly& g : gens) {
            const ExponentVector& lt = g.lead_exponent();
            const Rat& lc = g.lead_coeff();
            for (const auto& [e, c] : r.terms()) {
                if (!lt.divides(e)) continue;
                MultiPoly m = MultiPoly::monomial(e.minus(lt), c / lc);
                r -= m * g;
                progressed = true;
                break;
            }
            if (progressed) break;
        }
    }
    return r.is_zero();
}

std::set<long> StagedRing::extract_separator(
    const std::function<bool(const MultiPoly&)>& in_j, unsigned horizon) const {
    std::set<long> x;
    for (long n = 0; n < static_cast<long>(horizon); ++n) {
        bool zn = in_j(staged_var_z(static_cast<uint32_t>(n)));
        bool zn1 = in_j(staged_var_z(static_cast<uint32_t>(n)) - MultiPoly::constant(1));
        if (zn && zn1)
            throw SeparationViolation("J contains z_" + std::to_string(n) +
                                      " and z_" + std::to_string(n) + " - 1");
        if (zn) x.insert(n);
        // Guarantees for the stand-ins: members of A must enter X, members
        // of B must stay out (their z_n - 1 lies in sqrt(I) already).
        if (a_.contains_ever(n) && !zn)
            throw SeparationViolation("J misses z_" + std::to_string(n) +
                                      " although its index entered A");
        if (b_.contains_ever(n) && !zn1)
            throw SeparationViolation("J misses z_" + std::to_string(n) +
                                      " - 1 although its index entered B");
    }
    return x;
}

} // namespace revring
