#pragma once

#include "revring/multipoly.hpp"
#include "revring/stage_enum.hpp"

#include <functional>
#include <set>
#include <vector>

namespace revring {

// Variable convention for the staged carrier Z[x, y, z0, z1, ...]:
// x = variable 0, y = variable 1, z_j = variable 2 + j.
MultiPoly staged_var_x();
MultiPoly staged_var_y();
MultiPoly staged_var_z(uint32_t j);
MultiPoly staged_product_generator();  // xy

// The stage-built ideal I of Z[x, y, zbar]: I starts as (xy); when j enters
// the A schedule at stage s the generator z_j^s joins, and when j enters the
// B schedule at stage s the generator (z_j - 1)^s joins. Schedules are
// explicit stand-ins for a disjoint c.e. pair, so every membership answer is
// a deterministic replay.
class StagedRing {
public:
    // A and B must be disjoint; nothing may enter at stage 0.
    StagedRing(StageEnumeration a, StageEnumeration b);

    const StageEnumeration& schedule_a() const { return a_; }
    const StageEnumeration& schedule_b() const { return b_; }

    std::vector<MultiPoly> generators_at(unsigned stage) const;

    // Decides p in I by materializing the generators present at stage
    // deg(p) and reducing against them. The generators' leading monomials
    // (xy and the pure powers z_j^s) are pairwise coprime, so reduction to
    // normal form 0 is a complete membership test, and generators entering
    // after stage deg(p) can never touch a term of p.
    bool staged_membership(const MultiPoly& p) const;

    // X_J = { n < horizon : z_n in J } for a membership oracle J that is
    // supposed to be a proper ideal containing sqrt(I). Verifies the
    // separator guarantees for the stand-in schedules and that J never
    // contains both z_n and z_n - 1; throws SeparationViolation otherwise.
    std::set<long> extract_separator(const std::function<bool(const MultiPoly&)>& in_j,
                                     unsigned horizon) const;

private:
    StageEnumeration a_, b_;
};

} // namespace revring
