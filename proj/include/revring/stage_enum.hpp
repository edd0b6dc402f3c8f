#pragma once

#include "revring/errors.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace revring {

// Monotone stage-indexed finite set: the simulation substrate standing in
// for c.e. sets. A schedule is an explicit list of (element, stage) entries,
// so every construction downstream is a deterministic, replayable run.
class StageEnumeration {
public:
    struct Entry {
        long element;
        unsigned stage;
        bool operator==(const Entry&) const = default;
    };

    StageEnumeration() = default;
    static StageEnumeration from_entries(std::vector<Entry> entries);

    // Text format, one entry per line: "enter <element> at <stage>".
    static StageEnumeration parse(const std::string& text);
    static StageEnumeration load(const std::string& path);
    std::string to_text() const;

    const std::vector<Entry>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    unsigned max_stage() const;

    std::vector<long> members_at(unsigned stage) const;  // sorted, distinct
    bool contains_at(long element, unsigned stage) const;
    bool contains_ever(long element) const;
    std::optional<unsigned> entry_stage(long element) const;  // first entry

    // Reindexed variant with exactly one element entering per stage
    // (|A_s| = s), preserving entry order.
    StageEnumeration normalized() const;

private:
    std::vector<Entry> entries_;  // sorted by (stage, element), no duplicates
};

// Least stage s <= horizon with K_s restricted to [0, n) equal to the final
// restriction. Throws HorizonTooSmall when the schedule still changes below
// n after the horizon.
unsigned modulus(const StageEnumeration& k, long n, unsigned horizon);

struct DenseSetResult {
    StageEnumeration a;                  // the built set, with dump stages
    std::vector<long> complement_prefix; // b_0 < b_1 < ... at the horizon
    size_t stable_count;                 // prefix entries no later dump can disturb
};

// Replay of the marker-dumping construction: when n enters K at stage s, the
// current complement elements c_n..c_s are dumped into A. The surviving
// complement dominates the modulus of K.
DenseSetResult dense_set_build(const StageEnumeration& k, unsigned horizon,
                               size_t prefix_len = 24);

} // namespace revring
