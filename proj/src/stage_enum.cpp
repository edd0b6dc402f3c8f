#include "revring/stage_enum.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace revring {

StageEnumeration StageEnumeration::from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                  return std::tie(a.stage, a.element) < std::tie(b.stage, b.element);
              });
    StageEnumeration e;
    for (const Entry& en : entries) {
        for (const Entry& prev : e.entries_)
            if (prev.element == en.element)
                throw BadSchedule("element " + std::to_string(en.element) + " enters twice");
        e.entries_.push_back(en);
    }
    return e;
}

StageEnumeration StageEnumeration::parse(const std::string& text) {
    std::vector<Entry> entries;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string w1, w3;
        long element;
        unsigned stage;
        if (!(ls >> w1)) continue;  // blank line
        if (w1[0] == '#') continue;
        if (!(ls >> element >> w3 >> stage) || w1 != "enter" || w3 != "at")
            throw BadSchedule("schedule line " + std::to_string(lineno) +
                              ": expected 'enter <element> at <stage>'");
        entries.push_back({element, stage});
    }
    return from_entries(std::move(entries));
}

StageEnumeration StageEnumeration::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open schedule file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

std::string StageEnumeration::to_text() const {
    std::string out;
    for (const Entry& e : entries_)
        out += "enter " + std::to_string(e.element) + " at " + std::to_string(e.stage) + "\n";
    return out;
}

unsigned StageEnumeration::max_stage() const {
    unsigned m = 0;
    for (const Entry& e : entries_) m = std::max(m, e.stage);
    return m;
}

std::vector<long> StageEnumeration::members_at(unsigned stage) const {
    std::vector<long> out;
    for (const Entry& e : entries_)
        if (e.stage <= stage) out.push_back(e.element);
    std::sort(out.begin(), out.end());
    return out;
}

bool StageEnumeration::contains_at(long element, unsigned stage) const {
    for (const Entry& e : entries_)
        if (e.element == element && e.stage <= stage) return true;
    return false;
}

bool StageEnumeration::contains_ever(long element) const {
    return entry_stage(element).has_value();
}

std::optional<unsigned> StageEnumeration::entry_stage(long element) const {
    for (const Entry& e : entries_)
        if (e.element == element) return e.stage;
    return std::nullopt;
}

StageEnumeration StageEnumeration::normalized() const {
    std::vector<Entry> out;
    unsigned s = 1;
    for (const Entry& e : entries_) out.push_back({e.element, s++});
    return from_entries(std::move(out));
}

unsigned modulus(const StageEnumeration& k, long n, unsigned horizon) {
    unsigned mu = 0;
    for (const auto& e : k.entries()) {
        if (e.element < 0 || e.element >= n) continue;
        if (e.stage > horizon)
            throw HorizonTooSmall("modulus: element " + std::to_string(e.element) +
                                  " enters after the horizon");
        mu = std::max(mu, e.stage);
    }
    return mu;
}

DenseSetResult dense_set_build(const StageEnumeration& k, unsigned horizon, size_t prefix_len) {
    // Work over an initial segment wide enough that dumps never exhaust it.
    size_t width = prefix_len + 2;
    for (const auto& e : k.entries())
        if (e.stage <= horizon) width += e.stage + 2;

    std::set<long> a;
    std::vector<StageEnumeration::Entry> a_entries;
    auto complement = [&](size_t count) {
        std::vector<long> c;
        for (long x = 0; c.size() < count && x < static_cast<long>(4 * width + 16); ++x)
            if (!a.count(x)) c.push_back(x);
        return c;
    };

    for (unsigned s = 0; s <= horizon; ++s) {
        for (const auto& e : k.entries()) {
            if (e.stage != s) continue;
            long n = e.element;
            if (n < 0) throw BadSchedule("dense_set_build: negative element");
            if (static_cast<unsigned long>(n) > static_cast<unsigned long>(s)) continue;  // empty dump range
            std::vector<long> c = complement(static_cast<size_t>(s) + 1);
            for (long i = n; i <= static_cast<long>(s); ++i) {
                if (!a.count(c[static_cast<size_t>(i)])) {
                    a.insert(c[static_cast<size_t>(i)]);
                    a_entries.push_back({c[static_cast<size_t>(i)], s});
                }
            }
        }
    }

    DenseSetResult res;
    res.a = StageEnumeration::from_entries(std::move(a_entries));
    res.complement_prefix = complement(prefix_len);

    // A future dump triggered by n removes complement positions >= n, so the
    // prefix below the least pending n is final.
    size_t stable = prefix_len;
    for (const auto& e : k.entries())
        if (e.stage > horizon && e.element >= 0)
            stable = std::min(stable, static_cast<size_t>(e.element));
    res.stable_count = std::min(stable, res.complement_prefix.size());
    return res;
}

} // namespace revring
