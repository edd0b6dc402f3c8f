#include "revring/exponent.hpp"

#include <algorithm>

namespace revring {

ExponentVector::ExponentVector(std::vector<Entry> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].second == 0)
            throw Error("ExponentVector: zero exponent stored");
        if (i > 0 && entries_[i].first == entries_[i - 1].first)
            throw Error("ExponentVector: duplicate variable index");
    }
}

ExponentVector ExponentVector::variable(uint32_t index, uint32_t exp) {
    ExponentVector v;
    if (exp > 0) v.entries_.push_back({index, exp});
    return v;
}

uint32_t ExponentVector::get(uint32_t index) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{index, 0});
    if (it != entries_.end() && it->first == index) return it->second;
    return 0;
}

void ExponentVector::set(uint32_t index, uint32_t exp) {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{index, 0});
    if (it != entries_.end() && it->first == index) {
        if (exp == 0) entries_.erase(it);
        else it->second = exp;
    } else if (exp > 0) {
        entries_.insert(it, {index, exp});
    }
}

uint64_t ExponentVector::total_degree() const {
    uint64_t d = 0;
    for (const auto& [i, e] : entries_) d += e;
    return d;
}

uint32_t ExponentVector::max_index() const {
    if (entries_.empty()) throw Error("ExponentVector::max_index on zero vector");
    return entries_.back().first;
}

std::vector<uint32_t> ExponentVector::support() const {
    std::vector<uint32_t> s;
    s.reserve(entries_.size());
    for (const auto& [i, e] : entries_) s.push_back(i);
    return s;
}

bool ExponentVector::divides(const ExponentVector& other) const {
    for (const auto& [i, e] : entries_)
        if (other.get(i) < e) return false;
    return true;
}

ExponentVector ExponentVector::operator+(const ExponentVector& o) const {
    ExponentVector r = *this;
    for (const auto& [i, e] : o.entries_) r.set(i, r.get(i) + e);
    return r;
}

ExponentVector ExponentVector::minus(const ExponentVector& o) const {
    if (!o.divides(*this)) throw Error("ExponentVector::minus: not pointwise >=");
    ExponentVector r = *this;
    for (const auto& [i, e] : o.entries_) r.set(i, r.get(i) - e);
    return r;
}

ExponentVector ExponentVector::meet(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r;
    for (const auto& [i, e] : a.entries_) {
        uint32_t m = std::min(e, b.get(i));
        if (m > 0) r.entries_.push_back({i, m});
    }
    return r;
}

ExponentVector ExponentVector::join(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r = a;
    for (const auto& [i, e] : b.entries_) r.set(i, std::max(r.get(i), e));
    return r;
}

std::string ExponentVector::str() const {
    if (entries_.empty()) return "1";
    std::string s;
    for (const auto& [i, e] : entries_) {
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
    uint64_t da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    // Same degree: lex with x0 > x1 > ...; walk indices in increasing order.
    const auto& ea = a.entries();
    const auto& eb = b.entries();
    size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
        if (ea[i].first != eb[j].first) {
            // The vector owning the smaller index is lex-greater.
            return ea[i].first > eb[j].first;
        }
        if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
        ++i; ++j;
    }
    // One is a prefix of the other: the one with remaining entries has the
    // earliest extra variable, making it lex-greater.
    return i == ea.size() && j != eb.size();
}

ExponentVector meet_exponents(std::span<const ExponentVector> s) {
    if (s.empty()) throw EmptySet("meet_exponents: empty set");
    ExponentVector m = s[0];
    for (size_t i = 1; i < s.size(); ++i) m = ExponentVector::meet(m, s[i]);
    return m;
}

} // namespace revring
