#include "revring/multipoly.hpp"

#include <algorithm>

namespace revring {

MultiPoly MultiPoly::constant(const Rat& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(ExponentVector{}, c);
    return p;
}

MultiPoly MultiPoly::variable(uint32_t index, uint32_t exp) {
    return monomial(ExponentVector::variable(index, exp), 1);
}

MultiPoly MultiPoly::monomial(const ExponentVector& e, const Rat& c) {
    MultiPoly p;
    if (!c.is_zero()) p.terms_.emplace(e, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
}

Rat MultiPoly::constant_value() const { return coeff(ExponentVector{}); }

Rat MultiPoly::coeff(const ExponentVector& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

long MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    return static_cast<long>(terms_.rbegin()->first.total_degree());
}

const ExponentVector& MultiPoly::lead_exponent() const {
    if (terms_.empty()) throw Error("lead_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

const Rat& MultiPoly::lead_coeff() const {
    if (terms_.empty()) throw Error("lead_coeff of zero polynomial");
    return terms_.rbegin()->second;
}

std::vector<ExponentVector> MultiPoly::support() const {
    std::vector<ExponentVector> s;
    s.reserve(terms_.size());
    for (const auto& [e, c] : terms_) s.push_back(e);
    return s;
}

std::vector<uint32_t> MultiPoly::variables() const {
    std::vector<uint32_t> vars;
    for (const auto& [e, c] : terms_)
        for (uint32_t v : e.support()) vars.push_back(v);
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
    return vars;
}

void MultiPoly::add_term(const ExponentVector& e, const Rat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

MultiPoly MultiPoly::scale(const Rat& c) const {
    MultiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::pow(unsigned long k) const {
    MultiPoly acc = constant(1), base = *this;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

bool MultiPoly::is_integral() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

std::optional<uint32_t> MultiPoly::sole_variable() const {
    auto vars = variables();
    if (vars.empty()) return std::nullopt;
    if (vars.size() > 1) throw NotUnivariate("polynomial mentions several variables");
    return vars[0];
}

long MultiPoly::degree_in(uint32_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<long>(e.get(var)));
    return d;
}

Rat MultiPoly::coeff_of(uint32_t var, uint32_t k) const {
    return coeff(ExponentVector::variable(var, k));
}

MultiPoly MultiPoly::from_coeffs(uint32_t var, std::span<const Rat> coeffs) {
    MultiPoly p;
    for (size_t k = 0; k < coeffs.size(); ++k)
        p.add_term(ExponentVector::variable(var, static_cast<uint32_t>(k)), coeffs[k]);
    return p;
}

Rat MultiPoly::eval(uint32_t var, const Rat& point) const {
    Rat acc = 0;
    for (const auto& [e, c] : terms_) {
        if (!e.is_zero() && (e.support().size() > 1 || e.support()[0] != var))
            throw NotUnivariate("eval: unexpected variable");
        acc += c * point.pow(e.get(var));
    }
    return acc;
}

MultiPoly MultiPoly::divide_monomial(const ExponentVector& e) const {
    MultiPoly r;
    for (const auto& [f, c] : terms_) r.terms_.emplace(f.minus(e), c);
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const Rat c = it->second;
        const Rat a = c.abs();
        if (out.empty()) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        if (it->first.is_zero()) {
            out += a.str();
        } else if (a == Rat(1)) {
            out += it->first.str();
        } else {
            out += a.str() + "*" + it->first.str();
        }
    }
    return out;
}

uint32_t common_univariate_variable(std::span<const MultiPoly> ps, uint32_t fallback) {
    std::optional<uint32_t> var;
    for (const MultiPoly& p : ps) {
        auto v = p.sole_variable();
        if (!v) continue;
        if (var && *var != *v) throw NotUnivariate("polynomials in different variables");
        var = v;
    }
    return var.value_or(fallback);
}

} // namespace revring
