#include "revring/integer.hpp"

#include "revring/errors.hpp"

namespace revring {

Int int_mod(const Int& a, const Int& n) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool int_is_prime(const Int& a) {
    Int n = int_abs(a);
    if (n < 2) return false;
    for (Int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<Int> int_factor(const Int& a) {
    if (a == 0) throw ZeroElement("int_factor: zero has no factorization");
    std::vector<Int> out;
    Int n = int_abs(a);
    for (Int d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Int int_radical(const Int& a) {
    Int r = 1;
    Int prev = 0;
    for (const Int& p : int_factor(a)) {
        if (p != prev) r *= p;
        prev = p;
    }
    return r;
}

size_t int_omega(const Int& a) { return int_factor(a).size(); }

ExtGcd int_extended_gcd(const Int& a, const Int& b) {
    // Iterative Euclid carrying the coefficient rows.
    Int r0 = a, r1 = b;
    Int x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;  // truncated division is fine: invariants hold for any q
        Int r2 = r0 - q * r1;
        Int x2 = x0 - q * x1;
        Int y2 = y0 - q * y1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
        y0 = y1; y1 = y2;
    }
    if (r0 < 0) { r0 = -r0; x0 = -x0; y0 = -y0; }
    return {r0, x0, y0};
}

std::vector<Int> int_divisors(const Int& a) {
    if (a == 0) throw ZeroElement("int_divisors: zero");
    Int n = int_abs(a);
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
    return small;
}

} // namespace revring
