#pragma once

#include "revring/errors.hpp"
#include "revring/integer.hpp"

#include <string>

namespace revring {

// Exact rational number, always in lowest terms with positive denominator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long n) : num_(n), den_(1) {}           // NOLINT: implicit by design
    Rat(const Int& n) : num_(n), den_(1) {}     // NOLINT
    Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw ZeroDenominator("Rat: zero denominator");
        reduce();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return int_sign(num_); }

    Rat operator-() const { return Rat(-num_, den_, NoReduce{}); }

    Rat operator+(const Rat& o) const {
        return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rat operator-(const Rat& o) const {
        return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rat operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }
    Rat operator/(const Rat& o) const {
        if (o.num_ == 0) throw ZeroDenominator("Rat: division by zero");
        return Rat(num_ * o.den_, den_ * o.num_);
    }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }
    bool operator<=(const Rat& o) const { return !(o < *this); }
    bool operator>(const Rat& o) const { return o < *this; }
    bool operator>=(const Rat& o) const { return !(*this < o); }

    Rat abs() const { return num_ < 0 ? -*this : *this; }
    Rat inverse() const {
        if (num_ == 0) throw ZeroDenominator("Rat: inverse of zero");
        return Rat(den_, num_);
    }

    Rat pow(unsigned long k) const;  // repeated squaring

    // "p" when integral, "p/q" otherwise.
    std::string str() const {
        return is_integer() ? int_str(num_) : int_str(num_) + "/" + int_str(den_);
    }

private:
    struct NoReduce {};
    Rat(Int n, Int d, NoReduce) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (num_ == 0) { den_ = 1; return; }
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        Int g = int_gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    Int num_, den_;
};

} // namespace revring
