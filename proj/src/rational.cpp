#include "revring/rational.hpp"

namespace revring {

Rat Rat::pow(unsigned long k) const {
    Rat base = *this, acc = 1;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

} // namespace revring
