#include "cychains/rational.hpp"

namespace cychains {

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::invalid_argument("Rational: 0 to negative power");
        return Rational(0);
    }
    Rational base = e > 0 ? *this : Rational(1) / *this;
    long k = e > 0 ? e : -e;
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

Rational Rational::factorial(int n) {
    Rational acc(1);
    for (int i = 2; i <= n; ++i) acc *= Rational(i);
    return acc;
}

} // namespace cychains
