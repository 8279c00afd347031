#include "hodgeorbit/rational.hpp"

namespace hodgeorbit {

std::string to_string(const BigInt& x) { return x.str(); }

std::string to_string(const Rational& x) {
    const BigInt& den = boost::multiprecision::denominator(x);
    if (den == 1) return boost::multiprecision::numerator(x).str();
    return boost::multiprecision::numerator(x).str() + "/" + den.str();
}

bool is_integer(const Rational& x) { return boost::multiprecision::denominator(x) == 1; }

std::string to_string(const Gaussian& z) {
    if (z.im == 0) return to_string(z.re);
    std::string im = to_string(z.im) + "i";
    if (z.re == 0) return im;
    return to_string(z.re) + (z.im > 0 ? "+" : "") + im;
}

BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace hodgeorbit
