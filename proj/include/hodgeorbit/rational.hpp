#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace hodgeorbit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& x);
std::string to_string(const Rational& x);
bool is_integer(const Rational& x);

// x + iy with rational parts.
struct Gaussian {
    Rational re, im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(int r) : re(r) {}

    static Gaussian i() { return {0, 1}; }

    bool is_zero() const { return re == 0 && im == 0; }
    Gaussian conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    Gaussian& operator+=(const Gaussian& o) { re += o.re; im += o.im; return *this; }
    Gaussian& operator-=(const Gaussian& o) { re -= o.re; im -= o.im; return *this; }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o) {
        Rational n = o.norm();
        *this *= o.conj();
        re /= n;
        im /= n;
        return *this;
    }
    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

std::string to_string(const Gaussian& z);

BigInt factorial(unsigned n);

}  // namespace hodgeorbit
