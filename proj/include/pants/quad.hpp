#pragma once

// Binary128 scalar for the matrix oracle. Long words of peripheral matrices
// cancel badly in double precision; the closed forms do not.

#include <cmath>

namespace pants {

struct Quad {
    __float128 v = 0;

    Quad() = default;
    Quad(double x) : v(x) {}  // NOLINT
    explicit operator double() const { return static_cast<double>(v); }

    Quad& operator+=(const Quad& o) { v += o.v; return *this; }
    Quad& operator-=(const Quad& o) { v -= o.v; return *this; }
    Quad& operator*=(const Quad& o) { v *= o.v; return *this; }
    Quad& operator/=(const Quad& o) { v /= o.v; return *this; }

    friend Quad operator-(const Quad& a) { return from(-a.v); }
    friend Quad operator+(Quad a, const Quad& b) { return a += b; }
    friend Quad operator-(Quad a, const Quad& b) { return a -= b; }
    friend Quad operator*(Quad a, const Quad& b) { return a *= b; }
    friend Quad operator/(Quad a, const Quad& b) { return a /= b; }
    friend bool operator<(const Quad& a, const Quad& b) { return a.v < b.v; }
    friend bool operator>(const Quad& a, const Quad& b) { return a.v > b.v; }

    static Quad from(__float128 x) {
        Quad q;
        q.v = x;
        return q;
    }
};

// double estimate polished by two Newton steps
inline Quad cbrt(const Quad& a) {
    if (a.v == 0) return a;
    __float128 x = std::cbrt(static_cast<double>(a.v));
    for (int i = 0; i < 2; ++i) x -= (x * x * x - a.v) / (3 * x * x);
    return Quad::from(x);
}

inline Quad sqrt(const Quad& a) {
    if (!(a.v > 0)) return Quad(std::sqrt(static_cast<double>(a.v)));
    __float128 x = std::sqrt(static_cast<double>(a.v));
    for (int i = 0; i < 2; ++i) x = (x + a.v / x) / 2;
    return Quad::from(x);
}

inline Quad abs(const Quad& a) { return a.v < 0 ? -a : a; }

inline double value_of(const Quad& x) { return static_cast<double>(x.v); }

}  // namespace pants
