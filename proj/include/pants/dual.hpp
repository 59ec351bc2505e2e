#pragma once

// Forward-mode dual numbers with N derivative slots. Nest them
// (Dual<Dual<double,2>,2>) to get second derivatives.

#include <array>
#include <cmath>
#include <type_traits>

namespace pants {

template <class T, int N>
struct Dual {
    T v{};
    std::array<T, N> d{};

    Dual() = default;
    Dual(double x) : v(x) {}  // NOLINT: implicit on purpose, constants mix freely
    template <class U = T, std::enable_if_t<!std::is_same_v<U, double>, int> = 0>
    Dual(const T& x) : v(x) {}  // NOLINT
    Dual(const T& x, const std::array<T, N>& dx) : v(x), d(dx) {}

    static Dual variable(const T& x, int slot) {
        Dual r(x, {});
        r.d[slot] = T(1.0);
        return r;
    }

    Dual& operator+=(const Dual& o) {
        v += o.v;
        for (int i = 0; i < N; ++i) d[i] += o.d[i];
        return *this;
    }
    Dual& operator-=(const Dual& o) {
        v -= o.v;
        for (int i = 0; i < N; ++i) d[i] -= o.d[i];
        return *this;
    }
    Dual& operator*=(const Dual& o) {
        for (int i = 0; i < N; ++i) d[i] = d[i] * o.v + v * o.d[i];
        v *= o.v;
        return *this;
    }
    Dual& operator/=(const Dual& o) {
        T inv = T(1.0) / o.v;
        for (int i = 0; i < N; ++i) d[i] = (d[i] - v * inv * o.d[i]) * inv;
        v *= inv;
        return *this;
    }
};

template <class T>
struct is_dual : std::false_type {};
template <class T, int N>
struct is_dual<Dual<T, N>> : std::true_type {};

template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = -a.v;
    for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
    return r;
}
template <class T, int N>
Dual<T, N> operator+(Dual<T, N> a, const Dual<T, N>& b) { return a += b; }
template <class T, int N>
Dual<T, N> operator-(Dual<T, N> a, const Dual<T, N>& b) { return a -= b; }
template <class T, int N>
Dual<T, N> operator*(Dual<T, N> a, const Dual<T, N>& b) { return a *= b; }
template <class T, int N>
Dual<T, N> operator/(Dual<T, N> a, const Dual<T, N>& b) { return a /= b; }

template <class T, int N>
Dual<T, N> operator+(Dual<T, N> a, double b) { a.v += b; return a; }
template <class T, int N>
Dual<T, N> operator+(double b, Dual<T, N> a) { a.v += b; return a; }
template <class T, int N>
Dual<T, N> operator-(Dual<T, N> a, double b) { a.v -= b; return a; }
template <class T, int N>
Dual<T, N> operator-(double b, const Dual<T, N>& a) { return Dual<T, N>(b) - a; }
template <class T, int N>
Dual<T, N> operator*(Dual<T, N> a, double b) {
    a.v *= b;
    for (auto& x : a.d) x *= b;
    return a;
}
template <class T, int N>
Dual<T, N> operator*(double b, Dual<T, N> a) { return a * b; }
template <class T, int N>
Dual<T, N> operator/(Dual<T, N> a, double b) { return a * (1.0 / b); }
template <class T, int N>
Dual<T, N> operator/(double b, const Dual<T, N>& a) { return Dual<T, N>(b) / a; }

template <class T, int N>
bool operator<(const Dual<T, N>& a, const Dual<T, N>& b) { return a.v < b.v; }
template <class T, int N>
bool operator>(const Dual<T, N>& a, const Dual<T, N>& b) { return a.v > b.v; }

// chain rule helper: f(a) with f'(a) = df
template <class T, int N>
Dual<T, N> chain(const Dual<T, N>& a, const T& f, const T& df) {
    Dual<T, N> r;
    r.v = f;
    for (int i = 0; i < N; ++i) r.d[i] = df * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> exp(const Dual<T, N>& a) {
    using std::exp;
    T e = exp(a.v);
    return chain(a, e, e);
}
template <class T, int N>
Dual<T, N> log(const Dual<T, N>& a) {
    using std::log;
    return chain(a, log(a.v), T(1.0) / a.v);
}
template <class T, int N>
Dual<T, N> sqrt(const Dual<T, N>& a) {
    using std::sqrt;
    T s = sqrt(a.v);
    return chain(a, s, T(0.5) / s);
}
template <class T, int N>
Dual<T, N> cbrt(const Dual<T, N>& a) {
    using std::cbrt;
    T c = cbrt(a.v);
    return chain(a, c, T(1.0) / (3.0 * c * c));
}
template <class T, int N>
Dual<T, N> pow(const Dual<T, N>& a, double p) {
    using std::pow;
    T y = pow(a.v, p);
    return chain(a, y, p * pow(a.v, p - 1.0));
}

// strip all derivative layers
inline double value_of(double x) { return x; }
template <class T, int N>
double value_of(const Dual<T, N>& x) { return value_of(x.v); }

}  // namespace pants
