#pragma once

#include <array>
#include <cmath>
#include <type_traits>

#include "pants/dual.hpp"
#include "pants/errors.hpp"
#include "pants/quad.hpp"

namespace pants {

template <class T>
using Mat3T = std::array<std::array<T, 3>, 3>;
using Mat3 = Mat3T<double>;

template <class T = double>
Mat3T<T> identity3() {
    Mat3T<T> m{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = T(i == j ? 1.0 : 0.0);
    return m;
}

template <class T>
Mat3T<T> mul(const Mat3T<T>& a, const Mat3T<T>& b) {
    Mat3T<T> r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            T s = a[i][0] * b[0][j];
            s += a[i][1] * b[1][j];
            s += a[i][2] * b[2][j];
            r[i][j] = s;
        }
    return r;
}

template <class T>
T det3_raw(const Mat3T<T>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Cofactor expansion. For doubles the products are accumulated in binary128:
// holonomies have entries in the hundreds and determinant one, and the
// cancellation would otherwise leak into every normalized entry.
template <class T>
T det3(const Mat3T<T>& m) {
    if constexpr (std::is_same_v<T, double>) {
        Mat3T<Quad> q;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) q[i][j] = Quad(m[i][j]);
        return static_cast<double>(det3_raw(q));
    } else {
        return det3_raw(m);
    }
}

template <class T>
T trace3(const Mat3T<T>& m) {
    return m[0][0] + m[1][1] + m[2][2];
}

template <class T>
Mat3T<T> scaled(Mat3T<T> m, const T& s) {
    for (auto& row : m)
        for (auto& x : row) x = x * s;
    return m;
}

template <class T>
Mat3T<T> inverse3(const Mat3T<T>& m) {
    T d = det3(m);
    if (value_of(d) == 0.0) throw NumericalError("singular matrix");
    Mat3T<T> r{};
    r[0][0] = m[1][1] * m[2][2] - m[1][2] * m[2][1];
    r[0][1] = m[0][2] * m[2][1] - m[0][1] * m[2][2];
    r[0][2] = m[0][1] * m[1][2] - m[0][2] * m[1][1];
    r[1][0] = m[1][2] * m[2][0] - m[1][0] * m[2][2];
    r[1][1] = m[0][0] * m[2][2] - m[0][2] * m[2][0];
    r[1][2] = m[0][2] * m[1][0] - m[0][0] * m[1][2];
    r[2][0] = m[1][0] * m[2][1] - m[1][1] * m[2][0];
    r[2][1] = m[0][1] * m[2][0] - m[0][0] * m[2][1];
    r[2][2] = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return scaled(r, T(1.0) / d);
}

// m / cbrt(det m); the real cube root makes the SL(3) lift unique
template <class T>
Mat3T<T> normalize_sl3(const Mat3T<T>& m) {
    using std::cbrt;
    T d = det3(m);
    if (value_of(d) == 0.0) throw NumericalError("singular matrix");
    return scaled(m, T(1.0) / cbrt(d));
}

template <class T>
Mat3T<T> power3(const Mat3T<T>& m, int k) {
    Mat3T<T> base = k < 0 ? inverse3(m) : m;
    Mat3T<T> r = identity3<T>();
    for (int i = 0; i < (k < 0 ? -k : k); ++i) r = mul(r, base);
    return r;
}

// Real spectrum of a 3x3 matrix. Triangular input is read off the diagonal;
// otherwise the characteristic cubic is solved trigonometrically and polished.
std::array<double, 3> eigenvalues_real3(const Mat3& m);

// Same for a matrix held in binary128. The isolated root is polished by Newton
// and the close pair comes from the deflated quadratic, so nearly repeated
// eigenvalues keep their full double accuracy.
std::array<double, 3> eigenvalues_real3(const Mat3T<Quad>& m);

// max-entry distance between the SL(3) representatives
double projective_distance(const Mat3& a, const Mat3& b);

bool projectively_equal(const Mat3& a, const Mat3& b, double tol = 1e-9);

}  // namespace pants
