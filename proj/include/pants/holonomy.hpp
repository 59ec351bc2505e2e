#pragma once

#include <array>
#include <string>
#include <type_traits>
#include <vector>

#include "pants/coords.hpp"
#include "pants/proj_linalg.hpp"
#include "pants/quad.hpp"

namespace pants {

template <class T>
void require_positive_arg(const T& x) {
    if (!(value_of(x) > 0.0)) throw DomainError("matrix argument must be positive");
}

template <class T>
Mat3T<T> matrix_T(const T& x) {
    using std::cbrt;
    require_positive_arg(x);
    const T k = T(1.0) / cbrt(x);
    Mat3T<T> m{};
    m[0] = {T(0.0), T(0.0), k};
    m[1] = {T(0.0), -k, -k};
    m[2] = {x * k, (x + 1.0) * k, k};
    return m;
}

template <class T>
Mat3T<T> matrix_E(const T& z, const T& w) {
    using std::cbrt;
    require_positive_arg(z);
    require_positive_arg(w);
    const T k = cbrt(z / w);
    Mat3T<T> m{};
    m[0] = {T(0.0), T(0.0), k / z};
    m[1] = {T(0.0), -k, T(0.0)};
    m[2] = {w * k, T(0.0), T(0.0)};
    return m;
}

template <class T>
struct Peripherals {
    Mat3T<T> A, B, C;
};

// A, B, C as products of the elementary matrices
template <class T>
Peripherals<T> peripheral_products(const FGCoordsT<T>& c) {
    const T &s1 = c.sigma(1), &s2 = c.sigma(2), &s3 = c.sigma(3), &s4 = c.sigma(4),
            &s5 = c.sigma(5), &s6 = c.sigma(6), &t1 = c.tau(1), &t2 = c.tau(2);
    Peripherals<T> p;
    p.A = mul(mul(mul(matrix_E(s2, s1), matrix_T(t2)), matrix_E(s3, s4)), matrix_T(t1));
    p.C = mul(mul(mul(matrix_T(t1), matrix_E(s6, s5)), matrix_T(t2)), matrix_E(s1, s2));
    const Mat3T<T> ti = inverse3(matrix_T(t1));
    p.B = mul(mul(mul(mul(ti, matrix_E(s4, s3)), matrix_T(t2)), matrix_E(s5, s6)), ti);
    p.A = normalize_sl3(p.A);
    p.B = normalize_sl3(p.B);
    p.C = normalize_sl3(p.C);
    return p;
}

// A, B, C from their closed-form entries
template <class T>
Peripherals<T> peripheral_holonomies(const FGCoordsT<T>& c) {
    using std::cbrt;
    const T &s1 = c.sigma(1), &s2 = c.sigma(2), &s3 = c.sigma(3), &s4 = c.sigma(4),
            &s5 = c.sigma(5), &s6 = c.sigma(6), &t1 = c.tau(1), &t2 = c.tau(2);
    const T z(0.0);
    Peripherals<T> p;

    {
        const T k = cbrt(s2 * s3 / (s1 * s4 * t1 * t2));
        p.A[0] = {cbrt(t1 * t1 * t2 * t2 / (s1 * s2 * s2 * s3 * s3 * s4)),
                  k * (s3 * t2 + s3 + t1 * t2 + t2) / (s2 * s3),
                  k * (s3 * (s4 + t2 + 1.0) + t2) / (s2 * s3)};
        p.A[1] = {z, k, (s4 + 1.0) * k};
        p.A[2] = {z, z, cbrt(s1 * s1 * s2 * s3 * s4 * s4 / (t1 * t2))};
    }
    {
        const T k = cbrt(s1 * s6 / (s2 * s5 * t1 * t2));
        p.C[0] = {cbrt(s1 * s2 * s2 * s5 * s5 * s6 / (t1 * t2)), z, z};
        p.C[1] = {-s2 * (s5 + 1.0) * k, k, z};
        p.C[2] = {s2 * (s6 * (s5 + t1 + 1.0) + t1) * k / s6,
                  -k * (s6 * (t1 + 1.0) + t1 * (t2 + 1.0)) / s6,
                  cbrt(t1 * t1 * t2 * t2 / (s1 * s1 * s2 * s5 * s6 * s6))};
    }
    {
        const T k = cbrt(s4 * s5 / (s3 * s6 * t1 * t2));
        const T k4 = cbrt(s4 * s5 / (s3 * s6 * t1 * t1 * t1 * t1 * t2));
        const T d = cbrt(s3 * s4 * s4 * s5 * s5 * s6 * t2);
        const T t23 = cbrt(t1 * t1);
        p.B[0] = {k * (s4 * s5 * (s6 * (s3 + t1 + 1.0) + t1 + 1.0) + t1 * (s5 * (s6 + t2 + 1.0) + t2)) / (s4 * s5),
                  k4 * (s4 * (t1 + 1.0) * (s6 * (s3 + t1 + 1.0) + t1) + t1 * (s6 * (t1 + 1.0) + t1 * (t2 + 1.0))) / s4,
                  s6 * (s4 * (s3 + t1 + 1.0) + t1) * k4 / s4};
        p.B[1] = {-t23 * (s5 * (s6 + s4 * (s6 + 1.0) + t2 + 1.0) + t2) / d,
                  -k * ((s4 + 1.0) * s6 * (t1 + 1.0) + t1 * (s4 + t2 + 1.0)) / s4,
                  -(s4 + 1.0) * s6 * k / s4};
        p.B[2] = {t23 * (s5 * (s6 + t2 + 1.0) + t2) / d,
                  k * (s6 * (t1 + 1.0) + t1 * (t2 + 1.0)) / s4,
                  cbrt(s5 * s6 * s6 / (s3 * s4 * s4 * t1 * t2))};
    }
    p.A = normalize_sl3(p.A);
    p.B = normalize_sl3(p.B);
    p.C = normalize_sl3(p.C);
    return p;
}

struct Token {
    char gen;  // 'a', 'b' or 'c'
    int exp;   // nonzero
};
using Word = std::vector<Token>;

// "a c^-1", "a^3 c^-1", ""; throws DomainError on bad grammar
Word parse_word(const std::string& text);
std::string to_string(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

// left to right product of peripheral matrices, renormalized to SL(3)
template <class T>
Mat3T<T> holonomy_word(const Peripherals<T>& p, const Word& w) {
    Mat3T<T> m = identity3<T>();
    for (const Token& tk : w) {
        const Mat3T<T>& g = tk.gen == 'a' ? p.A : tk.gen == 'b' ? p.B : p.C;
        m = mul(m, power3(g, tk.exp));
    }
    return w.empty() ? m : normalize_sl3(m);
}

// double input is evaluated in binary128 and rounded once at the end
template <class T>
Mat3T<T> holonomy_word(const FGCoordsT<T>& c, const Word& w) {
    if constexpr (std::is_same_v<T, double>) {
        FGCoordsT<Quad> q;
        for (int i = 0; i < 8; ++i) q.x[i] = Quad(c.x[i]);
        const Mat3T<Quad> m = holonomy_word(peripheral_holonomies(q), w);
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) r[i][j] = static_cast<double>(m[i][j]);
        return r;
    } else {
        return holonomy_word(peripheral_holonomies(c), w);
    }
}

struct RatioCheck {
    std::array<double, 3> eigenvalues;
    std::array<double, 2> predicted;
    std::array<double, 2> rel_error;  // distance to the closest pairwise ratio
    bool matched;
};

struct EigenRatioReport {
    std::array<RatioCheck, 3> per;  // alpha, beta, gamma
    bool all_match;
    double worst_rel_error;
};

EigenRatioReport eigenvalue_ratio_report(const FGCoords& c, double tol = 1e-8);
// same, against externally supplied predicted ratios (alpha1, alpha2, beta1, beta2, gamma1, gamma2)
EigenRatioReport eigenvalue_ratio_report(const FGCoords& c, const std::array<double, 6>& predicted,
                                         double tol = 1e-8);

}  // namespace pants
