#include "pants/proj_linalg.hpp"

#include <algorithm>
#include <numbers>

namespace pants {

namespace {

double max_abs(const Mat3& m) {
    double s = 0.0;
    for (const auto& row : m)
        for (double x : row) s = std::max(s, std::abs(x));
    return s;
}

bool is_upper(const Mat3& m, double tol) {
    return std::abs(m[1][0]) <= tol && std::abs(m[2][0]) <= tol && std::abs(m[2][1]) <= tol;
}

bool is_lower(const Mat3& m, double tol) {
    return std::abs(m[0][1]) <= tol && std::abs(m[0][2]) <= tol && std::abs(m[1][2]) <= tol;
}

}  // namespace

std::array<double, 3> eigenvalues_real3(const Mat3& m) {
    const double scale = max_abs(m);
    std::array<double, 3> ev{};
    if (scale == 0.0) return ev;

    if (is_upper(m, 1e-12 * scale) || is_lower(m, 1e-12 * scale)) {
        ev = {m[0][0], m[1][1], m[2][2]};
        std::sort(ev.begin(), ev.end());
        return ev;
    }

    // lambda^3 + a lambda^2 + b lambda + c
    const double a = -trace3(m);
    // the principal minors cancel heavily for large entries
    Mat3T<Quad> mq;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) mq[i][j] = Quad(m[i][j]);
    const Quad bq = mq[0][0] * mq[1][1] - mq[0][1] * mq[1][0] + mq[0][0] * mq[2][2] - mq[0][2] * mq[2][0] +
                    mq[1][1] * mq[2][2] - mq[1][2] * mq[2][1];
    const Quad cq = -det3_raw(mq);
    const Quad aq = -(mq[0][0] + mq[1][1] + mq[2][2]);
    const double b = static_cast<double>(bq);
    const double c = static_cast<double>(cq);

    const double p = b - a * a / 3.0;
    const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    const double shift = -a / 3.0;
    const double s2 = scale * scale;

    if (-p <= 1e-14 * s2) {
        if (std::abs(p) > 1e-10 * s2) throw NumericalError("complex spectrum");
        double x = std::cbrt(-q);
        ev = {shift + x, shift + x, shift + x};
        return ev;
    }

    const double disc = 4.0 * p * p * p + 27.0 * q * q;
    const double mag = 4.0 * std::abs(p * p * p) + 27.0 * q * q;
    if (disc > 1e-9 * mag + 1e-24 * s2 * s2 * s2) throw NumericalError("complex spectrum");

    const double r = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * r);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    for (int k = 0; k < 3; ++k)
        ev[k] = shift + r * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0);

    for (double& x : ev) {
        for (int it = 0; it < 3; ++it) {
            const Quad xq(x);
            const double f = static_cast<double>(((xq + aq) * xq + bq) * xq + cq);
            const double df = (3.0 * x + 2.0 * a) * x + b;
            if (df == 0.0) break;
            const double step = f / df;
            if (!std::isfinite(step) || std::abs(step) > 1e-6 * (1.0 + std::abs(x))) break;
            x -= step;
        }
    }
    std::sort(ev.begin(), ev.end());
    return ev;
}

std::array<double, 3> eigenvalues_real3(const Mat3T<Quad>& m) {
    Mat3 md;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) md[i][j] = static_cast<double>(m[i][j]);
    std::array<double, 3> ev = eigenvalues_real3(md);
    if (ev[0] == ev[1] && ev[1] == ev[2]) return ev;  // triangular or triple root

    const Quad a = -(m[0][0] + m[1][1] + m[2][2]);
    const Quad b = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2] - m[0][2] * m[2][0] +
                   m[1][1] * m[2][2] - m[1][2] * m[2][1];
    const Quad c = -det3_raw(m);

    const int iso = ev[1] - ev[0] > ev[2] - ev[1] ? 0 : 2;
    Quad r(ev[iso]);
    for (int it = 0; it < 8; ++it) {
        const Quad f = ((r + a) * r + b) * r + c;
        const Quad df = (3.0 * r + 2.0 * a) * r + b;
        if (df.v == 0) break;
        const Quad step = f / df;
        r -= step;
        if (abs(step).v <= 1e-30 * (1 + abs(r).v)) break;
    }
    // x^3 + a x^2 + b x + c = (x - r)(x^2 + p x + q)
    const Quad p = a + r;
    const Quad q = b + p * r;
    Quad disc = p * p - 4.0 * q;
    const Quad scale = p * p + abs(q);
    if (disc.v < 0) {
        if (disc.v < -1e-24 * scale.v) throw NumericalError("complex spectrum");
        disc = Quad(0.0);
    }
    const Quad sq = sqrt(disc);
    const Quad big = p.v >= 0 ? -(p + sq) / 2.0 : (sq - p) / 2.0;
    const Quad small = big.v != 0 ? q / big : Quad(0.0);
    ev = {static_cast<double>(r), static_cast<double>(big), static_cast<double>(small)};
    std::sort(ev.begin(), ev.end());
    return ev;
}

double projective_distance(const Mat3& a, const Mat3& b) {
    Mat3 na = normalize_sl3(a);
    Mat3 nb = normalize_sl3(b);
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(na[i][j] - nb[i][j]));
    return d;
}

bool projectively_equal(const Mat3& a, const Mat3& b, double tol) {
    return projective_distance(a, b) <= tol;
}

}  // namespace pants
