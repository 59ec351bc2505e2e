#pragma once

#include <cmath>
#include <string>
#include <type_traits>

#include "pants/coords.hpp"
#include "pants/holonomy.hpp"

namespace pants {

enum class CurveKind { fig8, fig8_inv, fig8_sym, commutator, power, theta_web, word };

struct CurveId {
    CurveKind kind = CurveKind::fig8;
    int k = 1;  // power only
    Word word;  // word only

    static CurveId fig8() { return {CurveKind::fig8, 1, {}}; }
    static CurveId fig8_inv() { return {CurveKind::fig8_inv, 1, {}}; }
    static CurveId fig8_sym() { return {CurveKind::fig8_sym, 1, {}}; }
    static CurveId commutator() { return {CurveKind::commutator, 1, {}}; }
    static CurveId power(int k) { return {CurveKind::power, k, {}}; }
    static CurveId theta_web() { return {CurveKind::theta_web, 1, {}}; }
    static CurveId from_word(Word w) { return {CurveKind::word, 1, std::move(w)}; }
};

// fig8 | fig8_inv | fig8_sym | commutator | power:<k> | theta | word:<word>
CurveId parse_curve(const std::string& text);
std::string to_string(const CurveId& c);

// the word realizing a curve (theta_web has none and throws)
Word curve_word(const CurveId& c);

// Deliberate corruption of one closed-form coefficient, used to show the
// equivalence checks can fail.
struct Mutation {
    enum class Target { none, fig8, fig8_inv, commutator, power };
    Target target = Target::none;
};

bool has_closed_form(const LengthVector& L, const CurveId& c);

namespace detail {

inline double bump(const Mutation* m, Mutation::Target t) {
    return m != nullptr && m->target == t ? 1.0 : 0.0;
}

template <class T>
T fig8_closed(const LengthVector& L, const T& s, const T& t, const Mutation* m) {
    using std::cbrt;
    const double a1 = L[0], a2 = L[1], b1 = L[2], b2 = L[3], g1 = L[4], g2 = L[5];
    auto p23 = [](double x) { return std::pow(x, 2.0 / 3.0); };
    const double c2 = 2.0 + bump(m, Mutation::Target::fig8);
    const T pre = 1.0 / (s * t * (std::pow(a1, 4.0 / 3.0) * cbrt(b1) * b2 * p23(a2 * g1 * g2)));
    const T S = s * s * s * t * t * (g2 * cbrt(a2 * b1)) +
                std::pow(a1, 5.0 / 3.0) * p23(b2 * g1 * g2) * ((s + t + 1.0) * (a2 * b2) + s * t * t) +
                s * s * t * (p23(a2 * b1) * cbrt(a1 * b2 * g1 * g2)) * (c2 * s * g2 + g2 + t) +
                s * (std::pow(a1, 4.0 / 3.0) * p23(a2 * b1) * cbrt(b2 * g1 * g2)) *
                    ((s + 1.0) * (b2 * g2) + t * (s * g2 + t)) +
                t * (a1 * a1 * b2 * cbrt(a2 * b1)) * (g1 * (s * g2 + s + t + 1.0) + s * g2) +
                s * s * p23(a1 * b2 * g1 * g2) * (a2 * (b1 * (s * g2 + g2 + t) + t) + t * t) +
                s * t * (a1 * cbrt(a2 * b1)) * (b2 * g1 * (s * g2 + g2 + t + 1.0) + (s + 1.0) * (b2 * g2) + s * t * g2) +
                s * (a1 * cbrt(a2 * b1) * a2 * b2) * (g1 * ((s + t + 1.0) * g2 + t) + t * g2);
    return pre * S;
}

template <class T>
T fig8_inv_closed(const LengthVector& L, const T& s, const T& t, const Mutation* m) {
    using std::cbrt;
    const double a1 = L[0], a2 = L[1], b1 = L[2], b2 = L[3], g1 = L[4], g2 = L[5];
    auto c = [](double x) { return std::cbrt(x); };
    const double c1 = 1.0 + bump(m, Mutation::Target::fig8_inv);
    // recurring cube roots
    const double q1 = c(a2 * a2 * b1 * b2 * b2 * b2 * b2);
    const double q2 = c(a2 * a2 * b1 * b2);
    const double q3 = c(a2 * a2 * b1 * b1 * b1 * b1 * b2);
    const double q4 = c(std::pow(a1, 5) * a2 * g1 * g1 * g2 * g2);
    const double b22 = b1 * b1 * b2 * b2;
    const double r4_1_1 = c(std::pow(a1, 4) * b22 * g1 * g2);
    const double r4_4_1 = c(std::pow(a1, 4) * b22 * std::pow(g1, 4) * g2);
    const double r4_1_4 = c(std::pow(a1, 4) * b22 * g1 * std::pow(g2, 4));
    const double r1_1_1 = c(a1 * b22 * g1 * g2);
    const double r1_4_1 = c(a1 * b22 * std::pow(g1, 4) * g2);
    const double r1_1_4 = c(a1 * b22 * g1 * std::pow(g2, 4));

    const T pre = 1.0 / (s * s * t * (a1 * std::pow(a2 * b1 * b2 * g1 * g2, 2.0 / 3.0)));
    const T inner_a2 =
        s * s * t * r1_1_4 + (t + c1) * (t * r4_1_1 + r4_4_1) +
        s * (t * t * r1_1_1 + r4_4_1 + t * (r1_1_1 + r4_1_1 + r1_4_1 + r4_4_1 + r1_1_4 + r4_1_4));
    const T S =
        (t + 1.0) * (s + t + 1.0) * (a1 * a1 * g1 * q1) +
        s * a1 * (t * (t + 1.0) * (g1 * q1) + s * t * t * (g2 * q2) + s * (s + 1.0) * (g1 * g2 * q3)) +
        s * s * s * t * t * (g2 * q2) +
        s * (s * t * (c(a2) * std::pow(a1 * g1 * g2, 2.0 / 3.0)) * (s * b1 + t * b2) + t * (t + 1.0) * (b2 * q4) +
             (s + t + 1.0) * (b1 * b2 * q4) + s * t * (r4_1_1 + r4_4_1 + r4_1_4) + a2 * inner_a2);
    return pre * S;
}

template <class T>
T commutator_closed(const T& s, const T& t, const Mutation* m) {
    const double c20 = 20.0 + bump(m, Mutation::Target::commutator);
    const T u = t + 1.0;
    const T s2 = s * s, s3 = s2 * s;
    const T num = s3 * s3 * u * u * u + 3.0 * s3 * s2 * u * u * (2.0 * t + 1.0) +
                  3.0 * s2 * s2 * u * u * (5.0 * t + 1.0) +
                  s3 * (c20 * t * t * t + 42.0 * t * t + 27.0 * t + 2.0) +
                  3.0 * s2 * u * u * (5.0 * t + 1.0) + 3.0 * s * u * u * (2.0 * t + 1.0) + u * u * u;
    return num / (s3 * t);
}

template <class T>
T power_closed(int k, const T& s, const T& t, const Mutation* m) {
    const double c6 = 6.0 + bump(m, Mutation::Target::power);
    const double kk = k;
    const T w = (s + 1.0) * (s + 1.0) * (s + 1.0) * (t + 1.0) * (t + 1.0);
    return (kk * kk * w + kk * w + c6 * s * t) / (2.0 * s * t);
}

// tr(rho(alpha)) tr(rho(gamma)) from the diagonals of the triangular matrices
template <class T>
T theta_constant_closed(const LengthVector& L, const T& s, const T& t) {
    using std::cbrt;
    const FGCoordsT<T> c = leaf_embed(L, s, t);
    const T &s1 = c.sigma(1), &s2 = c.sigma(2), &s3 = c.sigma(3), &s4 = c.sigma(4),
            &s5 = c.sigma(5), &s6 = c.sigma(6), &t1 = c.tau(1), &t2 = c.tau(2);
    const T trA = cbrt(t1 * t1 * t2 * t2 / (s1 * s2 * s2 * s3 * s3 * s4)) +
                  cbrt(s2 * s3 / (s1 * s4 * t1 * t2)) + cbrt(s1 * s1 * s2 * s3 * s4 * s4 / (t1 * t2));
    const T trC = cbrt(s1 * s2 * s2 * s5 * s5 * s6 / (t1 * t2)) + cbrt(s1 * s6 / (s2 * s5 * t1 * t2)) +
                  cbrt(t1 * t1 * t2 * t2 / (s1 * s1 * s2 * s5 * s6 * s6));
    return trA * trC;
}

}  // namespace detail

template <class T>
T trace_closed_form(const LengthVector& L, const T& s, const T& t, const CurveId& c,
                    const Mutation* m = nullptr) {
    switch (c.kind) {
        case CurveKind::fig8: return detail::fig8_closed(L, s, t, m);
        case CurveKind::fig8_inv: return detail::fig8_inv_closed(L, s, t, m);
        case CurveKind::fig8_sym: return detail::fig8_closed(L, s, t, m) + detail::fig8_inv_closed(L, s, t, m);
        case CurveKind::theta_web:
            return detail::theta_constant_closed(L, s, t) - detail::fig8_closed(L, s, t, m);
        case CurveKind::commutator:
        case CurveKind::power:
            if (!is_unipotent(L)) throw DomainError("closed form unavailable; use matrix oracle");
            return c.kind == CurveKind::commutator ? detail::commutator_closed(s, t, m)
                                                   : detail::power_closed(c.k, s, t, m);
        case CurveKind::word: break;
    }
    throw DomainError("closed form unavailable; use matrix oracle");
}

namespace detail {

template <class T>
T trace_matrix_oracle_raw(const LengthVector& L, const T& s, const T& t, const CurveId& c) {
    const FGCoordsT<T> x = leaf_embed(L, s, t);
    const Peripherals<T> p = peripheral_holonomies(x);
    switch (c.kind) {
        case CurveKind::fig8_sym:
            return trace3(holonomy_word(p, curve_word(CurveId::fig8()))) +
                   trace3(holonomy_word(p, curve_word(CurveId::fig8_inv())));
        case CurveKind::theta_web:
            return trace3(p.A) * trace3(p.C) - trace3(holonomy_word(p, curve_word(CurveId::fig8())));
        default: return trace3(holonomy_word(p, curve_word(c)));
    }
}

}  // namespace detail

// Plain doubles go through binary128 so that long words do not cancel away
// the answer; dual numbers stay in their own arithmetic.
template <class T>
T trace_matrix_oracle(const LengthVector& L, const T& s, const T& t, const CurveId& c) {
    if constexpr (std::is_same_v<T, double>)
        return static_cast<double>(detail::trace_matrix_oracle_raw<Quad>(L, Quad(s), Quad(t), c));
    else
        return detail::trace_matrix_oracle_raw<T>(L, s, t, c);
}

enum class Evaluator { automatic, closed_form, oracle };

template <class T>
T trace_eval(const LengthVector& L, const T& s, const T& t, const CurveId& c,
             Evaluator ev = Evaluator::automatic) {
    if (ev == Evaluator::oracle || (ev == Evaluator::automatic && !has_closed_form(L, c)))
        return trace_matrix_oracle(L, s, t, c);
    return trace_closed_form(L, s, t, c);
}

inline double trace_closed_form(const LeafPoint& p, const CurveId& c) {
    return trace_closed_form<double>(p.leaf, p.sigma1, p.tau1, c);
}
inline double trace_matrix_oracle(const LeafPoint& p, const CurveId& c) {
    return trace_matrix_oracle<double>(p.leaf, p.sigma1, p.tau1, c);
}

// tr(rho(alpha)) tr(rho(gamma)), constant on the leaf
double theta_constant(const LengthVector& L);

}  // namespace pants
