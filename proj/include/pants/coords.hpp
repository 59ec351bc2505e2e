#pragma once

#include <array>
#include <cmath>

#include "pants/dual.hpp"
#include "pants/errors.hpp"

namespace pants {

// (sigma1..sigma6, tau1, tau2); index 0..5 are the sigmas, 6 and 7 the taus
template <class T>
struct FGCoordsT {
    std::array<T, 8> x{};

    T& sigma(int i) { return x[i - 1]; }
    const T& sigma(int i) const { return x[i - 1]; }
    T& tau(int i) { return x[5 + i]; }
    const T& tau(int i) const { return x[5 + i]; }
};
using FGCoords = FGCoordsT<double>;

// (l_alpha1, l_alpha2, l_beta1, l_beta2, l_gamma1, l_gamma2)
using LengthVector = std::array<double, 6>;

struct LeafPoint {
    LengthVector leaf;
    double sigma1;
    double tau1;
};

inline FGCoords make_coords(const std::array<double, 8>& x) { return FGCoords{x}; }

void validate(const FGCoords& c);
void validate(const LengthVector& L);
void validate(const LeafPoint& p);

inline LengthVector unipotent_leaf() { return {1, 1, 1, 1, 1, 1}; }
bool is_unipotent(const LengthVector& L, double tol = 1e-12);

template <class T>
std::array<T, 6> casimirs(const FGCoordsT<T>& c) {
    const T tt = c.tau(1) * c.tau(2);
    return {c.sigma(1) * c.sigma(4), tt / (c.sigma(2) * c.sigma(3)),
            c.sigma(3) * c.sigma(6), tt / (c.sigma(4) * c.sigma(5)),
            c.sigma(2) * c.sigma(5), tt / (c.sigma(1) * c.sigma(6))};
}

// Point of the symplectic leaf Q_L with chart coordinates (s1, t1).
template <class T>
FGCoordsT<T> leaf_embed(const LengthVector& L, const T& s1, const T& t1) {
    using std::cbrt;
    const double a1 = L[0], a2 = L[1], b1 = L[2], b2 = L[3], g1 = L[4], g2 = L[5];
    FGCoordsT<T> c;
    c.sigma(1) = s1;
    c.sigma(2) = std::pow(a1 * b2 * g1, 2.0 / 3.0) / (s1 * cbrt(a2 * b1 * g2));
    c.sigma(3) = std::pow(b1 * g2, 2.0 / 3.0) / cbrt(a1 * a2 * b2 * g1) * s1;
    c.sigma(4) = a1 / s1;
    c.sigma(5) = cbrt(a2 * b1 * g1 * g2) / std::pow(a1 * b2, 2.0 / 3.0) * s1;
    c.sigma(6) = cbrt(a1 * a2 * b1 * b2 * g1) / (std::pow(g2, 2.0 / 3.0) * s1);
    c.tau(1) = t1;
    c.tau(2) = cbrt(a1 * a2 * b1 * b2 * g1 * g2) / t1;
    return c;
}

inline FGCoords leaf_embed(const LeafPoint& p) { return leaf_embed<double>(p.leaf, p.sigma1, p.tau1); }

// Casimir-consistent hyperbolic structure with boundary data (l_alpha, l_beta, l_gamma)
FGCoords fuchsian_point(double l_alpha, double l_beta, double l_gamma);

// L(F) = (la, 1/la, lb, 1/lb, lg, 1/lg)
LengthVector fuchsian_leaf(double l_alpha, double l_beta, double l_gamma);

// chart point of fuchsian_point on fuchsian_leaf
LeafPoint fuchsian_chart_point(double l_alpha, double l_beta, double l_gamma);

}  // namespace pants
