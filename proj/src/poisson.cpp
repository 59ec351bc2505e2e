#include "pants/poisson.hpp"

#include <cmath>

namespace pants {

namespace {

int alt(int i) { return i % 2 == 1 ? 1 : -1; }  // (-1)^(i+1)

EpsilonMatrix build_epsilon() {
    EpsilonMatrix e{};
    for (int i = 1; i <= 6; ++i) {
        e[i - 1][6] = alt(i);
        e[i - 1][7] = -alt(i);
        e[6][i - 1] = -alt(i);
        e[7][i - 1] = alt(i);
    }
    return e;
}

}  // namespace

const EpsilonMatrix& epsilon() {
    static const EpsilonMatrix e = build_epsilon();
    return e;
}

double bracket_coordinates(int i, int j, const FGCoords& c) {
    if (i < 1 || i > 8 || j < 1 || j > 8) throw DomainError("coordinate index out of range");
    return 2.0 * epsilon()[i - 1][j - 1] * c.x[i - 1] * c.x[j - 1];
}

double LogLinearFunction::operator()(const FGCoords& c) const {
    double r = constant;
    for (int i = 0; i < 8; ++i)
        if (coeff[i] != 0.0) r += coeff[i] * std::log(c.x[i]);
    return r;
}

LogLinearFunction hamiltonian_I() {
    LogLinearFunction f;
    f.coeff[6] = 0.25;
    f.coeff[7] = -0.25;
    return f;
}

LogLinearFunction hamiltonian_E() {
    LogLinearFunction f;
    for (int i = 1; i <= 6; ++i) f.coeff[i - 1] = -alt(i) / 12.0;
    return f;
}

LogLinearFunction log_coordinate(int i) {
    if (i < 1 || i > 8) throw DomainError("coordinate index out of range");
    LogLinearFunction f;
    f.coeff[i - 1] = 1.0;
    return f;
}

LogLinearFunction log_casimir(int k) {
    LogLinearFunction f;
    switch (k) {
        case 0: f.coeff = {1, 0, 0, 1, 0, 0, 0, 0}; break;
        case 1: f.coeff = {0, -1, -1, 0, 0, 0, 1, 1}; break;
        case 2: f.coeff = {0, 0, 1, 0, 0, 1, 0, 0}; break;
        case 3: f.coeff = {0, 0, 0, -1, -1, 0, 1, 1}; break;
        case 4: f.coeff = {0, 1, 0, 0, 1, 0, 0, 0}; break;
        case 5: f.coeff = {-1, 0, 0, 0, 0, -1, 1, 1}; break;
        default: throw DomainError("casimir index out of range");
    }
    return f;
}

double bracket_log_linear(const LogLinearFunction& f, const LogLinearFunction& g) {
    const EpsilonMatrix& e = epsilon();
    double r = 0.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r += f.coeff[i] * e[i][j] * g.coeff[j];
    return 2.0 * r;
}

FGCoords eruption_flow(const FGCoords& c, double t) {
    FGCoords r = c;
    r.tau(1) *= std::exp(t);
    r.tau(2) *= std::exp(-t);
    return r;
}

FGCoords hexagon_flow(const FGCoords& c, double t) {
    FGCoords r = c;
    const double up = std::exp(t), down = std::exp(-t);
    for (int i = 1; i <= 6; ++i) r.sigma(i) *= alt(i) > 0 ? up : down;
    return r;
}

FGCoords mixed_flow(const FGCoords& c, double a, double t, MixedVariant v) {
    if (v == MixedVariant::I_aE) return hexagon_flow(eruption_flow(c, a * t), t);
    return hexagon_flow(eruption_flow(c, t), a * t);
}

LeafPoint eruption_flow(const LeafPoint& p, double t) {
    LeafPoint r = p;
    r.tau1 *= std::exp(t);
    return r;
}

LeafPoint hexagon_flow(const LeafPoint& p, double t) {
    LeafPoint r = p;
    r.sigma1 *= std::exp(t);
    return r;
}

LeafPoint mixed_flow(const LeafPoint& p, double a, double t, MixedVariant v) {
    if (v == MixedVariant::I_aE) return hexagon_flow(eruption_flow(p, a * t), t);
    return hexagon_flow(eruption_flow(p, t), a * t);
}

FGCoords coordinate_flow(const FGCoords& c, int which, double t) {
    if (which < 1 || which > 8) throw DomainError("coordinate index out of range");
    FGCoords r = c;
    if (which <= 6) {
        // tau1 -> exp((-1)^i t sigma_i) tau1, tau2 -> exp((-1)^(i+1) t sigma_i) tau2
        const double s = c.sigma(which);
        const double sign = -alt(which);
        r.tau(1) *= std::exp(sign * t * s);
        r.tau(2) *= std::exp(-sign * t * s);
    } else {
        const double tau = c.x[which - 1];
        const double sign = which == 7 ? 1.0 : -1.0;
        for (int i = 1; i <= 6; ++i) r.sigma(i) *= std::exp(sign * alt(i) * t * tau);
    }
    return r;
}

double symplectic_form_leaf(const LeafPoint& p, const std::array<double, 2>& v,
                            const std::array<double, 2>& w) {
    return (v[0] * w[1] - v[1] * w[0]) / (2.0 * p.sigma1 * p.tau1);
}

std::array<double, 2> hamiltonian_vf_leaf(const LeafPoint& p, const std::array<double, 2>& grad) {
    const double k = 2.0 * p.sigma1 * p.tau1;
    return {-k * grad[1], k * grad[0]};
}

std::array<double, 2> hamiltonian_vf_leaf(const LeafPoint& p, const ChartFunction& f) {
    using D = Dual<double, 2>;
    const D r = f(D::variable(p.sigma1, 0), D::variable(p.tau1, 1));
    return hamiltonian_vf_leaf(p, {r.d[0], r.d[1]});
}

}  // namespace pants
