#pragma once

#include <array>
#include <functional>

#include "pants/coords.hpp"

namespace pants {

using EpsilonMatrix = std::array<std::array<int, 8>, 8>;

// basis (sigma1..sigma6, tau1, tau2)
const EpsilonMatrix& epsilon();

// {X_i, X_j} = 2 eps_ij X_i X_j, indices 1..8
double bracket_coordinates(int i, int j, const FGCoords& c);

// f = k + sum c_i log X_i
struct LogLinearFunction {
    std::array<double, 8> coeff{};
    double constant = 0.0;

    double operator()(const FGCoords& c) const;
};

LogLinearFunction hamiltonian_I();  // (log tau1 - log tau2) / 4
LogLinearFunction hamiltonian_E();  // -(1/12) sum (-1)^(i+1) log sigma_i
LogLinearFunction log_coordinate(int i);  // log X_i, i = 1..8
LogLinearFunction log_casimir(int k);     // log of casimir k, k = 0..5

// 2 c_f^T eps c_g, constant on the whole space
double bracket_log_linear(const LogLinearFunction& f, const LogLinearFunction& g);

FGCoords eruption_flow(const FGCoords& c, double t);
FGCoords hexagon_flow(const FGCoords& c, double t);

enum class MixedVariant {
    I_aE,  // hexagon for t, eruption for a t
    aI_E,  // hexagon for a t, eruption for t
};

FGCoords mixed_flow(const FGCoords& c, double a, double t, MixedVariant v);

// the same flows in the (sigma1, tau1) chart of a leaf
LeafPoint eruption_flow(const LeafPoint& p, double t);
LeafPoint hexagon_flow(const LeafPoint& p, double t);
LeafPoint mixed_flow(const LeafPoint& p, double a, double t, MixedVariant v);

// flow of the coordinate function X_which (1..8) in closed form
FGCoords coordinate_flow(const FGCoords& c, int which, double t);

double symplectic_form_leaf(const LeafPoint& p, const std::array<double, 2>& v,
                            const std::array<double, 2>& w);

// 2 s t (-df/dt, df/ds), gradient given in the chart
std::array<double, 2> hamiltonian_vf_leaf(const LeafPoint& p, const std::array<double, 2>& grad);

// f is evaluated with forward-mode duals to get the exact gradient
using ChartFunction = std::function<Dual<double, 2>(const Dual<double, 2>&, const Dual<double, 2>&)>;
std::array<double, 2> hamiltonian_vf_leaf(const LeafPoint& p, const ChartFunction& f);

}  // namespace pants
