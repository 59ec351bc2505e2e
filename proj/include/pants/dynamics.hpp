#pragma once

#include <array>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pants/poisson.hpp"
#include "pants/traces.hpp"

namespace pants {

// A trace function on one leaf, seen in log-chart variables u = log sigma1,
// v = log tau1. There the Hamiltonian system reads u' = -2 f_v, v' = 2 f_u.
class LeafHamiltonian {
public:
    LeafHamiltonian(LengthVector L, CurveId curve, Evaluator ev = Evaluator::automatic);

    double value(double u, double v) const;
    std::array<double, 2> grad_log(double u, double v) const;

    struct Second {
        double f;
        std::array<double, 2> g;
        std::array<std::array<double, 2>, 2> h;
    };
    Second hessian_log(double u, double v) const;

    std::array<double, 2> velocity_log(double u, double v) const;

    // chart quantities at (sigma1, tau1)
    double value_chart(double s, double t) const;
    std::array<double, 2> grad_chart(double s, double t) const;

    const LengthVector& leaf() const { return L_; }
    const CurveId& curve() const { return curve_; }

private:
    template <class T>
    T eval(const T& u, const T& v) const;

    LengthVector L_;
    CurveId curve_;
    Evaluator ev_;
};

struct DynamicsOptions {
    double rtol = 1e-10;
    double atol = 1e-12;
    double max_step = std::numeric_limits<double>::infinity();
    long max_steps = 5'000'000;
    double max_time = 1e6;  // budget for period search
    bool project = false;   // pull back onto the initial level after each step
    Evaluator evaluator = Evaluator::automatic;
};

struct Sample {
    double t;
    double sigma1;
    double tau1;
    double f;
};

struct Trajectory {
    LengthVector leaf;
    CurveId curve;
    std::vector<Sample> samples;
    double drift = 0.0;  // max |f - f0| / |f0|
    long rejected = 0;
};

Trajectory integrate(const LeafPoint& p0, const CurveId& curve, double t_max, const DynamicsOptions& opt);
Trajectory integrate(const LeafPoint& p0, const CurveId& curve, double t_max, double rtol = 1e-10);

struct PeriodResult {
    double period = 0.0;
    double return_distance = 0.0;  // chart distance between start and the state at the period
    double drift = 0.0;
    LeafPoint end{};
};

PeriodResult detect_period(const LeafPoint& p0, const CurveId& curve, const DynamicsOptions& opt);
PeriodResult detect_period(const LeafPoint& p0, const CurveId& curve, double rtol = 1e-10);

struct MinimumResult {
    double sigma1 = 0.0;
    double tau1 = 0.0;
    double f = 0.0;
    double grad_norm = 0.0;  // chart gradient
    double hvf_norm = 0.0;
    int iterations = 0;
};

struct MinimizeOptions {
    double start_sigma1 = 1.0;
    double start_tau1 = 1.0;
    int max_iterations = 200;
    Evaluator evaluator = Evaluator::automatic;
};

MinimumResult find_minimum(const LengthVector& L, const CurveId& curve, const MinimizeOptions& opt = {});

struct LevelSet {
    std::vector<std::array<double, 2>> points;  // chart polyline, first point repeated at the end
    double level = 0.0;
    double period = 0.0;
    double closure = 0.0;  // distance between the integrated end point and the seed
    double max_level_error = 0.0;
    MinimumResult minimum;
};

LevelSet level_set(const LengthVector& L, const CurveId& curve, double level, const DynamicsOptions& opt = {});

using ScalarChartFunction = std::function<double(double, double)>;

using ChartPoint = std::array<double, 2>;  // (sigma1, tau1)

// smallest centered second difference (divided by h^2) of t -> f(mixed_flow(q, a, t)) on [-3, 3]
double convexity_probe(const ScalarChartFunction& f, const ChartPoint& q, double a, MixedVariant v, int n);
double convexity_probe(const LengthVector& L, const CurveId& curve, const ChartPoint& q, double a,
                       MixedVariant v, int n);

enum class Ray { sigma_up, sigma_down, tau_up, tau_down, both_up };
Ray parse_ray(const std::string& s);

struct PropernessReport {
    std::vector<double> values;
    bool diverges = false;
};

PropernessReport properness_probe(const LengthVector& L, const CurveId& curve, const ChartPoint& q, Ray ray,
                                  int steps, double factor = 10.0);

}  // namespace pants
