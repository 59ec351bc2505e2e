#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pants/proj_linalg.hpp"
#include "pants/traces.hpp"

namespace pants {

// zeta_t^alpha, zeta_t^beta, zeta_t^gamma at chart point (s, tau) of the unipotent leaf
std::array<Mat3, 3> eruption_conjugators(double s, double tau, double t);
// eta_t^alpha, eta_t^beta, eta_t^gamma
std::array<Mat3, 3> hexagon_conjugators(double s, double tau, double t);

struct ConjugatorReport {
    std::array<double, 3> distance{};  // alpha, beta, gamma
    double worst = 0.0;
    bool passed = false;
};

// Compares zeta rho(x) zeta^-1 with rho_t(x) after the flow. Only the
// unipotent leaf is supported.
ConjugatorReport verify_conjugator_eruption(double s, double tau, double t, double tol = 1e-9);
ConjugatorReport verify_conjugator_hexagon(double s, double tau, double t, double tol = 1e-9);

// the printed right-hand side of the fig8 flow on L = (3,1/3,6,1/6,8,1/8)
std::array<double, 2> fuchsian_ode_display(double s, double t);

struct OdeDisplayReport {
    int samples = 0;
    int failed = 0;
    double worst_rel_error = 0.0;
};
OdeDisplayReport verify_fuchsian_ode_display(int n, std::uint64_t seed = 42, double tol = 1e-9);

struct SuiteReport {
    std::string suite;
    long passed = 0;
    long failed = 0;
    double worst_error = 0.0;
    std::uint64_t seed = 0;
};

struct SuiteMutation {
    Mutation closed_form;  // corrupt one closed-form coefficient
    int casimir_sign = -1;  // 0..5: flip the sign of one exponent in that Casimir formula
};

struct SuiteOptions {
    std::uint64_t seed = 42;
    long samples = 200;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::vector<std::string> suites;  // empty = all
    SuiteMutation mutation;
};

const std::vector<std::string>& suite_names();

std::vector<SuiteReport> run_suite(const SuiteOptions& opt);

// deterministic per-sample generator seeded from (seed, stream, index)
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

}  // namespace pants
