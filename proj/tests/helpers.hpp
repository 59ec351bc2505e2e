#pragma once

#include <cmath>
#include <random>

#include "pants/coords.hpp"
#include "pants/flags.hpp"
#include "pants/proj_linalg.hpp"

namespace testing_util {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t s) : g(s) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(g); }
};

inline double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline pants::FGCoords random_coords(Rng& r, double lo = 0.1, double hi = 10.0) {
    pants::FGCoords c;
    for (double& x : c.x) x = r.log_uniform(lo, hi);
    return c;
}

inline pants::LengthVector random_leaf(Rng& r, double lo = 0.1, double hi = 10.0) {
    pants::LengthVector L;
    for (double& x : L) x = r.log_uniform(lo, hi);
    return L;
}

inline double max_entry_diff(const pants::Mat3& a, const pants::Mat3& b) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
    return d;
}

inline std::array<pants::Flag, 4> random_flags(Rng& r) {
    for (;;) {
        std::array<pants::Flag, 4> f;
        for (pants::Flag& fl : f) {
            pants::Vec3 p{r.normal(), r.normal(), r.normal()};
            pants::Vec3 a{r.normal(), r.normal(), r.normal()};
            pants::Vec3 l{p[1] * a[2] - p[2] * a[1], p[2] * a[0] - p[0] * a[2], p[0] * a[1] - p[1] * a[0]};
            fl = {{p}, {l}};
        }
        bool generic = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j && pants::normalized_pairing(f[i].line, f[j].point) < 1e-3) generic = false;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                for (int k = j + 1; k < 4; ++k) {
                    pants::Mat3 m{{f[i].point.coords, f[j].point.coords, f[k].point.coords}};
                    if (std::abs(pants::det3(m)) < 1e-3) generic = false;
                }
        if (generic) return f;
    }
}

inline pants::Mat3 random_sl3(Rng& r) {
    for (;;) {
        pants::Mat3 g;
        for (auto& row : g)
            for (double& x : row) x = r.uniform(-2.0, 2.0);
        if (std::abs(pants::det3(g)) > 0.05) return pants::normalize_sl3(g);
    }
}

}  // namespace testing_util
