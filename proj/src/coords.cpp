#include "pants/coords.hpp"

#include <string>

namespace pants {

namespace {

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(what) + " must be a finite positive number");
}

}  // namespace

void validate(const FGCoords& c) {
    for (double v : c.x) require_positive(v, "coordinate");
}

void validate(const LengthVector& L) {
    for (double v : L) require_positive(v, "length vector entry");
}

void validate(const LeafPoint& p) {
    validate(p.leaf);
    require_positive(p.sigma1, "sigma1");
    require_positive(p.tau1, "tau1");
}

bool is_unipotent(const LengthVector& L, double tol) {
    for (double v : L)
        if (std::abs(v - 1.0) > tol) return false;
    return true;
}

FGCoords fuchsian_point(double la, double lb, double lg) {
    require_positive(la, "l_alpha");
    require_positive(lb, "l_beta");
    require_positive(lg, "l_gamma");
    const double s1 = std::sqrt(la * lg / lb);
    const double s3 = std::sqrt(la * lb / lg);
    const double s5 = std::sqrt(lb * lg / la);
    return make_coords({s1, s1, s3, s3, s5, s5, 1.0, 1.0});
}

LengthVector fuchsian_leaf(double la, double lb, double lg) {
    return {la, 1.0 / la, lb, 1.0 / lb, lg, 1.0 / lg};
}

LeafPoint fuchsian_chart_point(double la, double lb, double lg) {
    FGCoords c = fuchsian_point(la, lb, lg);
    return {fuchsian_leaf(la, lb, lg), c.sigma(1), 1.0};
}

}  // namespace pants
