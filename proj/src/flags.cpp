#include "pants/flags.hpp"

#include <cmath>

namespace pants {

namespace {

double norm(const Vec3& v) { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double det_cols(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(cross(a, b), c); }

void require_nonzero(const Vec3& v, const char* what) {
    if (norm(v) == 0.0) throw DomainError(std::string(what) + " has all coordinates zero");
}

void require_transverse(const ProjLine& l, const ProjPoint& p) {
    if (normalized_pairing(l, p) <= kTransverseTol) throw DomainError("non-generic flags");
}

}  // namespace

double pairing(const ProjLine& l, const ProjPoint& p) { return dot(l.coeffs, p.coords); }

double normalized_pairing(const ProjLine& l, const ProjPoint& p) {
    require_nonzero(l.coeffs, "line");
    require_nonzero(p.coords, "point");
    return std::abs(pairing(l, p)) / (norm(l.coeffs) * norm(p.coords));
}

ProjLine line_through(const ProjPoint& p, const ProjPoint& q) {
    Vec3 c = cross(p.coords, q.coords);
    if (norm(c) <= kTransverseTol * norm(p.coords) * norm(q.coords))
        throw DomainError("points coincide");
    return {c};
}

ProjPoint intersection(const ProjLine& l, const ProjLine& m) {
    Vec3 c = cross(l.coeffs, m.coeffs);
    if (norm(c) <= kTransverseTol * norm(l.coeffs) * norm(m.coeffs))
        throw DomainError("lines coincide");
    return {c};
}

Vec3 canonical(const Vec3& v) {
    double n = norm(v);
    if (n == 0.0) throw DomainError("zero homogeneous vector");
    Vec3 r{v[0] / n, v[1] / n, v[2] / n};
    for (double x : r) {
        if (x != 0.0) {
            if (x < 0.0)
                for (double& y : r) y = -y;
            break;
        }
    }
    return r;
}

bool is_flag(const Flag& f, double tol) { return normalized_pairing(f.line, f.point) <= tol; }

ProjPoint act(const Mat3& g, const ProjPoint& p) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i) r[i] = g[i][0] * p.coords[0] + g[i][1] * p.coords[1] + g[i][2] * p.coords[2];
    return {r};
}

ProjLine act(const Mat3& g, const ProjLine& l) {
    Mat3 gi = inverse3(g);
    Vec3 r{};
    for (int j = 0; j < 3; ++j) r[j] = l.coeffs[0] * gi[0][j] + l.coeffs[1] * gi[1][j] + l.coeffs[2] * gi[2][j];
    return {r};
}

Flag act(const Mat3& g, const Flag& f) { return {act(g, f.point), act(g, f.line)}; }

double cross_ratio_concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3,
                              const ProjLine& l4, const ProjPoint& p,
                              std::optional<ProjLine> transversal) {
    const std::array<const ProjLine*, 4> ls{&l1, &l2, &l3, &l4};
    for (const ProjLine* l : ls)
        if (normalized_pairing(*l, p) > kTransverseTol) throw DomainError("lines not concurrent");
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            Vec3 c = cross(ls[i]->coeffs, ls[j]->coeffs);
            if (norm(c) <= kTransverseTol * norm(ls[i]->coeffs) * norm(ls[j]->coeffs))
                throw DomainError("degenerate pencil");
        }

    ProjLine m = transversal ? *transversal : ProjLine{p.coords};
    if (normalized_pairing(m, p) <= kTransverseTol) throw DomainError("transversal passes through the pencil point");

    std::array<Vec3, 4> q{};
    for (int i = 0; i < 4; ++i) q[i] = intersection(*ls[i], m).coords;
    // points on m: [qi,qj] = det(qi, qj, m) is the 2x2 bracket up to one common factor
    auto br = [&](int i, int j) { return det_cols(q[i], q[j], m.coeffs); };
    return br(0, 1) * br(2, 3) / (br(0, 3) * br(1, 2));
}

double cr1(const Flag& f1, const Flag& f2, const Flag& f3, const Flag& f4) {
    const ProjLine l13 = line_through(f1.point, f3.point);
    require_transverse(f1.line, f2.point);
    require_transverse(f1.line, f4.point);
    require_transverse(l13, f2.point);
    require_transverse(l13, f4.point);
    return -pairing(f1.line, f2.point) * pairing(l13, f4.point) /
           (pairing(f1.line, f4.point) * pairing(l13, f2.point));
}

double cr2(const Flag& f1, const Flag& f2, const Flag& f3, const Flag& f4) {
    const ProjLine l13 = line_through(f1.point, f3.point);
    require_transverse(f3.line, f4.point);
    require_transverse(f3.line, f2.point);
    require_transverse(l13, f2.point);
    require_transverse(l13, f4.point);
    return -pairing(f3.line, f4.point) * pairing(l13, f2.point) /
           (pairing(f3.line, f2.point) * pairing(l13, f4.point));
}

double triple_ratio(const Flag& f1, const Flag& f2, const Flag& f3) {
    require_transverse(f1.line, f2.point);
    require_transverse(f2.line, f3.point);
    require_transverse(f3.line, f1.point);
    require_transverse(f1.line, f3.point);
    require_transverse(f2.line, f1.point);
    require_transverse(f3.line, f2.point);
    return pairing(f1.line, f2.point) * pairing(f2.line, f3.point) * pairing(f3.line, f1.point) /
           (pairing(f1.line, f3.point) * pairing(f2.line, f1.point) * pairing(f3.line, f2.point));
}

std::array<Flag, 4> standard_configuration(double x, double y, double z, double w) {
    return {{
        {{{1.0, 0.0, 0.0}}, {{0.0, 1.0, 1.0}}},
        {{{0.0, 1.0, 0.0}}, {{1.0, 0.0, 1.0}}},
        {{{0.0, 0.0, 1.0}}, {{1.0, x, 0.0}}},
        {{{1.0, y, z}}, {{-w * z - y, 1.0, w}}},
    }};
}

}  // namespace pants
