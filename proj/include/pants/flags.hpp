#pragma once

#include <array>
#include <optional>

#include "pants/proj_linalg.hpp"

namespace pants {

using Vec3 = std::array<double, 3>;

struct ProjPoint {
    Vec3 coords;
};

struct ProjLine {
    Vec3 coeffs;
};

struct Flag {
    ProjPoint point;
    ProjLine line;
};

constexpr double kTransverseTol = 1e-10;

double pairing(const ProjLine& l, const ProjPoint& p);
// normalized |l(p)|, scale free
double normalized_pairing(const ProjLine& l, const ProjPoint& p);

ProjLine line_through(const ProjPoint& p, const ProjPoint& q);
ProjPoint intersection(const ProjLine& l, const ProjLine& m);

// unit norm, first nonzero coordinate positive
Vec3 canonical(const Vec3& v);

bool is_flag(const Flag& f, double tol = kTransverseTol);

// g acts on points by p -> g p and on lines by l -> l g^-1
Flag act(const Mat3& g, const Flag& f);
ProjPoint act(const Mat3& g, const ProjPoint& p);
ProjLine act(const Mat3& g, const ProjLine& l);

// Cross ratio of four concurrent lines through p, read on a transversal.
// Convention: cr(inf, -1, 0, x) = x. The transversal defaults to the line
// whose coefficient vector equals p, which never passes through p.
double cross_ratio_concurrent(const ProjLine& l1, const ProjLine& l2, const ProjLine& l3,
                              const ProjLine& l4, const ProjPoint& p,
                              std::optional<ProjLine> transversal = std::nullopt);

double cr1(const Flag& f1, const Flag& f2, const Flag& f3, const Flag& f4);
double cr2(const Flag& f1, const Flag& f2, const Flag& f3, const Flag& f4);
double triple_ratio(const Flag& f1, const Flag& f2, const Flag& f3);

// p1 = e1, l1 = [0,1,1]; p2 = e2, l2 = [1,0,1]; p3 = e3, l3 = [1,x,0];
// p4 = (1,y,z), l4 = [-wz-y, 1, w]
std::array<Flag, 4> standard_configuration(double x, double y, double z, double w);

}  // namespace pants
