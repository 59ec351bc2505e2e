#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "pants/coords.hpp"
#include "pants/dynamics.hpp"
#include "pants/proj_linalg.hpp"
#include "pants/verify.hpp"

namespace pants {

// %.17g, locale independent
std::string fmt17(double x);

nlohmann::json to_json(const FGCoords& c);
nlohmann::json to_json(const LeafPoint& p);
nlohmann::json to_json(const Mat3& m);
nlohmann::json to_json(const SuiteReport& r);

FGCoords coords_from_json(const nlohmann::json& j);
LeafPoint leaf_point_from_json(const nlohmann::json& j);

// header t,sigma1,tau1,f
std::string trajectory_csv(const Trajectory& tr);
// header sigma1,tau1
std::string level_set_csv(const LevelSet& ls);

// bare polylines on log-log axes
std::string polylines_svg(const std::vector<std::vector<std::array<double, 2>>>& lines,
                          const std::string& title);

}  // namespace pants
