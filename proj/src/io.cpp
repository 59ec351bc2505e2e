#include "pants/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pants {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

nlohmann::json to_json(const FGCoords& c) {
    return {{"sigma", std::vector<double>(c.x.begin(), c.x.begin() + 6)},
            {"tau", std::vector<double>(c.x.begin() + 6, c.x.end())}};
}

nlohmann::json to_json(const LeafPoint& p) {
    return {{"leaf", std::vector<double>(p.leaf.begin(), p.leaf.end())},
            {"point", std::vector<double>{p.sigma1, p.tau1}}};
}

nlohmann::json to_json(const Mat3& m) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : m) j.push_back(std::vector<double>(row.begin(), row.end()));
    return j;
}

nlohmann::json to_json(const SuiteReport& r) {
    return {{"suite", r.suite},
            {"passed", r.passed},
            {"failed", r.failed},
            {"worst_error", std::isfinite(r.worst_error) ? nlohmann::json(r.worst_error) : nlohmann::json(nullptr)},
            {"seed", r.seed}};
}

FGCoords coords_from_json(const nlohmann::json& j) {
    const auto s = j.at("sigma").get<std::vector<double>>();
    const auto t = j.at("tau").get<std::vector<double>>();
    if (s.size() != 6 || t.size() != 2) throw DomainError("coordinates need 6 sigmas and 2 taus");
    FGCoords c;
    std::copy(s.begin(), s.end(), c.x.begin());
    std::copy(t.begin(), t.end(), c.x.begin() + 6);
    validate(c);
    return c;
}

LeafPoint leaf_point_from_json(const nlohmann::json& j) {
    const auto L = j.at("leaf").get<std::vector<double>>();
    const auto p = j.at("point").get<std::vector<double>>();
    if (L.size() != 6 || p.size() != 2) throw DomainError("leaf point needs 6 lengths and 2 chart values");
    LeafPoint lp;
    std::copy(L.begin(), L.end(), lp.leaf.begin());
    lp.sigma1 = p[0];
    lp.tau1 = p[1];
    validate(lp);
    return lp;
}

std::string trajectory_csv(const Trajectory& tr) {
    std::string out = "t,sigma1,tau1,f\n";
    for (const Sample& s : tr.samples)
        out += fmt17(s.t) + "," + fmt17(s.sigma1) + "," + fmt17(s.tau1) + "," + fmt17(s.f) + "\n";
    return out;
}

std::string level_set_csv(const LevelSet& ls) {
    std::string out = "sigma1,tau1\n";
    for (const auto& p : ls.points) out += fmt17(p[0]) + "," + fmt17(p[1]) + "\n";
    return out;
}

std::string polylines_svg(const std::vector<std::vector<std::array<double, 2>>>& lines, const std::string& title) {
    double xmin = INFINITY, xmax = -INFINITY, ymin = INFINITY, ymax = -INFINITY;
    for (const auto& l : lines)
        for (const auto& p : l) {
            xmin = std::min(xmin, std::log10(p[0]));
            xmax = std::max(xmax, std::log10(p[0]));
            ymin = std::min(ymin, std::log10(p[1]));
            ymax = std::max(ymax, std::log10(p[1]));
        }
    if (!(xmax > xmin)) { xmin -= 0.5; xmax += 0.5; }
    if (!(ymax > ymin)) { ymin -= 0.5; ymax += 0.5; }
    const double W = 600, Hh = 600, pad = 50;
    auto X = [&](double v) { return pad + (std::log10(v) - xmin) / (xmax - xmin) * (W - 2 * pad); };
    auto Y = [&](double v) { return Hh - pad - (std::log10(v) - ymin) / (ymax - ymin) * (Hh - 2 * pad); };

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hh << "\">\n";
    s << "<title>" << title << "</title>\n";
    s << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad << "\" height=\"" << Hh - 2 * pad
      << "\" fill=\"none\" stroke=\"black\"/>\n";
    char buf[64];
    for (int k = static_cast<int>(std::ceil(xmin)); k <= static_cast<int>(std::floor(xmax)); ++k) {
        const double x = pad + (k - xmin) / (xmax - xmin) * (W - 2 * pad);
        std::snprintf(buf, sizeof buf, "%.1f", x);
        s << "<text x=\"" << buf << "\" y=\"" << Hh - pad + 20 << "\" font-size=\"12\">1e" << k << "</text>\n";
    }
    for (int k = static_cast<int>(std::ceil(ymin)); k <= static_cast<int>(std::floor(ymax)); ++k) {
        const double y = Hh - pad - (k - ymin) / (ymax - ymin) * (Hh - 2 * pad);
        std::snprintf(buf, sizeof buf, "%.1f", y);
        s << "<text x=\"5\" y=\"" << buf << "\" font-size=\"12\">1e" << k << "</text>\n";
    }
    s << "<text x=\"" << W / 2 << "\" y=\"" << Hh - 10 << "\" font-size=\"12\">sigma1 (log)</text>\n";
    s << "<text x=\"5\" y=\"" << pad - 20 << "\" font-size=\"12\">tau1 (log)</text>\n";
    for (const auto& l : lines) {
        s << "<polyline fill=\"none\" stroke=\"black\" points=\"";
        for (const auto& p : l) {
            std::snprintf(buf, sizeof buf, "%.3f,%.3f ", X(p[0]), Y(p[1]));
            s << buf;
        }
        s << "\"/>\n";
    }
    s << "</svg>\n";
    return s.str();
}

}  // namespace pants
