#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pants/dynamics.hpp"
#include "pants/holonomy.hpp"
#include "pants/io.hpp"
#include "pants/traces.hpp"
#include "pants/verify.hpp"

using namespace pants;
using nlohmann::json;

namespace {

enum Exit { ok = 0, usage = 2, numerical = 3, verification = 4, domain = 5 };

// thrown for bad flag values; maps to exit 2
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// input validation reports DomainError; before any computing it is a usage error
template <class F>
auto input(F f) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

double parse_number(const std::string& tok) {
    auto one = [&](const std::string& s) {
        double v = 0.0;
        const char* b = s.data();
        const char* e = b + s.size();
        if (!s.empty() && *b == '+') ++b;
        auto [p, ec] = std::from_chars(b, e, v);
        if (ec != std::errc() || p != e) throw UsageError("not a number: '" + tok + "'");
        return v;
    };
    const auto slash = tok.find('/');
    if (slash == std::string::npos) return one(tok);
    const double den = one(tok.substr(slash + 1));
    if (den == 0.0) throw UsageError("zero denominator in '" + tok + "'");
    return one(tok.substr(0, slash)) / den;
}

std::vector<double> parse_list(const std::string& text, std::size_t n, const char* what) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(parse_number(tok));
    if (out.size() != n)
        throw UsageError(std::string(what) + " needs " + std::to_string(n) + " comma-separated numbers, got " +
                         std::to_string(out.size()));
    return out;
}

FGCoords parse_coords(const std::string& s) {
    const auto v = parse_list(s, 8, "--coords");
    FGCoords c;
    std::copy(v.begin(), v.end(), c.x.begin());
    input([&] { validate(c); return 0; });
    return c;
}

LengthVector parse_leaf(const std::string& s) {
    const auto v = parse_list(s, 6, "--leaf");
    LengthVector L;
    std::copy(v.begin(), v.end(), L.begin());
    input([&] { validate(L); return 0; });
    return L;
}

LeafPoint parse_point(const LengthVector& L, const std::string& s) {
    const auto v = parse_list(s, 2, "--point");
    LeafPoint p{L, v[0], v[1]};
    input([&] { validate(p); return 0; });
    return p;
}

CurveId parse_curve_flag(const std::string& s) {
    return input([&] { return parse_curve(s); });
}

std::string num(double x) { return fmt17(x); }

void print_matrix(const char* name, const Mat3& m) {
    std::printf("%s =\n", name);
    for (const auto& row : m) std::printf("  [%24s %24s %24s]\n", num(row[0]).c_str(), num(row[1]).c_str(), num(row[2]).c_str());
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + path + "' for writing");
    f << content;
    if (!f) throw UsageError("write to '" + path + "' failed");
}

// refuse unwritable targets before any computing starts
void check_writable(const std::string& path) {
    if (path.empty()) return;
    namespace fs = std::filesystem;
    std::error_code ec;
    const fs::path p(path);
    if (fs::is_directory(p, ec)) throw UsageError("'" + path + "' is a directory");
    const fs::path dir = p.has_parent_path() ? p.parent_path() : fs::path(".");
    if (!fs::is_directory(dir, ec)) throw UsageError("no directory for '" + path + "'");
}

std::uint64_t default_seed() {
    if (const char* env = std::getenv("PANTS_SEED")) {
        std::uint64_t s = 0;
        const std::string v(env);
        auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
        if (ec != std::errc() || p != v.data() + v.size()) throw UsageError("PANTS_SEED must be an unsigned integer");
        return s;
    }
    return 42;
}

struct Args {
    std::string coords, leaf, point, curve = "fig8", out, svg, level, suite = "all", start;
    double tmax = 1.0;
    double rtol = 1e-10;
    std::optional<std::uint64_t> seed;
    long samples = 200;
    unsigned threads = 0;
    bool json = false;
};

int cmd_reconstruct(const Args& a) {
    const FGCoords c = parse_coords(a.coords);
    const Peripherals<double> p = peripheral_holonomies(c);
    const EigenRatioReport rep = eigenvalue_ratio_report(c);
    const char* names[] = {"alpha", "beta", "gamma"};
    const Mat3* mats[] = {&p.A, &p.B, &p.C};
    if (a.json) {
        json j;
        j["coords"] = to_json(c);
        for (int i = 0; i < 3; ++i) {
            const RatioCheck& r = rep.per[i];
            j[names[i]] = {{"matrix", to_json(*mats[i])},
                           {"eigenvalues", r.eigenvalues},
                           {"predicted_ratios", r.predicted},
                           {"ratio_rel_error", r.rel_error},
                           {"matched", r.matched}};
        }
        j["relation_error"] = projective_distance(mul(mul(p.A, p.B), p.C), identity3());
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    const char* labels[] = {"A", "B", "C"};
    for (int i = 0; i < 3; ++i) {
        const RatioCheck& r = rep.per[i];
        print_matrix(labels[i], *mats[i]);
        std::printf("  eigenvalues %s %s %s\n", num(r.eigenvalues[0]).c_str(), num(r.eigenvalues[1]).c_str(),
                    num(r.eigenvalues[2]).c_str());
        std::printf("  ratios %s %s (%s)\n", num(r.predicted[0]).c_str(), num(r.predicted[1]).c_str(),
                    r.matched ? "matched" : "NOT matched");
    }
    std::printf("relation error %s\n", num(projective_distance(mul(mul(p.A, p.B), p.C), identity3())).c_str());
    return ok;
}

int cmd_casimirs(const Args& a) {
    const FGCoords c = parse_coords(a.coords);
    const auto k = casimirs(c);
    if (a.json) {
        std::cout << json{{"coords", to_json(c)}, {"casimirs", k}}.dump(2) << "\n";
        return ok;
    }
    const char* names[] = {"l_alpha1", "l_alpha2", "l_beta1", "l_beta2", "l_gamma1", "l_gamma2"};
    for (int i = 0; i < 6; ++i) std::printf("%-9s %s\n", names[i], num(k[i]).c_str());
    return ok;
}

int cmd_trace(const Args& a) {
    const LengthVector L = parse_leaf(a.leaf);
    const LeafPoint p = parse_point(L, a.point);
    const CurveId c = parse_curve_flag(a.curve);
    const double oracle = trace_matrix_oracle(p, c);
    std::optional<double> closed;
    if (has_closed_form(L, c)) closed = trace_closed_form(p, c);
    if (a.json) {
        json j{{"leaf", L}, {"point", {p.sigma1, p.tau1}}, {"curve", to_string(c)}, {"oracle", oracle}};
        j["closed_form"] = closed ? json(*closed) : json(nullptr);
        j["difference"] = closed ? json(*closed - oracle) : json(nullptr);
        std::cout << j.dump(2) << "\n";
        return ok;
    }
    std::printf("curve       %s\n", to_string(c).c_str());
    std::printf("closed form %s\n", closed ? num(*closed).c_str() : "unavailable");
    std::printf("oracle      %s\n", num(oracle).c_str());
    if (closed) std::printf("difference  %s\n", num(*closed - oracle).c_str());
    return ok;
}

int cmd_flow(const Args& a) {
    const LengthVector L = parse_leaf(a.leaf);
    const LeafPoint p = parse_point(L, a.point);
    const CurveId c = parse_curve_flag(a.curve);
    check_writable(a.out);
    check_writable(a.svg);
    DynamicsOptions opt;
    opt.rtol = a.rtol;
    const Trajectory tr = integrate(p, c, a.tmax, opt);

    std::optional<double> period;
    std::string period_note;
    try {
        period = detect_period(p, c, opt).period;
    } catch (const DomainError& e) {
        period_note = e.what();
    } catch (const NumericalError& e) {
        period_note = e.what();
    }

    if (!a.out.empty()) write_file(a.out, trajectory_csv(tr));
    if (!a.svg.empty()) {
        std::vector<std::array<double, 2>> line;
        for (const Sample& s : tr.samples) line.push_back({s.sigma1, s.tau1});
        write_file(a.svg, polylines_svg({line}, "trajectory of " + to_string(c)));
    }
    if (a.out.empty()) std::cout << trajectory_csv(tr);

    std::FILE* summary = a.out.empty() ? stderr : stdout;
    if (a.json) {
        json j{{"curve", to_string(c)}, {"samples", tr.samples.size()}, {"drift", tr.drift},
               {"rejected", tr.rejected}};
        j["period"] = period ? json(*period) : json(nullptr);
        if (!period) j["period_note"] = period_note;
        std::fprintf(summary, "%s\n", j.dump().c_str());
    } else {
        std::fprintf(summary, "samples %zu drift %s period %s\n", tr.samples.size(), num(tr.drift).c_str(),
                     period ? num(*period).c_str() : ("none (" + period_note + ")").c_str());
    }
    return ok;
}

int cmd_fixed_point(const Args& a) {
    const LengthVector L = parse_leaf(a.leaf);
    const CurveId c = parse_curve_flag(a.curve);
    MinimizeOptions mo;
    if (!a.start.empty()) {
        const LeafPoint s = parse_point(L, a.start);
        mo.start_sigma1 = s.sigma1;
        mo.start_tau1 = s.tau1;
    }
    const MinimumResult m = find_minimum(L, c, mo);
    if (a.json) {
        std::cout << json{{"curve", to_string(c)},     {"sigma1", m.sigma1},       {"tau1", m.tau1},
                          {"value", m.f},              {"grad_norm", m.grad_norm}, {"hvf_norm", m.hvf_norm},
                          {"iterations", m.iterations}}
                         .dump(2)
                  << "\n";
        return ok;
    }
    std::printf("sigma1 %s\ntau1 %s\nvalue %s\n|grad| %s\n|H| %s\n", num(m.sigma1).c_str(), num(m.tau1).c_str(),
                num(m.f).c_str(), num(m.grad_norm).c_str(), num(m.hvf_norm).c_str());
    return ok;
}

int cmd_level_set(const Args& a) {
    const LengthVector L = parse_leaf(a.leaf);
    const CurveId c = parse_curve_flag(a.curve);
    if (a.level.empty()) throw UsageError("--level is required");
    const double level = parse_number(a.level);
    check_writable(a.out);
    check_writable(a.svg);
    DynamicsOptions opt;
    opt.rtol = a.rtol;
    const LevelSet ls = level_set(L, c, level, opt);

    if (!a.out.empty()) write_file(a.out, level_set_csv(ls));
    if (!a.svg.empty()) write_file(a.svg, polylines_svg({ls.points}, "level set of " + to_string(c)));
    if (a.out.empty()) std::cout << level_set_csv(ls);

    std::FILE* summary = a.out.empty() ? stderr : stdout;
    if (a.json) {
        const json j{{"curve", to_string(c)},         {"level", level},
                     {"minimum", ls.minimum.f},       {"minimum_point", {ls.minimum.sigma1, ls.minimum.tau1}},
                     {"period", ls.period},           {"closure", ls.closure},
                     {"max_level_error", ls.max_level_error}, {"points", ls.points.size()}};
        std::fprintf(summary, "%s\n", j.dump().c_str());
    } else {
        std::fprintf(summary, "points %zu period %s closure %s level error %s\n", ls.points.size(),
                     num(ls.period).c_str(), num(ls.closure).c_str(), num(ls.max_level_error).c_str());
    }
    return ok;
}

int cmd_verify(const Args& a) {
    SuiteOptions o;
    o.seed = a.seed ? *a.seed : default_seed();
    o.samples = a.samples;
    o.threads = a.threads;
    if (o.samples < 0) throw UsageError("--samples must be non-negative");
    std::stringstream ss(a.suite);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "all") continue;
        if (std::find(suite_names().begin(), suite_names().end(), tok) == suite_names().end())
            throw UsageError("unknown suite '" + tok + "'");
        o.suites.push_back(tok);
    }
    const auto reports = run_suite(o);
    long failed = 0;
    if (a.json) {
        json j = json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        std::cout << j.dump(2) << "\n";
    }
    for (const auto& r : reports) {
        failed += r.failed;
        if (!a.json)
            std::printf("%-20s %s passed %ld failed %ld worst %s\n", r.suite.c_str(), r.failed ? "FAIL" : "ok  ",
                        r.passed, r.failed, num(r.worst_error).c_str());
    }
    if (!a.json) std::printf("seed %llu\n", static_cast<unsigned long long>(o.seed));
    return failed == 0 ? ok : verification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fock-Goncharov coordinates, traces and Hamiltonian flows on the pair of pants"};
    app.require_subcommand(1, 1);
    Args a;

    auto json_flag = [&](CLI::App* s) { s->add_flag("--json", a.json, "machine-readable output"); };

    auto* rec = app.add_subcommand("reconstruct", "peripheral holonomies A, B, C from coordinates");
    rec->add_option("--coords", a.coords, "8 positive numbers s1..s6,t1,t2")->required();
    json_flag(rec);

    auto* cas = app.add_subcommand("casimirs", "the six Casimir functions");
    cas->add_option("--coords", a.coords, "8 positive numbers s1..s6,t1,t2")->required();
    json_flag(cas);

    auto leaf_opts = [&](CLI::App* s, bool point) {
        s->add_option("--leaf", a.leaf, "6 positive Casimir values")->required();
        if (point) s->add_option("--point", a.point, "chart point sigma1,tau1")->required();
        s->add_option("--curve", a.curve, "fig8 | fig8_inv | fig8_sym | commutator | power:<k> | theta | word:<w>");
    };

    auto* tr = app.add_subcommand("trace", "trace function value, closed form and matrix oracle");
    leaf_opts(tr, true);
    json_flag(tr);

    auto* fl = app.add_subcommand("flow", "integrate the Hamiltonian flow of a trace function");
    leaf_opts(fl, true);
    fl->add_option("--tmax", a.tmax, "final time (may be negative)");
    fl->add_option("--rtol", a.rtol, "relative tolerance");
    fl->add_option("--out", a.out, "trajectory CSV path (default stdout)");
    fl->add_option("--svg", a.svg, "SVG plot path");
    json_flag(fl);

    auto* fp = app.add_subcommand("fixed-point", "minimum of a trace function on a leaf");
    leaf_opts(fp, false);
    fp->add_option("--start", a.start, "starting chart point sigma1,tau1");
    json_flag(fp);

    auto* ls = app.add_subcommand("level-set", "closed level curve of a trace function");
    leaf_opts(ls, false);
    ls->add_option("--level", a.level, "trace value")->required();
    ls->add_option("--rtol", a.rtol, "relative tolerance");
    ls->add_option("--out", a.out, "level-set CSV path (default stdout)");
    ls->add_option("--svg", a.svg, "SVG plot path");
    json_flag(ls);

    auto* ve = app.add_subcommand("verify", "run the numerical verification suites");
    ve->add_option("--suite", a.suite, "all or a comma-separated list of suites");
    ve->add_option("--seed", a.seed, "random seed (default 42, or PANTS_SEED)");
    ve->add_option("--samples", a.samples, "samples per randomized suite");
    ve->add_option("--threads", a.threads, "worker threads (0 = all cores)");
    json_flag(ve);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "reconstruct") return cmd_reconstruct(a);
        if (cmd == "casimirs") return cmd_casimirs(a);
        if (cmd == "trace") return cmd_trace(a);
        if (cmd == "flow") return cmd_flow(a);
        if (cmd == "fixed-point") return cmd_fixed_point(a);
        if (cmd == "level-set") return cmd_level_set(a);
        if (cmd == "verify") return cmd_verify(a);
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return usage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return domain;
    } catch (const NumericalError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return numerical;
    }
    return usage;
}
