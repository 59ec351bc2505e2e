#include "pants/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <thread>

#include "pants/dynamics.hpp"
#include "pants/flags.hpp"
#include "pants/holonomy.hpp"
#include "pants/poisson.hpp"

namespace pants {

std::array<Mat3, 3> eruption_conjugators(double s, double tau, double t) {
    const double e = std::exp(t);
    const double q = (1.0 + e * tau) / (1.0 + tau);
    const double et = e * tau;
    std::array<Mat3, 3> z{};

    const double a1 = std::exp(-2.0 * t / 3.0) * std::pow(q, 2.0 / 3.0);
    const double a2 = std::exp(t / 3.0) / std::cbrt(q);
    z[0] = {{{a1, 0, 0}, {0, a2, 0}, {0, 0, a2}}};

    const double k = std::cbrt(1.0 + tau) / (std::exp(t / 3.0) * tau * std::cbrt(1.0 + et));
    z[1] = {{{0.0, -(s - 1.0) * (et + 1.0), -(s * tau + s - 1.0) * (et + 1.0) / (tau + 1.0)},
             {0.0, s + s * et - et, (s * (tau + 1.0) * (et + 1.0) - et + tau) / (tau + 1.0)},
             {-et * tau, -s * (et + 1.0) - et * (tau + 1.0),
              -s * (et + 1.0) - tau * (e * (2.0 * tau + 1.0) + 1.0) / (tau + 1.0)}}};
    z[1] = scaled(z[1], k);

    const double g1 = 1.0 / std::cbrt(q);
    z[2] = {{{g1, 0, 0}, {0, g1, 0}, {0, 0, std::pow(q, 2.0 / 3.0)}}};
    return z;
}

std::array<Mat3, 3> hexagon_conjugators(double s, double tau, double t) {
    const double e = std::exp(t), m = std::exp(-t / 3.0), e23 = std::exp(2.0 * t / 3.0);
    const double sp = s + 1.0, se = s * e + 1.0;
    std::array<Mat3, 3> h{};
    h[0] = {{{m * se / sp, s * m * (e - 1.0) * (tau + 1.0) / (sp * tau), 0.0},
             {0.0, m, 0.0},
             {0.0, 0.0, sp * e23 / se}}};
    h[2] = {{{sp * e23 / se, 0.0, 0.0},
             {0.0, m, 0.0},
             {0.0, s * m * (e - 1.0) * (tau + 1.0) / sp, m * se / sp}}};
    Mat3& b = h[1];
    b = {};
    b[0][1] = m * (tau + 1.0) * (s * s * e - 1.0) / (sp * tau);
    b[0][2] = m * (s * s * e * (tau + 1.0) + s * e * tau - 1.0) / (sp * tau);
    b[1][1] = -m * (s + s * s * e * (tau + 1.0) - tau) / (sp * tau);
    b[1][2] = -s * m * (s * e * (tau + 1.0) + e * tau + 1.0) / (sp * tau);
    b[2][0] = sp * e23 * tau / se;
    b[2][1] = (tau + 1.0) * (s * s * e * (tau + 2.0) + s * (2.0 * e * tau + 1.0) + s * s * s * e * e + e * tau) /
              (sp * std::exp(t / 3.0) * tau * se);
    b[2][2] = (s * s * s * e * e * (tau + 1.0) + s * s * e * ((e + 3.0) * tau + 2.0) + s * ((4.0 * e + 1.0) * tau + 1.0) +
               (e + 1.0) * tau) /
              (sp * std::exp(t / 3.0) * tau * se);
    return h;
}

namespace {

ConjugatorReport check_conjugators(const std::array<Mat3, 3>& z, const FGCoords& before, const FGCoords& after,
                                   double tol) {
    const Peripherals<double> p0 = peripheral_holonomies(before);
    const Peripherals<double> p1 = peripheral_holonomies(after);
    const std::array<const Mat3*, 3> m0{&p0.A, &p0.B, &p0.C};
    const std::array<const Mat3*, 3> m1{&p1.A, &p1.B, &p1.C};
    ConjugatorReport r;
    for (int i = 0; i < 3; ++i) {
        const Mat3 conj = mul(mul(z[i], *m0[i]), inverse3(z[i]));
        r.distance[i] = projective_distance(conj, *m1[i]);
        r.worst = std::max(r.worst, r.distance[i]);
    }
    r.passed = r.worst <= tol;
    return r;
}

void require_chart(double s, double tau) {
    if (!(s > 0.0 && tau > 0.0)) throw DomainError("chart point must be positive");
}

}  // namespace

ConjugatorReport verify_conjugator_eruption(double s, double tau, double t, double tol) {
    require_chart(s, tau);
    const LengthVector U = unipotent_leaf();
    const FGCoords c = leaf_embed<double>(U, s, tau);
    return check_conjugators(eruption_conjugators(s, tau, t), c, eruption_flow(c, t), tol);
}

ConjugatorReport verify_conjugator_hexagon(double s, double tau, double t, double tol) {
    require_chart(s, tau);
    const LengthVector U = unipotent_leaf();
    const FGCoords c = leaf_embed<double>(U, s, tau);
    return check_conjugators(hexagon_conjugators(s, tau, t), c, hexagon_flow(c, t), tol);
}

std::array<double, 2> fuchsian_ode_display(double s, double t) {
    const double ds = (-6.0 * s * s * s * (t * t - 1.0) + s * s * (17.0 - 90.0 * t * t) + s * (15.0 - 408.0 * t * t) -
                       576.0 * t * t + 4.0) /
                      (12.0 * t);
    const double dt =
        (t + 1.0) * (12.0 * s * s * s * (t + 1.0) + s * s * (90.0 * t + 17.0) - 576.0 * t - 4.0) / (12.0 * s);
    return {ds, dt};
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    // splitmix64 over the combined words
    auto sm = [](std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    };
    return sm(sm(sm(seed) ^ stream) ^ index);
}

namespace {

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t s) : g(s) {}
    double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
    double log_uniform(double a, double b) { return std::exp(uniform(std::log(a), std::log(b))); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(g); }
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

double vec_rel(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return std::hypot(a[0] - b[0], a[1] - b[1]) / std::max(std::hypot(b[0], b[1]), 1e-300);
}

}  // namespace

OdeDisplayReport verify_fuchsian_ode_display(int n, std::uint64_t seed, double tol) {
    if (n < 1) throw DomainError("need at least one sample");
    const LengthVector L = fuchsian_leaf(3.0, 6.0, 8.0);
    const LeafHamiltonian H(L, CurveId::fig8());
    OdeDisplayReport r;
    for (int i = 0; i < n; ++i) {
        Rng rng(mix_seed(seed, 6, i));
        double s = 2.0, t = 1.0;
        if (i > 0) {
            s = rng.log_uniform(0.1, 10.0);
            t = rng.log_uniform(0.1, 10.0);
        }
        const LeafPoint p{L, s, t};
        const auto v = hamiltonian_vf_leaf(p, H.grad_chart(s, t));
        const double e = vec_rel(v, fuchsian_ode_display(s, t));
        r.worst_rel_error = std::max(r.worst_rel_error, e);
        ++r.samples;
        if (!(e <= tol)) ++r.failed;
    }
    return r;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{
        "relation",  "eigen_ratios", "casimirs",   "closed_form",  "conjugator_eruption",
        "conjugator_hexagon", "convexity", "structure", "fuchsian_ode", "flags"};
    return names;
}

namespace {

struct Outcome {
    long passed = 0;
    long failed = 0;
    double worst = 0.0;

    void add(bool ok, double err) {
        ok ? ++passed : ++failed;
        if (std::isnan(err)) worst = err;
        else if (!std::isnan(worst)) worst = std::max(worst, err);
    }
    void merge(const Outcome& o) {
        passed += o.passed;
        failed += o.failed;
        if (std::isnan(o.worst)) worst = o.worst;
        else if (!std::isnan(worst)) worst = std::max(worst, o.worst);
    }
};

// results stored by index, merged in index order
Outcome parallel_samples(long n, unsigned threads, const std::function<Outcome(long)>& fn) {
    std::vector<Outcome> out(static_cast<size_t>(std::max(n, 0L)));
    const unsigned nt = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max(n, 1L))));
    auto work = [&](unsigned w) {
        for (long i = w; i < n; i += nt) {
            try {
                out[i] = fn(i);
            } catch (const std::exception&) {
                out[i] = Outcome{0, 1, std::nan("")};
            }
        }
    };
    if (nt == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < nt; ++w) pool.emplace_back(work, w);
        for (auto& th : pool) th.join();
    }
    Outcome total;
    for (const Outcome& o : out) total.merge(o);
    return total;
}

std::array<double, 6> mutated_casimirs(const FGCoords& c, int flip) {
    std::array<double, 6> L = casimirs(c);
    const double tt = c.tau(1) * c.tau(2);
    switch (flip) {
        case 0: L[0] = c.sigma(1) / c.sigma(4); break;
        case 1: L[1] = tt * c.sigma(3) / c.sigma(2); break;
        case 2: L[2] = c.sigma(3) / c.sigma(6); break;
        case 3: L[3] = tt * c.sigma(5) / c.sigma(4); break;
        case 4: L[4] = c.sigma(2) / c.sigma(5); break;
        case 5: L[5] = tt * c.sigma(6) / c.sigma(1); break;
        default: break;
    }
    return L;
}

FGCoords random_coords(Rng& r, double lo = 0.1, double hi = 10.0) {
    FGCoords c;
    for (double& x : c.x) x = r.log_uniform(lo, hi);
    return c;
}

LengthVector random_leaf(Rng& r, double lo = 0.1, double hi = 10.0) {
    LengthVector L;
    for (double& x : L) x = r.log_uniform(lo, hi);
    return L;
}

Mat3 random_sl3(Rng& r) {
    for (;;) {
        Mat3 g;
        for (auto& row : g)
            for (double& x : row) x = r.uniform(-2.0, 2.0);
        if (std::abs(det3(g)) > 0.05) return normalize_sl3(g);
    }
}

std::array<Flag, 4> random_flags(Rng& r) {
    for (;;) {
        std::array<Flag, 4> f;
        for (Flag& fl : f) {
            Vec3 p{r.normal(), r.normal(), r.normal()};
            Vec3 a{r.normal(), r.normal(), r.normal()};
            // line through p: any covector orthogonal to p
            Vec3 l{p[1] * a[2] - p[2] * a[1], p[2] * a[0] - p[0] * a[2], p[0] * a[1] - p[1] * a[0]};
            fl = {{p}, {l}};
        }
        try {
            (void)cr1(f[0], f[1], f[2], f[3]);
            (void)cr2(f[0], f[1], f[2], f[3]);
            (void)triple_ratio(f[0], f[1], f[2]);
            bool generic = true;
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j)
                    if (i != j && normalized_pairing(f[i].line, f[j].point) < 1e-3) generic = false;
            if (generic) return f;
        } catch (const DomainError&) {
        }
    }
}

Outcome suite_relation(const SuiteOptions& o) {
    return parallel_samples(o.samples, o.threads, [&](long i) {
        Rng rng(mix_seed(o.seed, 1, i));
        const FGCoords c = random_coords(rng);
        const Peripherals<double> p = peripheral_holonomies(c);
        const double d = projective_distance(mul(mul(p.A, p.B), p.C), identity3());
        Outcome r;
        r.add(d <= 1e-9, d);
        return r;
    });
}

Outcome suite_eigen_ratios(const SuiteOptions& o) {
    return parallel_samples(o.samples, o.threads, [&](long i) {
        Rng rng(mix_seed(o.seed, 2, i));
        const FGCoords c = random_coords(rng);
        const auto rep = eigenvalue_ratio_report(c, mutated_casimirs(c, o.mutation.casimir_sign), 1e-8);
        Outcome r;
        r.add(rep.all_match, rep.worst_rel_error);
        return r;
    });
}

Outcome suite_casimirs(const SuiteOptions& o) {
    return parallel_samples(o.samples, o.threads, [&](long i) {
        Rng rng(mix_seed(o.seed, 3, i));
        Outcome r;
        const LengthVector L = random_leaf(rng);
        const double s = rng.log_uniform(0.1, 10.0), t = rng.log_uniform(0.1, 10.0);
        const FGCoords c = leaf_embed<double>(L, s, t);
        const auto back = mutated_casimirs(c, o.mutation.casimir_sign);
        double e = 0.0;
        for (int k = 0; k < 6; ++k) e = std::max(e, rel(back[k], L[k]));
        r.add(e <= 1e-12, e);

        const double a = rng.uniform(-2.0, 2.0), tt = rng.uniform(-3.0, 3.0);
        const auto base = mutated_casimirs(c, o.mutation.casimir_sign);
        const std::array<FGCoords, 5> moved{eruption_flow(c, tt), hexagon_flow(c, tt),
                                            mixed_flow(c, a, tt, MixedVariant::I_aE),
                                            mixed_flow(c, a, tt, MixedVariant::aI_E),
                                            coordinate_flow(c, 1 + static_cast<int>(i % 8), tt * 0.1)};
        for (const FGCoords& m : moved) {
            const auto after = mutated_casimirs(m, o.mutation.casimir_sign);
            double f = 0.0;
            for (int k = 0; k < 6; ++k) f = std::max(f, rel(after[k], base[k]));
            r.add(f <= 1e-14, f);
        }
        return r;
    });
}

Outcome suite_closed_form(const SuiteOptions& o) {
    const Mutation* mut = &o.mutation.closed_form;
    return parallel_samples(o.samples, o.threads, [&](long i) {
        Rng rng(mix_seed(o.seed, 4, i));
        Outcome r;
        const LengthVector L = random_leaf(rng);
        double s = rng.log_uniform(0.1, 10.0), t = rng.log_uniform(0.1, 10.0);
        for (const CurveId& c : {CurveId::fig8(), CurveId::fig8_inv()}) {
            const double e = rel(trace_closed_form<double>(L, s, t, c, mut), trace_matrix_oracle<double>(L, s, t, c));
            r.add(e <= 1e-9, e);
        }
        const LengthVector U = unipotent_leaf();
        s = rng.log_uniform(0.1, 10.0);
        t = rng.log_uniform(0.1, 10.0);
        std::vector<CurveId> cs{CurveId::fig8(), CurveId::fig8_inv(), CurveId::commutator()};
        for (int k = 1; k <= 6; ++k) cs.push_back(CurveId::power(k));
        for (const CurveId& c : cs) {
            const double e = rel(trace_closed_form<double>(U, s, t, c, mut), trace_matrix_oracle<double>(U, s, t, c));
            r.add(e <= 1e-9, e);
        }
        return r;
    });
}

Outcome suite_conjugator(const SuiteOptions& o, bool eruption) {
    Outcome r;
    if (o.samples <= 0) return r;
    for (double s : {0.5, 1.0, 2.0})
        for (double tau : {0.5, 1.0, 2.0})
            for (double t : {-2.0, -1.0, 1.0, 2.0}) {
                const auto rep = eruption ? verify_conjugator_eruption(s, tau, t) : verify_conjugator_hexagon(s, tau, t);
                r.add(rep.passed, rep.worst);
            }
    return r;
}

Outcome suite_convexity(const SuiteOptions& o) {
    return parallel_samples(o.samples, o.threads, [&](long i) {
        Rng rng(mix_seed(o.seed, 7, i));
        Outcome r;
        const LengthVector L = random_leaf(rng, 0.2, 5.0);
        const LengthVector U = unipotent_leaf();
        const ChartPoint q{rng.log_uniform(0.2, 5.0), rng.log_uniform(0.2, 5.0)};
        const std::vector<std::pair<LengthVector, CurveId>> cases{
            {L, CurveId::fig8()},       {L, CurveId::fig8_sym()}, {U, CurveId::commutator()},
            {U, CurveId::power(1)},     {U, CurveId::power(2)},   {U, CurveId::power(3)},
            {U, CurveId::power(4)}};
        for (const auto& [leaf, curve] : cases)
            for (double a : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0})
                for (MixedVariant v : {MixedVariant::I_aE, MixedVariant::aI_E}) {
                    const double m = convexity_probe(leaf, curve, q, a, v, 61);
                    r.add(m > 0.0, m > 0.0 ? 0.0 : -m);
                }
        return r;
    });
}

Outcome suite_structure(const SuiteOptions& o) {
    Outcome r;
    if (o.samples <= 0) return r;
    const double ie = bracket_log_linear(hamiltonian_I(), hamiltonian_E());
    r.add(ie == 0.5, std::abs(ie - 0.5));
    for (int k = 0; k < 6; ++k) {
        LogLinearFunction cas = log_casimir(k);
        if (k == o.mutation.casimir_sign) {
            // flip the sign of the last nonzero exponent
            for (int j = 7; j >= 0; --j)
                if (cas.coeff[j] != 0.0) {
                    cas.coeff[j] = -cas.coeff[j];
                    break;
                }
        }
        for (int j = 1; j <= 8; ++j) {
            const double b = bracket_log_linear(cas, log_coordinate(j));
            r.add(b == 0.0, std::abs(b));
        }
    }
    r.merge(parallel_samples(o.samples, o.threads, [&](long i) {
        Rng rng(mix_seed(o.seed, 8, i));
        Outcome out;
        const FGCoords c = random_coords(rng);
        const double s = rng.uniform(-3.0, 3.0), t = rng.uniform(-3.0, 3.0);
        const FGCoords x = eruption_flow(hexagon_flow(c, s), t);
        const FGCoords y = hexagon_flow(eruption_flow(c, t), s);
        out.add(x.x == y.x, x.x == y.x ? 0.0 : 1.0);
        // group law, to a few ulps since exp(s) exp(t) and exp(s + t) round differently
        double g = 0.0;
        const FGCoords e2 = eruption_flow(eruption_flow(c, s), t), e1 = eruption_flow(c, s + t);
        const FGCoords h2 = hexagon_flow(hexagon_flow(c, s), t), h1 = hexagon_flow(c, s + t);
        for (int k = 0; k < 8; ++k) g = std::max({g, rel(e2.x[k], e1.x[k]), rel(h2.x[k], h1.x[k])});
        out.add(g <= 1e-15, g);
        return out;
    }));
    return r;
}

Outcome suite_fuchsian(const SuiteOptions& o) {
    if (o.samples <= 0) return {};
    const auto rep = verify_fuchsian_ode_display(static_cast<int>(o.samples), o.seed);
    Outcome r;
    r.passed = rep.samples - rep.failed;
    r.failed = rep.failed;
    r.worst = rep.worst_rel_error;
    return r;
}

Outcome suite_flags(const SuiteOptions& o) {
    return parallel_samples(o.samples, o.threads, [&](long i) {
        Rng rng(mix_seed(o.seed, 10, i));
        Outcome r;
        const auto f = random_flags(rng);
        const Mat3 g = random_sl3(rng);
        std::array<Flag, 4> gf;
        for (int k = 0; k < 4; ++k) gf[k] = act(g, f[k]);
        const double e1 = rel(cr1(gf[0], gf[1], gf[2], gf[3]), cr1(f[0], f[1], f[2], f[3]));
        const double e2 = rel(cr2(gf[0], gf[1], gf[2], gf[3]), cr2(f[0], f[1], f[2], f[3]));
        const double e3 = rel(triple_ratio(gf[0], gf[1], gf[2]), triple_ratio(f[0], f[1], f[2]));
        r.add(std::max({e1, e2, e3}) <= 1e-9, std::max({e1, e2, e3}));

        const double geo = cross_ratio_concurrent(f[0].line, line_through(f[0].point, f[1].point),
                                                  line_through(f[0].point, f[2].point),
                                                  line_through(f[0].point, f[3].point), f[0].point);
        const double e4 = rel(geo, cr1(f[0], f[1], f[2], f[3]));
        r.add(e4 <= 1e-9, e4);

        const double x = rng.uniform(0.2, 5.0), y = rng.uniform(0.2, 5.0), z = rng.uniform(0.2, 5.0),
                     w = rng.uniform(0.2, 5.0);
        const auto sc = standard_configuration(x, y, z, w);
        const double e5 = std::max(rel(cr1(sc[0], sc[1], sc[2], sc[3]), -y / (y + z)),
                                   rel(cr2(sc[0], sc[1], sc[2], sc[3]), -(1.0 + x * y) / (x * y)));
        r.add(e5 <= 1e-9, e5);
        return r;
    });
}

}  // namespace

std::vector<SuiteReport> run_suite(const SuiteOptions& opt_in) {
    SuiteOptions opt = opt_in;
    if (opt.threads == 0) opt.threads = std::max(1u, std::thread::hardware_concurrency());
    if (opt.samples < 0) throw DomainError("samples must be non-negative");
    const auto& all = suite_names();
    std::vector<std::string> chosen = opt.suites.empty() ? all : opt.suites;
    for (const auto& s : chosen)
        if (s != "all" && std::find(all.begin(), all.end(), s) == all.end()) throw DomainError("unknown suite '" + s + "'");
    if (std::find(chosen.begin(), chosen.end(), "all") != chosen.end()) chosen = all;

    std::vector<SuiteReport> out;
    for (const auto& name : all) {
        if (std::find(chosen.begin(), chosen.end(), name) == chosen.end()) continue;
        Outcome r;
        if (name == "relation") r = suite_relation(opt);
        else if (name == "eigen_ratios") r = suite_eigen_ratios(opt);
        else if (name == "casimirs") r = suite_casimirs(opt);
        else if (name == "closed_form") r = suite_closed_form(opt);
        else if (name == "conjugator_eruption") r = suite_conjugator(opt, true);
        else if (name == "conjugator_hexagon") r = suite_conjugator(opt, false);
        else if (name == "convexity") r = suite_convexity(opt);
        else if (name == "structure") r = suite_structure(opt);
        else if (name == "fuchsian_ode") r = suite_fuchsian(opt);
        else if (name == "flags") r = suite_flags(opt);
        out.push_back({name, r.passed, r.failed, r.worst, opt.seed});
    }
    return out;
}

}  // namespace pants
