#include "pants/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pants {

using D1 = Dual<double, 2>;
using D2 = Dual<D1, 2>;

LeafHamiltonian::LeafHamiltonian(LengthVector L, CurveId curve, Evaluator ev)
    : L_(L), curve_(std::move(curve)), ev_(ev) {
    validate(L_);
    if (ev_ == Evaluator::closed_form && !has_closed_form(L_, curve_))
        throw DomainError("closed form unavailable; use matrix oracle");
}

template <class T>
T LeafHamiltonian::eval(const T& u, const T& v) const {
    using std::exp;
    return trace_eval<T>(L_, exp(u), exp(v), curve_, ev_);
}

double LeafHamiltonian::value(double u, double v) const { return eval<double>(u, v); }

std::array<double, 2> LeafHamiltonian::grad_log(double u, double v) const {
    const D1 r = eval<D1>(D1::variable(u, 0), D1::variable(v, 1));
    return {r.d[0], r.d[1]};
}

LeafHamiltonian::Second LeafHamiltonian::hessian_log(double u, double v) const {
    const D2 du(D1::variable(u, 0), {D1(1.0), D1(0.0)});
    const D2 dv(D1::variable(v, 1), {D1(0.0), D1(1.0)});
    const D2 r = eval<D2>(du, dv);
    Second s{};
    s.f = r.v.v;
    s.g = {r.v.d[0], r.v.d[1]};
    s.h = {{{r.d[0].d[0], r.d[0].d[1]}, {r.d[1].d[0], r.d[1].d[1]}}};
    return s;
}

std::array<double, 2> LeafHamiltonian::velocity_log(double u, double v) const {
    const auto g = grad_log(u, v);
    return {-2.0 * g[1], 2.0 * g[0]};
}

double LeafHamiltonian::value_chart(double s, double t) const { return trace_eval<double>(L_, s, t, curve_, ev_); }

std::array<double, 2> LeafHamiltonian::grad_chart(double s, double t) const {
    const D1 r = trace_eval<D1>(L_, D1::variable(s, 0), D1::variable(t, 1), curve_, ev_);
    return {r.d[0], r.d[1]};
}

namespace {

using Y = std::array<double, 2>;

Y axpy(const Y& y, double h, const Y& k) { return {y[0] + h * k[0], y[1] + h * k[1]}; }

// Dormand-Prince 5(4) with a PI step controller, in log-chart variables
class Stepper {
public:
    Stepper(const LeafHamiltonian& H, const DynamicsOptions& opt) : H_(H), opt_(opt) {}

    struct State {
        double t;
        Y y;
        Y k;  // derivative at y (first-same-as-last)
    };

    State start(double t, const Y& y) const { return {t, y, rhs(y)}; }

    Y rhs(const Y& y) const {
        if (!(std::abs(y[0]) < 300.0 && std::abs(y[1]) < 300.0)) throw NumericalError("trajectory escaped");
        return H_.velocity_log(y[0], y[1]);
    }

    double initial_step(const State& s, double dir) const {
        const double vn = std::hypot(s.k[0], s.k[1]);
        double h = vn > 0.0 ? 1e-3 / vn : 1e-3;
        h = std::min(h, opt_.max_step);
        return dir * h;
    }

    // one accepted step of size at most |t_end - t|; h is updated in place
    void step(State& s, double& h, double t_end) {
        for (;;) {
            if (++steps_ > opt_.max_steps) throw NumericalError("step budget exhausted");
            const double remaining = t_end - s.t;
            bool last = false;
            if (std::abs(h) >= std::abs(remaining)) {
                h = remaining;
                last = true;
            }
            if (std::abs(h) < 1e-14 * std::max(1.0, std::abs(s.t))) {
                if (!last) throw NumericalError("stiff segment");
                // a sliver left before t_end: one Euler step is exact to rounding
                s.y = axpy(s.y, h, s.k);
                s.k = rhs(s.y);
                s.t = t_end;
                return;
            }

            const Y& k1 = s.k;
            const Y k2 = rhs(axpy(s.y, h * 0.2, k1));
            const Y y3{s.y[0] + h * (3.0 / 40 * k1[0] + 9.0 / 40 * k2[0]),
                       s.y[1] + h * (3.0 / 40 * k1[1] + 9.0 / 40 * k2[1])};
            const Y k3 = rhs(y3);
            Y y4{};
            for (int i = 0; i < 2; ++i)
                y4[i] = s.y[i] + h * (44.0 / 45 * k1[i] - 56.0 / 15 * k2[i] + 32.0 / 9 * k3[i]);
            const Y k4 = rhs(y4);
            Y y5{};
            for (int i = 0; i < 2; ++i)
                y5[i] = s.y[i] + h * (19372.0 / 6561 * k1[i] - 25360.0 / 2187 * k2[i] + 64448.0 / 6561 * k3[i] -
                                      212.0 / 729 * k4[i]);
            const Y k5 = rhs(y5);
            Y y6{};
            for (int i = 0; i < 2; ++i)
                y6[i] = s.y[i] + h * (9017.0 / 3168 * k1[i] - 355.0 / 33 * k2[i] + 46732.0 / 5247 * k3[i] +
                                      49.0 / 176 * k4[i] - 5103.0 / 18656 * k5[i]);
            const Y k6 = rhs(y6);
            Y yn{};
            for (int i = 0; i < 2; ++i)
                yn[i] = s.y[i] + h * (35.0 / 384 * k1[i] + 500.0 / 1113 * k3[i] + 125.0 / 192 * k4[i] -
                                      2187.0 / 6784 * k5[i] + 11.0 / 84 * k6[i]);
            const Y k7 = rhs(yn);

            double err = 0.0;
            for (int i = 0; i < 2; ++i) {
                const double e = h * (71.0 / 57600 * k1[i] - 71.0 / 16695 * k3[i] + 71.0 / 1920 * k4[i] -
                                      17253.0 / 339200 * k5[i] + 22.0 / 525 * k6[i] - 1.0 / 40 * k7[i]);
                const double sc = opt_.atol + opt_.rtol * std::max(std::abs(s.y[i]), std::abs(yn[i]));
                err += (e / sc) * (e / sc);
            }
            err = std::sqrt(err / 2.0);

            constexpr double beta = 0.04, expo = 0.2 - beta * 0.75, safe = 0.9;
            const double fac11 = std::pow(std::max(err, 1e-300), expo);
            if (err <= 1.0) {
                double fac = fac11 / std::pow(err_old_, beta);
                fac = std::clamp(fac / safe, 0.1, 5.0);
                err_old_ = std::max(err, 1e-4);
                s.t = last ? t_end : s.t + h;
                h = h / fac;
                if (std::abs(h) > opt_.max_step) h = std::copysign(opt_.max_step, h);
                s.y = yn;
                s.k = k7;
                return;
            }
            ++rejected_;
            h = h / std::min(5.0, fac11 / safe);
        }
    }

    State advance(State s, double t_end) {
        double h = initial_step(s, t_end >= s.t ? 1.0 : -1.0);
        while (s.t != t_end) step(s, h, t_end);
        return s;
    }

    long rejected() const { return rejected_; }

private:
    const LeafHamiltonian& H_;
    const DynamicsOptions& opt_;
    long steps_ = 0;
    long rejected_ = 0;
    double err_old_ = 1e-4;
};

void check_rtol(double rtol) {
    if (!(rtol >= 1e-13 && rtol <= 1e-4)) throw DomainError("rtol must lie in [1e-13, 1e-4]");
}

Y to_log(const LeafPoint& p) { return {std::log(p.sigma1), std::log(p.tau1)}; }

// one Newton correction along the gradient back onto the level f0
void project_onto_level(const LeafHamiltonian& H, Y& y, double f0) {
    const auto g = H.grad_log(y[0], y[1]);
    const double gg = g[0] * g[0] + g[1] * g[1];
    if (gg == 0.0) return;
    const double df = H.value(y[0], y[1]) - f0;
    y[0] -= df * g[0] / gg;
    y[1] -= df * g[1] / gg;
}

double chart_distance(const Y& a, const Y& b) {
    return std::hypot(std::exp(a[0]) - std::exp(b[0]), std::exp(a[1]) - std::exp(b[1]));
}

}  // namespace

Trajectory integrate(const LeafPoint& p0, const CurveId& curve, double t_max, const DynamicsOptions& opt) {
    validate(p0);
    check_rtol(opt.rtol);
    if (!std::isfinite(t_max)) throw DomainError("t_max must be finite");
    const LeafHamiltonian H(p0.leaf, curve, opt.evaluator);
    Stepper st(H, opt);

    Trajectory tr{p0.leaf, curve, {}, 0.0, 0};
    auto s = st.start(0.0, to_log(p0));
    const double f0 = H.value(s.y[0], s.y[1]);
    tr.samples.push_back({0.0, p0.sigma1, p0.tau1, f0});
    double h = st.initial_step(s, t_max >= 0.0 ? 1.0 : -1.0);
    while (s.t != t_max) {
        st.step(s, h, t_max);
        if (opt.project) {
            project_onto_level(H, s.y, f0);
            s.k = st.rhs(s.y);
        }
        const double f = H.value(s.y[0], s.y[1]);
        tr.drift = std::max(tr.drift, std::abs(f - f0) / std::abs(f0));
        tr.samples.push_back({s.t, std::exp(s.y[0]), std::exp(s.y[1]), f});
    }
    tr.rejected = st.rejected();
    return tr;
}

Trajectory integrate(const LeafPoint& p0, const CurveId& curve, double t_max, double rtol) {
    DynamicsOptions opt;
    opt.rtol = rtol;
    return integrate(p0, curve, t_max, opt);
}

PeriodResult detect_period(const LeafPoint& p0, const CurveId& curve, const DynamicsOptions& opt) {
    validate(p0);
    check_rtol(opt.rtol);
    const LeafHamiltonian H(p0.leaf, curve, opt.evaluator);
    Stepper st(H, opt);

    const Y y0 = to_log(p0);
    auto s = st.start(0.0, y0);
    const double f0 = H.value(y0[0], y0[1]);
    const double speed = std::hypot(s.k[0], s.k[1]);
    const auto gc = H.grad_chart(p0.sigma1, p0.tau1);
    if (std::hypot(gc[0], gc[1]) * p0.sigma1 * p0.tau1 <= 1e-8 * (1.0 + std::abs(f0)))
        throw DomainError("initial point is a fixed point");
    const Y n{s.k[0] / speed, s.k[1] / speed};
    auto section = [&](const Y& y) { return n[0] * (y[0] - y0[0]) + n[1] * (y[1] - y0[1]); };

    // Sublevel sets of f are convex in log coordinates, so the orbit meets the
    // section line exactly twice: once leaving downwards, once returning upwards.
    PeriodResult res;
    bool been_below = false;
    double h = st.initial_step(s, 1.0);
    for (;;) {
        const auto prev = s;
        st.step(s, h, opt.max_time);
        const double f = H.value(s.y[0], s.y[1]);
        res.drift = std::max(res.drift, std::abs(f - f0) / std::abs(f0));
        const double g = section(s.y);
        if (g < 0.0) been_below = true;
        if (been_below && g >= 0.0) {
            double ta = prev.t, tb = s.t;
            auto sa = prev;
            auto sb = s;
            while (tb - ta > 1e-10 * std::max(1.0, tb)) {
                const double tm = 0.5 * (ta + tb);
                Stepper sub(H, opt);
                auto sm = sub.advance(sa, tm);
                if (section(sm.y) < 0.0) {
                    ta = tm;
                    sa = sm;
                } else {
                    tb = tm;
                    sb = sm;
                }
            }
            res.period = tb;
            res.end = {p0.leaf, std::exp(sb.y[0]), std::exp(sb.y[1])};
            res.return_distance = chart_distance(sb.y, y0);
            const double scale = 1.0 + std::hypot(p0.sigma1, p0.tau1);
            if (res.return_distance > 1e-6 * scale) {
                std::ostringstream msg;
                msg << "period not found: section crossing at t=" << res.period
                    << " misses the start by " << res.return_distance;
                throw NumericalError(msg.str());
            }
            return res;
        }
        if (s.t >= opt.max_time) throw NumericalError("period not found within the time budget");
    }
}

PeriodResult detect_period(const LeafPoint& p0, const CurveId& curve, double rtol) {
    DynamicsOptions opt;
    opt.rtol = rtol;
    return detect_period(p0, curve, opt);
}

namespace {

// minimize a convex phi over the real line, starting near 0
double golden_line(const std::function<double(double)>& phi) {
    double step = 0.5;
    double a = -step, b = step;
    const double f0 = phi(0.0);
    double dir = 0.0;
    if (phi(step) < f0) dir = 1.0;
    else if (phi(-step) < f0) dir = -1.0;
    if (dir != 0.0) {
        double x = 0.0, fx = f0;
        for (int k = 0; k < 60; ++k) {
            const double xn = x + dir * step;
            const double fn = phi(xn);
            if (fn >= fx) break;
            x = xn;
            fx = fn;
            step *= 2.0;
        }
        a = std::min(x - dir * step, x + dir * step);
        b = std::max(x - dir * step, x + dir * step);
    }
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = phi(c), fd = phi(d);
    for (int i = 0; i < 300 && std::abs(b - a) > 1e-12; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = phi(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = phi(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

MinimumResult find_minimum(const LengthVector& L, const CurveId& curve, const MinimizeOptions& opt) {
    validate(L);
    if (!(opt.start_sigma1 > 0.0 && opt.start_tau1 > 0.0)) throw DomainError("start point must be positive");
    const LeafHamiltonian H(L, curve, opt.evaluator);

    Y y{std::log(opt.start_sigma1), std::log(opt.start_tau1)};
    MinimumResult r;
    auto converged = [&](const LeafHamiltonian::Second& s) {
        const double gs = s.g[0] / std::exp(y[0]), gt = s.g[1] / std::exp(y[1]);
        r.grad_norm = std::hypot(gs, gt);
        return r.grad_norm <= 1e-10 * (1.0 + std::abs(s.f));
    };

    int stall = 0;
    for (r.iterations = 0; r.iterations < opt.max_iterations; ++r.iterations) {
        const auto s = H.hessian_log(y[0], y[1]);
        if (converged(s)) break;

        const double det = s.h[0][0] * s.h[1][1] - s.h[0][1] * s.h[1][0];
        bool moved = false;
        if (det > 0.0 && s.h[0][0] > 0.0) {
            Y dy{-(s.h[1][1] * s.g[0] - s.h[0][1] * s.g[1]) / det, -(s.h[0][0] * s.g[1] - s.h[1][0] * s.g[0]) / det};
            const double slope = s.g[0] * dy[0] + s.g[1] * dy[1];
            double lam = 1.0;
            for (int k = 0; k < 40; ++k, lam *= 0.5) {
                const Y yt{y[0] + lam * dy[0], y[1] + lam * dy[1]};
                if (std::abs(yt[0]) > 300.0 || std::abs(yt[1]) > 300.0) continue;
                const double ft = H.value(yt[0], yt[1]);
                if (ft <= s.f + 1e-4 * lam * slope || (ft <= s.f && lam * std::hypot(dy[0], dy[1]) < 1e-12)) {
                    moved = lam * std::hypot(dy[0], dy[1]) > 0.0;
                    y = yt;
                    break;
                }
            }
        }
        if (!moved) {
            // alternate exact line searches along the hexagon (u) and eruption (v) directions
            const Y base = y;
            const double du = golden_line([&](double x) { return H.value(base[0] + x, base[1]); });
            y[0] += du;
            const Y mid = y;
            const double dv = golden_line([&](double x) { return H.value(mid[0], mid[1] + x); });
            y[1] += dv;
            if (std::abs(du) + std::abs(dv) < 1e-14 && ++stall > 3) break;
        }
    }

    // plain Newton polish: the tolerance above is reached one quadratic step
    // before the field vanishes to rounding
    for (int k = 0; k < 3; ++k) {
        const auto s = H.hessian_log(y[0], y[1]);
        const double det = s.h[0][0] * s.h[1][1] - s.h[0][1] * s.h[1][0];
        if (!(det > 0.0)) break;
        const Y yt{y[0] - (s.h[1][1] * s.g[0] - s.h[0][1] * s.g[1]) / det,
                   y[1] - (s.h[0][0] * s.g[1] - s.h[1][0] * s.g[0]) / det};
        const auto gt = H.grad_log(yt[0], yt[1]);
        if (!(std::hypot(gt[0], gt[1]) < std::hypot(s.g[0], s.g[1]))) break;
        y = yt;
    }

    const auto s = H.hessian_log(y[0], y[1]);
    r.sigma1 = std::exp(y[0]);
    r.tau1 = std::exp(y[1]);
    r.f = s.f;
    const bool ok = converged(s);
    const auto hv = hamiltonian_vf_leaf(LeafPoint{L, r.sigma1, r.tau1}, std::array<double, 2>{s.g[0] / r.sigma1, s.g[1] / r.tau1});
    r.hvf_norm = std::hypot(hv[0], hv[1]);
    if (!ok) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "line-search failure: stopped at (" << r.sigma1 << ", " << r.tau1 << ") with f=" << r.f
            << ", |grad|=" << r.grad_norm << " after " << r.iterations << " iterations";
        throw NumericalError(msg.str());
    }
    return r;
}

LevelSet level_set(const LengthVector& L, const CurveId& curve, double level, const DynamicsOptions& opt) {
    validate(L);
    if (!std::isfinite(level)) throw DomainError("level must be finite");
    LevelSet out;
    MinimizeOptions mo;
    mo.evaluator = opt.evaluator;
    out.minimum = find_minimum(L, curve, mo);
    out.level = level;
    if (level <= out.minimum.f) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "below minimum: level " << level << " <= minimum " << out.minimum.f;
        throw DomainError(msg.str());
    }
    const LeafHamiltonian H(L, curve, opt.evaluator);
    // ray of the mixed flow with a = 1 from the minimum; f increases strictly along it
    const Y y0{std::log(out.minimum.sigma1), std::log(out.minimum.tau1)};
    auto along = [&](double r) { return H.value(y0[0] + r, y0[1] + r) - level; };
    double lo = 0.0, hi = 0.125;
    while (along(hi) < 0.0) {
        lo = hi;
        hi *= 2.0;
        if (hi > 200.0) throw NumericalError("level not reached along the ray");
    }
    for (int i = 0; i < 200 && hi - lo > 1e-16 * std::max(1.0, hi); ++i) {
        const double mid = 0.5 * (lo + hi);
        (along(mid) < 0.0 ? lo : hi) = mid;
    }
    const double r = 0.5 * (lo + hi);
    const LeafPoint seed{L, std::exp(y0[0] + r), std::exp(y0[1] + r)};

    const PeriodResult pr = detect_period(seed, curve, opt);
    out.period = pr.period;
    DynamicsOptions fine = opt;
    fine.max_step = std::min(opt.max_step, pr.period / 512.0);
    const Trajectory tr = integrate(seed, curve, pr.period, fine);
    for (const Sample& smp : tr.samples) {
        out.points.push_back({smp.sigma1, smp.tau1});
        out.max_level_error = std::max(out.max_level_error, std::abs(smp.f - level) / std::abs(level));
    }
    const auto& last = out.points.back();
    out.closure = std::hypot(last[0] - seed.sigma1, last[1] - seed.tau1);
    out.points.back() = {seed.sigma1, seed.tau1};
    return out;
}

double convexity_probe(const ScalarChartFunction& f, const ChartPoint& q, double a, MixedVariant v, int n) {
    if (n < 3) throw DomainError("convexity probe needs at least 3 samples");
    const double h = 6.0 / (n - 1);
    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) {
        const double t = -3.0 + i * h;
        const double du = v == MixedVariant::I_aE ? t : a * t;
        const double dv = v == MixedVariant::I_aE ? a * t : t;
        vals[i] = f(q[0] * std::exp(du), q[1] * std::exp(dv));
    }
    double m = std::numeric_limits<double>::infinity();
    for (int i = 1; i + 1 < n; ++i) m = std::min(m, (vals[i - 1] - 2.0 * vals[i] + vals[i + 1]) / (h * h));
    return m;
}

double convexity_probe(const LengthVector& L, const CurveId& curve, const ChartPoint& q, double a,
                       MixedVariant v, int n) {
    const LeafHamiltonian H(L, curve);
    return convexity_probe([&](double s, double t) { return H.value_chart(s, t); }, q, a, v, n);
}

Ray parse_ray(const std::string& s) {
    if (s == "sigma_up") return Ray::sigma_up;
    if (s == "sigma_down") return Ray::sigma_down;
    if (s == "tau_up") return Ray::tau_up;
    if (s == "tau_down") return Ray::tau_down;
    if (s == "both_up") return Ray::both_up;
    throw DomainError("unknown ray '" + s + "'");
}

PropernessReport properness_probe(const LengthVector& L, const CurveId& curve, const ChartPoint& q, Ray ray,
                                  int steps, double factor) {
    if (steps < 4) throw DomainError("properness probe needs at least 4 steps");
    if (!(factor > 1.0)) throw DomainError("ray factor must exceed 1");
    const LeafHamiltonian H(L, curve);
    PropernessReport rep;
    for (int k = 0; k < steps; ++k) {
        const double up = std::pow(factor, k + 1);
        double s = q[0], t = q[1];
        switch (ray) {
            case Ray::sigma_up: s *= up; break;
            case Ray::sigma_down: s /= up; break;
            case Ray::tau_up: t *= up; break;
            case Ray::tau_down: t /= up; break;
            case Ray::both_up: s *= up; t *= up; break;
        }
        rep.values.push_back(H.value_chart(s, t));
    }
    bool inc = true;
    for (int k = steps - 3; k < steps; ++k) inc = inc && rep.values[k] > rep.values[k - 1];
    rep.diverges = inc && rep.values.back() > 1e6;
    return rep;
}

}  // namespace pants
