#include "replab/maps.hpp"

#include <algorithm>

namespace replab {

FixedPointReport fixed_points(const MapParams& p, MapKind kind) {
    FixedPointReport rep;
    const double a = p.a();
    const double b = p.b();
    if (kind == MapKind::Replicator) {
        const double m0 = std::exp(a * b);
        const double mb = 1.0 - a * b * (1.0 - b);
        const double m1 = std::exp(a * (1.0 - b));
        rep.entries.push_back({0.0, m0, std::abs(m0) < 1.0});
        rep.entries.push_back({b, mb, std::abs(mb) < 1.0});
        rep.entries.push_back({1.0, m1, std::abs(m1) < 1.0});
    } else {
        const double y0 = logit_ln(b);  // ln((1-b)/b)
        const double m = eval_g_prime(p, y0);
        rep.entries.push_back({y0, m, std::abs(m) < 1.0});
    }
    return rep;
}

CriticalPoints critical_points(const MapParams& p, MapKind kind) {
    const double a = p.a();
    if (a <= 4.0)
        throw NoCriticalPoints("critical_points: map is monotone for a <= 4 (a=" + fmt17(a) + ")");
    if (kind == MapKind::Replicator) {
        const double s = std::sqrt(0.25 - 1.0 / a);
        return {0.5 - s, 0.5 + s};
    }
    const double ymax = std::log(a / 2.0 - 1.0 - std::sqrt(a * a / 4.0 - a));
    return {ymax, -ymax};
}

double schwarzian(const MapParams& p, double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("schwarzian: x outside (0,1)");
    const double f1 = eval_f_prime(p, x);
    if (std::abs(f1) < 1e-14)
        throw SingularAtCritical("schwarzian: f' vanishes at x=" + fmt17(x));
    const double f2 = eval_f_second(p, x);
    // f''' by central difference of the closed-form f'', Richardson-extrapolated.
    double h = 1e-4;
    h = std::min({h, 0.45 * x, 0.45 * (1.0 - x)});
    const auto d3 = [&](double step) {
        return (eval_f_second(p, x + step) - eval_f_second(p, x - step)) / (2.0 * step);
    };
    const double f3 = (4.0 * d3(0.5 * h) - d3(h)) / 3.0;
    const double r = f2 / f1;
    return f3 / f1 - 1.5 * r * r;
}

double conjugacy_residual(const MapParams& p, int grid_points, double lo, double hi) {
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double x = lo + (hi - lo) * (i + 0.5) / grid_points;
        // h(f(x)) via the map value and its complement, each computed on its
        // own stable branch; taking ln((1-f)/f) from the rounded f alone
        // throws away half the digits when f sits within 1e-8 of an endpoint.
        const double u = logit_ln(x) + p.a() * (x - p.b());
        const double fx = inv_logit(u);
        const double cfx = inv_logit(-u);  // 1 - f(x), full relative precision
        const double lhs = std::log(cfx) - std::log(fx);
        const double rhs = eval_g(p, logit_ln(x));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double symmetry_residual(const MapParams& p, int grid_points) {
    const MapParams mirrored(p.a(), 1.0 - p.b());
    double worst = 0.0;
    for (int i = 0; i < grid_points; ++i) {
        const double x = (i + 0.5) / grid_points;
        const double lhs = eval_f(mirrored, x);
        const double rhs = 1.0 - eval_f(p, 1.0 - x);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

}  // namespace replab
