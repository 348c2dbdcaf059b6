#pragma once

#include <array>
#include <vector>

#include "replab/params.hpp"
#include "replab/util.hpp"

namespace replab {

// f_{a,b}(x) = x / (x + (1-x) e^{a(x-b)}).
// Interior points go through 1/(1+e^u) with u = ln((1-x)/x) + a(x-b), so the
// naive exponential e^{a(x-b)} is never formed (a up to ~1e3 is supported).
inline double eval_f(const MapParams& p, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("eval_f: x outside [0,1]");
    if (x == 0.0 || x == 1.0 || x == p.b()) return x;  // exact fixed points
    const double u = logit_ln(x) + p.a() * (x - p.b());
    return inv_logit(u);
}

// Closed-form f', written in terms of f itself:
//   f' = [f(1-f)/(x(1-x))] * (1 - a x(1-x)),
// which stays finite wherever the naive e^{a(x-b)} form would overflow.
inline double eval_f_prime(const MapParams& p, double x) {
    if (!(x >= 0.0 && x <= 1.0)) throw std::domain_error("eval_f_prime: x outside [0,1]");
    const double a = p.a();
    if (x == 0.0) return std::exp(a * p.b());
    if (x == 1.0) return std::exp(a * (1.0 - p.b()));
    const double fx = eval_f(p, x);
    const double q = fx * (1.0 - fx) / (x * (1.0 - x));
    return q * (1.0 - a * x * (1.0 - x));
}

// Closed-form f'' by differentiating f' = E P / D^2 and eliminating E, D:
//   f'' = q * (aP + P' - 2P (f/x - (1-f)/(1-x) + a(1-f))),  q = f(1-f)/(x(1-x)).
inline double eval_f_second(const MapParams& p, double x) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("eval_f_second: x outside (0,1)");
    const double a = p.a();
    const double fx = eval_f(p, x);
    const double q = fx * (1.0 - fx) / (x * (1.0 - x));
    const double P = 1.0 - a * x * (1.0 - x);
    const double Pp = a * (2.0 * x - 1.0);
    const double r = fx / x - (1.0 - fx) / (1.0 - x) + a * (1.0 - fx);
    return q * (a * P + Pp - 2.0 * P * r);
}

// g_{a,b}(y) = y + a/(e^y+1) - ab, entire on the line.
inline double eval_g(const MapParams& p, double y) {
    return y + p.a() * inv_logit(y) - p.a() * p.b();
}

// g' = 1 - a s(1-s) with s = 1/(e^y+1).
inline double eval_g_prime(const MapParams& p, double y) {
    const double s = inv_logit(y);
    return 1.0 - p.a() * s * (1.0 - s);
}

// g'' = a s(1-s)(1-2s); vanishes at y = 0, positive for y > 0.
inline double eval_g_second(const MapParams& p, double y) {
    const double s = inv_logit(y);
    return p.a() * s * (1.0 - s) * (1.0 - 2.0 * s);
}

struct FixedPointEntry {
    double point;
    double multiplier;
    bool stable;  // |multiplier| < 1
};

struct FixedPointReport {
    std::vector<FixedPointEntry> entries;
};

// f has exactly {0, b, 1}; g has the single fixed point y0 = ln((1-b)/b).
FixedPointReport fixed_points(const MapParams& p, MapKind kind);

// Location of the local max (lo) and local min (hi) of the map.
// Throws NoCriticalPoints when a <= 4.
struct CriticalPoints {
    double lo;  // x_max resp. y_max
    double hi;  // x_min resp. y_min
};
CriticalPoints critical_points(const MapParams& p, MapKind kind);

// Sf = f'''/f' - (3/2)(f''/f')^2 with closed-form f', f'' and a
// Richardson-extrapolated central difference for f'''.
// Throws SingularAtCritical when f' vanishes (x at a critical point).
double schwarzian(const MapParams& p, double x);

// sup over a uniform grid in [lo,hi] of |h(f(x)) - g(h(x))| with the logit h.
double conjugacy_residual(const MapParams& p, int grid_points, double lo = 0.01, double hi = 0.99);

// sup over a uniform grid of |f_{a,1-b}(x) - (1 - f_{a,b}(1-x))|.
double symmetry_residual(const MapParams& p, int grid_points);

}  // namespace replab
