#pragma once

#include <functional>
#include <string>
#include <vector>

#include "replab/map1d.hpp"
#include "replab/periodic.hpp"

namespace replab {

enum class MeasureSource { PeriodicOrbit, LongOrbit, UniformGrid };

// Weighted atoms on the interval; weights are normalized to 1.
struct EmpiricalMeasure {
    std::vector<std::pair<double, double>> atoms;  // (point, weight)
    MeasureSource source = MeasureSource::PeriodicOrbit;

    double integrate(const std::function<double(double)>& phi) const {
        double s = 0.0;
        for (const auto& [x, w] : atoms) s += w * phi(x);
        return s;
    }
};

EmpiricalMeasure orbit_measure(const PeriodicOrbit& orbit);
EmpiricalMeasure long_orbit_measure(const Map1D& map, double x0, long n, long burn_in = 1000);
EmpiricalMeasure uniform_grid_measure(double lo, double hi, long n);

// |int phi dmu - int phi o T dmu|.
double invariance_residual(const EmpiricalMeasure& mu, const Map1D& map,
                           const std::function<double(double)>& phi);

struct BasisFunction {
    std::string name;
    std::function<double(double)> fn;
};

struct FunctionBasis {
    std::vector<BasisFunction> members;
};

// Chebyshev polynomials T_0..T_degree rescaled to [lo, hi].
FunctionBasis chebyshev_basis(int degree, double lo, double hi);
// Appends the logit h (usable only on intervals interior to (0,1)).
void add_logit(FunctionBasis& basis);
// Appends cos(2 pi k x), sin(2 pi k x) for k = 1..degree (circle maps).
FunctionBasis trigonometric_basis(int degree);

struct LsqResult {
    double rms_residual = 0.0;
    std::vector<double> coefficients;  // aligned with the basis members
    double condition = 0.0;            // estimate for the normal equations
    double ridge = 0.0;                // ridge actually used
    bool ill_conditioned = false;
};

// Minimizes the RMS over samples of psi - (phi - phi o T), phi in the basis
// span, via normal equations with ridge 1e-12 (increased and flagged when the
// system is ill conditioned).
LsqResult coboundary_lsq(const Map1D& map, const std::function<double(double)>& psi,
                         const FunctionBasis& basis, const std::vector<double>& samples,
                         double ridge = 1e-12);

// Effective rank of M[i][j] = int basis_j dmu_i (singular values > 1e-8 * max).
int measure_rank_probe(const std::vector<EmpiricalMeasure>& measures, const FunctionBasis& basis);

}  // namespace replab
