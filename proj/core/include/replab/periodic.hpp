#pragma once

#include <vector>

#include "replab/map1d.hpp"
#include "replab/orbit.hpp"

namespace replab {

enum class Stability { Superstable, Stable, Neutral, Unstable };

struct PeriodicOrbit {
    int least_period = 1;
    std::vector<double> points;  // canonical rotation: smallest point first
    double multiplier = 0.0;     // (map^n)' along the least cycle
    double mean = 0.0;
    // Cycle closure defect max_i |map(x_i) - x_{i+1}| with every point
    // refined; the n-fold defect |map^n(x0) - x0| is multiplier-amplified and
    // has no double-precision meaning for long expanding cycles.
    double residual = 0.0;
};

struct TangencySuspect {
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double best_residual = 0.0;
};

struct FindResult {
    int period = 1;                         // the n that was searched
    std::vector<PeriodicOrbit> orbits;      // least period exactly n, deduplicated
    long solution_count = 0;                // distinct refined roots of map^n(x) = x
    std::vector<double> solutions;          // the roots themselves, sorted
    std::vector<TangencySuspect> tangencies;
};

// All sign-change brackets of map^n(x)-x on a uniform grid over [lo,hi],
// bisected then Newton-polished to residual <= 1e-12; deduplicated by cyclic
// equivalence. grid_points <= 0 picks max(1e4, 2000*2^n) over the interval.
FindResult find_periodic(const Map1D& map, int n, double lo, double hi, long grid_points = 0,
                         double dedup_tol = 1e-9);

// Periodic orbits of f_{a,b}. The search runs in g-coordinates (where root
// spacing is well conditioned) and maps back through h^{-1}; the endpoint
// fixed points 0 and 1 are appended at n = 1.
FindResult find_periodic_f(const MapParams& p, int n);

struct MeanLawReport {
    double worst_deviation = 0.0;
    int worst_period = 0;
    long orbits_checked = 0;
    long violations = 0;
};

// |mean - b| <= tol for every interior orbit (fixed points 0 and 1 excluded).
MeanLawReport verify_mean_law(const std::vector<PeriodicOrbit>& orbits, double b, double tol);

Stability classify(const PeriodicOrbit& orbit, double neutral_band = 1e-6);

struct AttractorCensus {
    int count = 0;  // distinct attracting sets found from the two critical orbits
    std::vector<std::vector<double>> representatives;  // cycle points, or window sample if aperiodic
    std::vector<int> periods;                          // 0 = aperiodic attractor candidate
};

// Iterates both critical points of f_{a,b}; requires a > 4.
AttractorCensus attractor_census(const MapParams& p, long transient = 200000, int window = 128,
                                 double cluster_tol = 1e-6);

struct BifurcationRow {
    double a;
    double sample;
};

std::vector<BifurcationRow> bifurcation_scan(double b, double a_lo, double a_hi, int a_steps,
                                             int samples_per_a, long transient = 100000);

}  // namespace replab
