#pragma once

#include <optional>
#include <vector>

#include "replab/map1d.hpp"

namespace replab {

struct Orbit {
    std::string map_name;
    double x0 = 0.0;
    std::vector<double> points;  // x0 ... xN
};

struct OverflowGuard : std::overflow_error {
    OverflowGuard(const std::string& msg, double partial) : std::overflow_error(msg), partial_sum(partial) {}
    double partial_sum;
};

Orbit iterate(const Map1D& map, double x0, long n);

// (1/n) sum_{i<n} phi(T^i x0).
double birkhoff_average(const Map1D& map, const std::function<double(double)>& phi, double x0,
                        long n);

// n-th iterate of f_{a,b} through the partial-Birkhoff-sum exponent
//   f^n(x) = 1/(1 + e^{h(x) + a sum_{i<n}(f^i(x) - b)}),
// cross-check against plain composition. Throws OverflowGuard when the
// exponent leaves the safe range.
double iterate_recursive_formula(const MapParams& p, double x, long n);

struct LyapunovResult {
    double exponent;
    long degenerate_hits;  // |T'| < 1e-300 samples, each contributing ln(1e-300)
};

LyapunovResult lyapunov_exponent(const Map1D& map, double x0, long n, long burn_in = 1000);

// sup_{k<=N} |S_k(psi)(x) - k*mean| per sample, S_k the Birkhoff sum, with a
// growth classification from the least-squares slope of the running maxima.
struct CoboundaryProbe {
    long horizon = 0;
    double sup_deviation = 0.0;     // over all samples and k <= N
    double slope = 0.0;             // LSQ slope of running maxima over the second half
    bool bounded = true;            // false = linear growth suspected
    std::vector<double> per_sample_sup;
};

CoboundaryProbe coboundary_probe(const Map1D& map, const std::function<double(double)>& psi,
                                 const std::vector<double>& x_samples, long N,
                                 double reference_mean = 0.0);

}  // namespace replab
