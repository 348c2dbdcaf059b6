#include "replab/orbit.hpp"

#include <algorithm>
#include <cmath>

namespace replab {

Orbit iterate(const Map1D& map, double x0, long n) {
    if (n < 0) throw std::invalid_argument("iterate: n must be >= 0");
    Orbit orb;
    orb.map_name = map.name;
    orb.x0 = x0;
    orb.points.reserve(n + 1);
    double x = x0;
    orb.points.push_back(x);
    for (long k = 0; k < n; ++k) {
        x = map.eval(x);
        orb.points.push_back(x);
    }
    return orb;
}

double birkhoff_average(const Map1D& map, const std::function<double(double)>& phi, double x0,
                        long n) {
    if (n < 1) throw std::invalid_argument("birkhoff_average: n must be >= 1");
    double sum = 0.0;
    double x = x0;
    for (long i = 0; i < n; ++i) {
        sum += phi(x);
        x = map.eval(x);
    }
    return sum / static_cast<double>(n);
}

double iterate_recursive_formula(const MapParams& p, double x, long n) {
    if (!(x > 0.0 && x < 1.0)) throw std::domain_error("iterate_recursive_formula: x outside (0,1)");
    if (n < 1) throw std::invalid_argument("iterate_recursive_formula: n must be >= 1");
    double sum = 0.0;  // sum_{i<n} (f^i(x) - b)
    double xi = x;
    for (long i = 0; i < n; ++i) {
        sum += xi - p.b();
        xi = eval_f(p, xi);
    }
    const double u = logit_ln(x) + p.a() * sum;
    if (std::abs(u) > 745.0)
        throw OverflowGuard("iterate_recursive_formula: exponent " + fmt17(u) +
                                " exceeds safe range (partial sum " + fmt17(sum) + ")",
                            sum);
    return inv_logit(u);
}

LyapunovResult lyapunov_exponent(const Map1D& map, double x0, long n, long burn_in) {
    if (!map.deriv) throw std::invalid_argument("lyapunov_exponent: map has no derivative");
    if (n < 1) throw std::invalid_argument("lyapunov_exponent: n must be >= 1");
    double x = x0;
    for (long i = 0; i < burn_in; ++i) x = map.eval(x);
    double sum = 0.0;
    long hits = 0;
    for (long i = 0; i < n; ++i) {
        const double d = std::abs(map.deriv(x));
        if (d < 1e-300) {
            sum += std::log(1e-300);
            ++hits;
        } else {
            sum += std::log(d);
        }
        x = map.eval(x);
    }
    return {sum / static_cast<double>(n), hits};
}

CoboundaryProbe coboundary_probe(const Map1D& map, const std::function<double(double)>& psi,
                                 const std::vector<double>& x_samples, long N,
                                 double reference_mean) {
    CoboundaryProbe probe;
    probe.horizon = N;
    probe.per_sample_sup.reserve(x_samples.size());

    std::vector<double> ks, maxima;  // running maxima over the pooled samples, second half
    std::vector<double> pooled_max(N + 1, 0.0);
    for (double x0 : x_samples) {
        double x = x0;
        double S = 0.0;
        double sup = 0.0;
        for (long k = 1; k <= N; ++k) {
            S += psi(x);
            x = map.eval(x);
            const double dev = std::abs(S - k * reference_mean);
            sup = std::max(sup, dev);
            pooled_max[k] = std::max(pooled_max[k], sup);
        }
        probe.per_sample_sup.push_back(sup);
        probe.sup_deviation = std::max(probe.sup_deviation, sup);
    }
    // Make the pooled track a running max in k as well.
    for (long k = 1; k <= N; ++k) pooled_max[k] = std::max(pooled_max[k], pooled_max[k - 1]);
    for (long k = N / 2; k <= N; ++k) {
        ks.push_back(static_cast<double>(k));
        maxima.push_back(pooled_max[k]);
    }
    probe.slope = ks.size() >= 2 ? lsq_slope(ks, maxima) : 0.0;
    // Growth suspected when the fitted increase over the second half is a
    // visible fraction of the current sup.
    probe.bounded = probe.slope * (N / 2.0) <= 0.05 * probe.sup_deviation + 1e-9;
    return probe;
}

}  // namespace replab
