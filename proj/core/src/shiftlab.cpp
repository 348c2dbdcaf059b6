#include "replab/shiftlab.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace replab {

EmpiricalMeasure orbit_measure(const PeriodicOrbit& orbit) {
    EmpiricalMeasure mu;
    mu.source = MeasureSource::PeriodicOrbit;
    const double w = 1.0 / static_cast<double>(orbit.points.size());
    for (double x : orbit.points) mu.atoms.emplace_back(x, w);
    return mu;
}

EmpiricalMeasure long_orbit_measure(const Map1D& map, double x0, long n, long burn_in) {
    EmpiricalMeasure mu;
    mu.source = MeasureSource::LongOrbit;
    double x = x0;
    for (long i = 0; i < burn_in; ++i) x = map.eval(x);
    const double w = 1.0 / static_cast<double>(n);
    for (long i = 0; i < n; ++i) {
        mu.atoms.emplace_back(x, w);
        x = map.eval(x);
    }
    return mu;
}

EmpiricalMeasure uniform_grid_measure(double lo, double hi, long n) {
    EmpiricalMeasure mu;
    mu.source = MeasureSource::UniformGrid;
    const double w = 1.0 / static_cast<double>(n);
    for (long i = 0; i < n; ++i) mu.atoms.emplace_back(lo + (hi - lo) * (i + 0.5) / n, w);
    return mu;
}

double invariance_residual(const EmpiricalMeasure& mu, const Map1D& map,
                           const std::function<double(double)>& phi) {
    const double direct = mu.integrate(phi);
    const double pushed = mu.integrate([&](double x) { return phi(map.eval(x)); });
    return std::abs(direct - pushed);
}

FunctionBasis chebyshev_basis(int degree, double lo, double hi) {
    FunctionBasis basis;
    for (int k = 0; k <= degree; ++k) {
        basis.members.push_back({"T" + std::to_string(k), [k, lo, hi](double x) {
                                     double t = 2.0 * (x - lo) / (hi - lo) - 1.0;
                                     t = std::clamp(t, -1.0, 1.0);
                                     return std::cos(k * std::acos(t));
                                 }});
    }
    return basis;
}

void add_logit(FunctionBasis& basis) {
    basis.members.push_back({"logit", [](double x) { return logit_ln(x); }});
}

FunctionBasis trigonometric_basis(int degree) {
    FunctionBasis basis;
    constexpr double tau = 6.283185307179586;
    for (int k = 1; k <= degree; ++k) {
        basis.members.push_back(
            {"cos" + std::to_string(k), [k](double x) { return std::cos(tau * k * x); }});
        basis.members.push_back(
            {"sin" + std::to_string(k), [k](double x) { return std::sin(tau * k * x); }});
    }
    return basis;
}

LsqResult coboundary_lsq(const Map1D& map, const std::function<double(double)>& psi,
                         const FunctionBasis& basis, const std::vector<double>& samples,
                         double ridge) {
    const long n = static_cast<long>(samples.size());
    const int m = static_cast<int>(basis.members.size());
    Eigen::MatrixXd A(n, m);
    Eigen::VectorXd rhs(n);
    for (long i = 0; i < n; ++i) {
        const double x = samples[i];
        const double fx = map.eval(x);
        for (int j = 0; j < m; ++j)
            A(i, j) = basis.members[j].fn(x) - basis.members[j].fn(fx);
        rhs(i) = psi(x);
    }
    Eigen::MatrixXd G = A.transpose() * A;
    const Eigen::VectorXd Atb = A.transpose() * rhs;

    LsqResult res;
    res.ridge = ridge;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(G);
    const double smax = svd.singularValues()(0);
    const double smin = svd.singularValues()(m - 1);
    res.condition = smin > 0.0 ? smax / smin : std::numeric_limits<double>::infinity();
    if (res.condition > 1e30) {
        // Zero or near-dependent columns; a stronger ridge keeps the solve stable.
        res.ridge = ridge * 100.0 + 1e-14 * smax;
        res.ill_conditioned = true;
    }
    G.diagonal().array() += res.ridge;
    const Eigen::VectorXd c = G.ldlt().solve(Atb);
    res.coefficients.assign(c.data(), c.data() + m);
    const double sq = (A * c - rhs).squaredNorm() / static_cast<double>(n);
    res.rms_residual = std::sqrt(sq);
    return res;
}

int measure_rank_probe(const std::vector<EmpiricalMeasure>& measures, const FunctionBasis& basis) {
    if (measures.size() < 1) throw std::invalid_argument("measure_rank_probe: need measures");
    const int rows = static_cast<int>(measures.size());
    const int cols = static_cast<int>(basis.members.size());
    Eigen::MatrixXd M(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) M(i, j) = measures[i].integrate(basis.members[j].fn);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-8 * sv(0);
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

}  // namespace replab
