#include <cmath>
#include <vector>

#include <doctest.h>

#include "replab/shiftlab.hpp"

using namespace replab;

namespace {
// Row-reduction rank oracle, deliberately independent of the SVD path.
int gauss_rank(std::vector<std::vector<double>> M, double tol = 1e-9) {
    const int rows = static_cast<int>(M.size());
    const int cols = static_cast<int>(M[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        double best = tol;
        for (int r = rank; r < rows; ++r)
            if (std::abs(M[r][c]) > best) {
                best = std::abs(M[r][c]);
                pivot = r;
            }
        if (pivot < 0) continue;
        std::swap(M[rank], M[pivot]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const double m = M[r][c] / M[rank][c];
            for (int k = c; k < cols; ++k) M[r][k] -= m * M[rank][k];
        }
        ++rank;
    }
    return rank;
}
}  // namespace

TEST_CASE("cycle measures: atoms, weights, invariant means") {
    PeriodicOrbit fp;
    fp.least_period = 1;
    fp.points = {1.0 / 3.0};
    const EmpiricalMeasure mu = orbit_measure(fp);
    REQUIRE(mu.atoms.size() == 1);
    CHECK(mu.atoms[0].second == 1.0);
    CHECK(mu.integrate([](double x) { return x * x; }) == doctest::Approx(1.0 / 9.0));

    const MapParams p(12.0, 1.0 / 3.0);
    const auto res = find_periodic_f(p, 2);
    REQUIRE(res.orbits.size() == 1);
    const EmpiricalMeasure mu2 = orbit_measure(res.orbits[0]);
    REQUIRE(mu2.atoms.size() == 2);
    CHECK(mu2.atoms[0].second == 0.5);
    CHECK(mu2.atoms[1].second == 0.5);
    CHECK(mu2.integrate([](double x) { return x; }) == doctest::Approx(1.0 / 3.0).epsilon(1e-8));
}

TEST_CASE("interior cycle means all equal b") {
    const MapParams p(30.0, 1.0 / 3.0);
    for (int n = 1; n <= 4; ++n)
        for (const auto& orb : find_periodic_f(p, n).orbits) {
            if (orb.points[0] == 0.0 || orb.points[0] == 1.0) continue;
            const EmpiricalMeasure mu = orbit_measure(orb);
            CHECK(mu.integrate([](double x) { return x; }) ==
                  doctest::Approx(1.0 / 3.0).epsilon(1e-8));
        }
}

TEST_CASE("invariance residual vanishes on exact cycles") {
    const MapParams p(12.0, 1.0 / 3.0);
    const Map1D f = make_replicator_map(p);
    PeriodicOrbit fp;
    fp.points = {1.0 / 3.0};
    CHECK(invariance_residual(orbit_measure(fp), f, [](double x) { return std::sin(x); }) <=
          1e-14);
    const auto res = find_periodic_f(p, 2);
    CHECK(invariance_residual(orbit_measure(res.orbits[0]), f,
                              [](double x) { return x * x; }) <= 1e-10);
}

TEST_CASE("long-orbit measures are only approximately invariant") {
    // Rotation orbits never collapse in floating point (unlike doubling, which
    // shifts the finite binary expansion of the seed to 0).
    const Map1D rot = make_rotation((std::sqrt(5.0) - 1.0) / 2.0);
    auto phi = [](double x) { return std::cos(6.283185307179586 * x); };
    // Telescoping: the residual is |phi(x_0) - phi(x_n)| / n <= 2/n.
    CHECK(invariance_residual(long_orbit_measure(rot, 0.1234567, 1000), rot, phi) <=
          2.0 / 1000.0 + 1e-9);
    CHECK(invariance_residual(long_orbit_measure(rot, 0.1234567, 100000), rot, phi) <=
          2.0 / 100000.0 + 1e-9);
}

TEST_CASE("uniform grids are nearly invariant under doubling") {
    // phi = exp: doubling moves grid sums of periodic functions exactly, so a
    // non-periodic observable is needed to see the O(1/n^2) midpoint error.
    const Map1D d = make_doubling();
    auto phi = [](double x) { return std::exp(x); };
    const double r_small = invariance_residual(uniform_grid_measure(0.0, 1.0, 100), d, phi);
    const double r_large = invariance_residual(uniform_grid_measure(0.0, 1.0, 10000), d, phi);
    CHECK(r_small <= 1e-3);
    CHECK(r_large <= 1e-7);
    CHECK(r_large < r_small);
}

TEST_CASE("least-squares recovers the exact conjugating coboundary") {
    const MapParams p(30.0, 1.0 / 3.0);
    const Map1D f = make_replicator_map(p);
    const auto cp = critical_points(p, MapKind::Replicator);
    const double fmin = eval_f(p, cp.hi), fmax = eval_f(p, cp.lo);
    std::vector<double> xs;
    for (int i = 0; i < 2000; ++i)
        xs.push_back(fmin + (fmax - fmin) * (0.001 + 0.998 * (i + 0.5) / 2000.0));
    FunctionBasis basis = chebyshev_basis(8, fmin, fmax);
    add_logit(basis);
    const LsqResult r =
        coboundary_lsq(f, [&](double x) { return x - p.b(); }, basis, xs);
    CHECK(r.rms_residual <= 1e-9);
    // x - b = phi - phi o f with phi = -h/a: the logit coefficient is -1/a.
    CHECK(r.coefficients.back() == doctest::Approx(-1.0 / 30.0).epsilon(1e-6));
}

TEST_CASE("polynomials alone cannot absorb the coboundary") {
    const MapParams p(30.0, 1.0 / 3.0);
    const Map1D f = make_replicator_map(p);
    const auto cp = critical_points(p, MapKind::Replicator);
    const double fmin = eval_f(p, cp.hi), fmax = eval_f(p, cp.lo);
    std::vector<double> xs;
    for (int i = 0; i < 2000; ++i) xs.push_back(fmin + (fmax - fmin) * (i + 0.5) / 2000.0);
    const LsqResult r = coboundary_lsq(f, [&](double x) { return x - p.b(); },
                                       chebyshev_basis(8, fmin, fmax), xs);
    CHECK(r.rms_residual > 1e-6);
}

TEST_CASE("rotation cosines are coboundaries: residual drops with the degree") {
    const double alpha = (std::sqrt(5.0) - 1.0) / 2.0;
    const Map1D rot = make_rotation(alpha);
    auto psi = [](double x) { return std::cos(6.283185307179586 * x); };
    std::vector<double> xs;
    for (int i = 0; i < 1000; ++i) xs.push_back((i + 0.5) / 1000.0);
    double prev = 1.0;
    for (int deg : {1, 2, 4}) {
        const LsqResult r = coboundary_lsq(rot, psi, trigonometric_basis(deg), xs);
        CHECK(r.rms_residual <= prev + 1e-15);
        prev = r.rms_residual;
    }
    // The exact solve needs only the first harmonic; degree 4 is conclusive.
    CHECK(prev <= 1e-10);
}

TEST_CASE("constants are not coboundaries under invariant sampling") {
    const MapParams p(12.0, 1.0 / 3.0);
    const Map1D f = make_replicator_map(p);
    const auto res = find_periodic_f(p, 2);
    std::vector<double> xs = res.orbits[0].points;  // exact invariant cycle
    FunctionBasis basis = chebyshev_basis(4, 0.0, 1.0);
    const LsqResult r = coboundary_lsq(f, [](double) { return 1.0; }, basis, xs);
    CHECK(r.rms_residual >= 0.99);
}

TEST_CASE("rank probe counts independent cycle measures on the doubling map") {
    const Map1D d = make_doubling();
    std::vector<EmpiricalMeasure> measures;
    const FunctionBasis basis = chebyshev_basis(8, 0.0, 1.0);
    int prev_rank = 0;
    for (int n = 1; n <= 6; ++n) {
        PeriodicOrbit orb;
        orb.least_period = n;
        for (int i = 0; i < n; ++i) {
            double x = doubling_periodic_point(n, 1);
            for (int k = 0; k < i; ++k) x = d.eval(x);
            orb.points.push_back(x);
        }
        measures.push_back(orbit_measure(orb));
        const int rank = measure_rank_probe(measures, basis);
        CHECK(rank == static_cast<int>(measures.size()));
        CHECK(rank >= prev_rank);  // adding a measure never loses rank
        prev_rank = rank;

        // Independent oracle: Gaussian elimination on the moment matrix.
        std::vector<std::vector<double>> M;
        for (const auto& mu : measures) {
            std::vector<double> row;
            for (const auto& bf : basis.members) row.push_back(mu.integrate(bf.fn));
            M.push_back(row);
        }
        CHECK(gauss_rank(M) == rank);
    }
}

TEST_CASE("single measure has rank one") {
    PeriodicOrbit fp;
    fp.points = {0.25};
    CHECK(measure_rank_probe({orbit_measure(fp)}, chebyshev_basis(4, 0.0, 1.0)) == 1);
}

TEST_CASE("the centered first moment is degenerate across replicator cycles") {
    // Every interior cycle integrates x to b: the column x - b is numerically 0.
    const MapParams p(30.0, 1.0 / 3.0);
    for (int n = 1; n <= 4; ++n)
        for (const auto& orb : find_periodic_f(p, n).orbits) {
            if (orb.points[0] == 0.0 || orb.points[0] == 1.0) continue;
            const EmpiricalMeasure mu = orbit_measure(orb);
            CHECK(std::abs(mu.integrate([&](double x) { return x - p.b(); })) <= 1e-8);
        }
}
