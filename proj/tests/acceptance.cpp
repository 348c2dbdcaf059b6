// Integration gate: one pass/fail line per criterion, exit code = failures.

#include <cmath>
#include <cstdio>
#include <vector>

#include "replab/certificate.hpp"
#include "replab/orbit.hpp"
#include "replab/periodic.hpp"
#include "replab/shiftlab.hpp"
#include "replab/symbolic.hpp"

using namespace replab;

namespace {
int failures = 0;

void report(int id, const char* what, bool ok, const std::string& detail) {
    std::printf("%s  %2d  %-28s %s\n", ok ? "PASS" : "FAIL", id, what, detail.c_str());
    if (!ok) ++failures;
}

const std::vector<std::pair<double, double>> kPairs{
    {12.0, 1.0 / 3.0}, {30.0, 1.0 / 3.0}, {30.0, 0.25}, {30.0, 0.75}};

void c1_mean_law() {
    double worst = 0.0;
    double worst_res = 0.0;
    long orbits = 0;
    bool ok = true;
    for (const auto& [a, b] : kPairs) {
        const MapParams p(a, b);
        std::vector<PeriodicOrbit> all;
        for (int n = 1; n <= 8; ++n) {
            const auto res = find_periodic_f(p, n);
            for (const auto& orb : res.orbits) {
                if (orb.residual > 1e-12) ok = false;
                worst_res = std::max(worst_res, orb.residual);
            }
            all.insert(all.end(), res.orbits.begin(), res.orbits.end());
        }
        const auto rep = verify_mean_law(all, b, 1e-8);
        if (rep.violations > 0) ok = false;
        worst = std::max(worst, rep.worst_deviation);
        orbits += rep.orbits_checked;
    }
    report(1, "mean law to period 8", ok,
           "interior orbits=" + std::to_string(orbits) + " worst |mean-b|=" + fmt17(worst) +
               " worst residual=" + fmt17(worst_res));
}

void c2_conjugacy() {
    double worst = 0.0;
    for (const auto& [a, b] : kPairs)
        worst = std::max(worst, conjugacy_residual(MapParams(a, b), 10000));
    report(2, "logit conjugacy", worst <= 1e-10, "sup residual=" + fmt17(worst));
}

void c3_symmetry() {
    double worst = 0.0;
    for (const auto& [a, b] : kPairs)
        worst = std::max(worst, symmetry_residual(MapParams(a, b), 10000));
    report(3, "b <-> 1-b mirror symmetry", worst <= 1e-12, "sup residual=" + fmt17(worst));
}

void c4_certificate() {
    const HyperbolicCertificate cert = certify(MapParams(30.0, 1.0 / 3.0), 10);
    const double product = cert.margin_a6 + 1.0;
    const bool ok = cert.pass && cert.a2.pass && cert.a2.margins[0] > 0.0 &&
                    cert.a2.margins[1] > 0.0 && cert.a2.margins[2] > 0.0 && cert.a6_pass &&
                    product > 2.9 && product < 3.3 && cert.cover_J1 && cert.cover_J2 &&
                    cert.disjoint_J2 && cert.expansion_margin > 0.0;
    report(4, "hyperbolicity certificate", ok,
           "a6 product=" + fmt17(product) +
               " expansion margin=" + fmt17(cert.expansion_margin) + " depth=10");
}

void c5_symbolic_counts() {
    bool ok = counts(1).B == 1 && counts(2).B == 3;
    for (int n = 1; n <= 20 && ok; ++n) {
        const auto en = enumerate_periodic(n);
        if (BigInt(en.words.size()) != en.table.L) ok = false;
        if (en.table.A != counts(n + 2).F) ok = false;
        // Linear words, exhaustively.
        if (BigInt(admissible_words(n).size()) != en.table.A) ok = false;
    }
    report(5, "subshift counts to n=20", ok, "B_n = L_n, A_n = F_{n+2}, exhaustive");
}

void c6_periodic_lower_bound() {
    const HyperbolicCertificate cert = certify(MapParams(30.0, 1.0 / 3.0), 10);
    bool ok = cert.pass;
    std::string detail;
    for (int n = 1; n <= 10; ++n) {
        const long found = count_periodic_in_J(cert, n);
        if (BigInt(found) < counts(n).L) ok = false;
        if (n == 3 || n == 10)
            detail += "n=" + std::to_string(n) + ": " + std::to_string(found) + "/" +
                      counts(n).L.str() + " ";
    }
    report(6, "periodic points >= L_n", ok, detail);
}

void c7_threshold() {
    const auto below = attractor_census(MapParams(8.9, 1.0 / 3.0));
    const auto above = attractor_census(MapParams(9.1, 1.0 / 3.0));
    const bool ok = below.count == 1 && below.periods[0] == 1 && above.count == 1 &&
                    above.periods[0] == 2;
    report(7, "period 1 -> 2 across a=9", ok,
           "period(a=8.9)=" + std::to_string(below.periods.empty() ? -1 : below.periods[0]) +
               " period(a=9.1)=" + std::to_string(above.periods.empty() ? -1 : above.periods[0]));
}

void c8_schwarzian() {
    bool ok = true;
    double worst = -1e300;
    for (double a : {4.5, 8.0, 30.0})
        for (double b : {0.2, 1.0 / 3.0, 0.5}) {
            const MapParams p(a, b);
            const auto cp = critical_points(p, MapKind::Replicator);
            for (int i = 1; i < 10000; ++i) {
                const double x = i / 10000.0;
                if (std::abs(x - cp.lo) < 1e-4 || std::abs(x - cp.hi) < 1e-4) continue;
                const double s = schwarzian(p, x);
                worst = std::max(worst, s);
                if (!(s < 0.0)) ok = false;
            }
        }
    report(8, "negative Schwarzian", ok, "max over grids=" + fmt17(worst));
}

void c9_coboundary() {
    const MapParams p(30.0, 1.0 / 3.0);
    const Map1D f = make_replicator_map(p);
    const auto cp = critical_points(p, MapKind::Replicator);
    const double fmin = eval_f(p, cp.hi), fmax = eval_f(p, cp.lo);
    std::vector<double> xs;
    for (int i = 0; i < 2000; ++i)
        xs.push_back(fmin + (fmax - fmin) * (0.001 + 0.998 * (i + 0.5) / 2000.0));
    FunctionBasis basis = chebyshev_basis(8, fmin, fmax);
    add_logit(basis);
    const LsqResult r = coboundary_lsq(f, [&](double x) { return x - p.b(); }, basis, xs);
    const double rel = std::abs(r.coefficients.back() - (-1.0 / 30.0)) / (1.0 / 30.0);
    report(9, "x-b is a logit coboundary", r.rms_residual <= 1e-9 && rel <= 1e-6,
           "rms=" + fmt17(r.rms_residual) + " logit coeff rel err=" + fmt17(rel));
}

void c10_symmetric_degeneracy() {
    bool ok = true;
    int worst_period = 0;
    for (double a = 4.5; a <= 100.0; a += 0.5) {
        const auto census = attractor_census(MapParams(a, 0.5));
        for (int per : census.periods) {
            worst_period = std::max(worst_period, per);
            if (per > 2 || per == 0) ok = false;  // 0 flags an aperiodic candidate
        }
        if (check_A2(MapParams(a, 0.5)).margins[2] > 0.0) ok = false;
        if (a <= 40.0 && certify(MapParams(a, 0.5), 3, 50).pass) ok = false;
    }
    report(10, "b=1/2 degeneracy", ok,
           "max attractor period=" + std::to_string(worst_period) +
               ", margin (iii) nonpositive, certificate never passes");
}
}  // namespace

int main() {
    c1_mean_law();
    c2_conjugacy();
    c3_symmetry();
    c4_certificate();
    c5_symbolic_counts();
    c6_periodic_lower_bound();
    c7_threshold();
    c8_schwarzian();
    c9_coboundary();
    c10_symmetric_degeneracy();
    std::printf("%s (%d/10)\n", failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILING",
                10 - failures);
    return failures;
}
