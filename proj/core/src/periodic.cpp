#include "replab/periodic.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace replab {

namespace {

double iterate_n(const Map1D& map, double x, int n) {
    for (int i = 0; i < n; ++i) x = map.eval(x);
    return x;
}

double deriv_n(const Map1D& map, double x, int n) {
    double prod = 1.0;
    for (int i = 0; i < n; ++i) {
        prod *= map.deriv(x);
        x = map.eval(x);
    }
    return prod;
}

struct RefineOutcome {
    bool ok = false;
    double root = 0.0;
    double residual = 0.0;
};

// Bisection on the sign-change bracket, then Newton with fallback.
RefineOutcome refine_root(const Map1D& map, int n, double lo, double hi, double flo) {
    auto F = [&](double x) { return iterate_n(map, x, n) - x; };
    for (int it = 0; it < 80 && (hi - lo) > 1e-15 * (1.0 + std::abs(lo)); ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = F(mid);
        if (fm == 0.0) {
            return {true, mid, 0.0};
        }
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    double x = 0.5 * (lo + hi);
    double best = x;
    double best_res = std::abs(F(x));
    for (int it = 0; it < 100 && best_res > 1e-13; ++it) {
        const double d = deriv_n(map, x, n) - 1.0;
        if (d == 0.0) break;
        const double xn = x - F(x) / d;
        if (!(xn >= lo - 1e-9 && xn <= hi + 1e-9)) break;  // fall back to the bisected value
        x = xn;
        const double r = std::abs(F(x));
        if (r < best_res) {
            best = x;
            best_res = r;
        }
    }
    RefineOutcome out;
    out.root = best;
    out.residual = best_res;
    // |F| near a simple root cannot drop below slope * ulp(root); for long
    // periods the slope reaches 1e6+ and the absolute 1e-12 bar is unreachable
    // in double precision. Accept the conditioning-limited best.
    const double slope = std::abs(deriv_n(map, best, n) - 1.0);
    const double floor_res =
        4.0 * std::numeric_limits<double>::epsilon() * slope * (1.0 + std::abs(best));
    out.ok = best_res <= std::max(1e-12, floor_res);
    return out;
}

int least_period_of_cycle(const std::vector<double>& pts, double tol) {
    const int n = static_cast<int>(pts.size());
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        double worst = 0.0;
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(pts[(i + d) % n] - pts[i]));
        if (worst < tol) return d;
    }
    return n;
}

std::vector<double> canonical_rotation(std::vector<double> cycle) {
    const auto it = std::min_element(cycle.begin(), cycle.end());
    std::rotate(cycle.begin(), it, cycle.end());
    return cycle;
}

bool same_cycle(const std::vector<double>& a, const std::vector<double>& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace

FindResult find_periodic(const Map1D& map, int n, double lo, double hi, long grid_points,
                         double dedup_tol) {
    if (n < 1) throw std::invalid_argument("find_periodic: n must be >= 1");
    if (grid_points <= 0)
        grid_points = std::max<long>(10000, 2000L * (1L << std::min(n, 24)));

    FindResult result;
    result.period = n;

    // Grid pass: F on the grid, then sign-change brackets.
    std::vector<double> xs(grid_points), Fs(grid_points);
    const double step = (hi - lo) / static_cast<double>(grid_points - 1);
    parallel_for(grid_points, [&](std::size_t i0, std::size_t i1) {
        for (std::size_t i = i0; i < i1; ++i) {
            xs[i] = lo + step * static_cast<double>(i);
            Fs[i] = iterate_n(map, xs[i], n) - xs[i];
        }
    });

    std::vector<double> roots;
    for (long i = 0; i + 1 < grid_points; ++i) {
        if (Fs[i] == 0.0) {
            roots.push_back(xs[i]);
            continue;
        }
        if (Fs[i] * Fs[i + 1] < 0.0) {
            const auto out = refine_root(map, n, xs[i], xs[i + 1], Fs[i]);
            if (out.ok)
                roots.push_back(out.root);
            else
                result.tangencies.push_back({xs[i], xs[i + 1], out.residual});
        }
    }
    if (Fs.back() == 0.0) roots.push_back(xs.back());

    std::sort(roots.begin(), roots.end());
    std::vector<double> dedup;
    for (double r : roots)
        if (dedup.empty() || r - dedup.back() > dedup_tol) dedup.push_back(r);
    result.solutions = dedup;
    result.solution_count = static_cast<long>(dedup.size());

    // Build least-period-n orbits, deduplicated by cyclic equivalence.
    for (double r : dedup) {
        std::vector<double> cycle(n);
        double x = r;
        for (int i = 0; i < n; ++i) {
            cycle[i] = x;
            x = map.eval(x);
        }
        // Polish every point of the cycle individually: forward iteration
        // from the refined seed amplifies its rounding by the multiplier.
        if (map.deriv)
            for (int i = 1; i < n; ++i) {
                double& xi = cycle[i];
                for (int it = 0; it < 4; ++it) {
                    const double d = deriv_n(map, xi, n) - 1.0;
                    if (d == 0.0) break;
                    const double step_i = (iterate_n(map, xi, n) - xi) / d;
                    if (!(std::abs(step_i) < dedup_tol)) break;
                    xi -= step_i;
                }
            }
        const int d = least_period_of_cycle(cycle, 10.0 * dedup_tol);
        if (d != n) continue;  // divisor-period solution, listed at its own period
        auto canon = canonical_rotation(cycle);
        bool dup = false;
        for (const auto& orb : result.orbits)
            if (same_cycle(orb.points, canon, dedup_tol)) {
                dup = true;
                break;
            }
        if (dup) continue;

        PeriodicOrbit orb;
        orb.least_period = n;
        orb.points = canon;
        orb.multiplier = map.deriv ? deriv_n(map, canon.front(), n) : 0.0;
        orb.mean = 0.0;
        for (double pt : canon) orb.mean += pt;
        orb.mean /= static_cast<double>(n);
        orb.residual = 0.0;
        for (int i = 0; i < n; ++i)
            orb.residual = std::max(
                orb.residual, std::abs(map.eval(canon[i]) - canon[(i + 1) % n]));
        result.orbits.push_back(orb);
    }
    return result;
}

FindResult find_periodic_f(const MapParams& p, int n) {
    const Map1D g = make_conjugate_map(p);
    // Every periodic orbit of g lies in [g_min, g_max]; the symmetric hull
    // covers both b < 1/2 and b > 1/2. For monotone maps only y0 exists.
    double M;
    if (p.a() > 4.0) {
        const auto cp = critical_points(p, MapKind::Conjugate);
        M = std::max(std::abs(eval_g(p, cp.hi)), std::abs(eval_g(p, cp.lo))) + 1.0;
    } else {
        M = p.a() + std::abs(logit_ln(p.b())) + 2.0;
    }
    const double span_scale = std::max(1.0, (2.0 * M) / 10.0);
    const long grid = static_cast<long>(
        std::max<double>(10000, 2000.0 * std::pow(2.0, std::min(n, 24)) * span_scale));
    FindResult gres = find_periodic(g, n, -M, M, grid, 1e-8);

    FindResult result;
    result.period = n;
    result.tangencies = gres.tangencies;
    for (double y : gres.solutions) result.solutions.push_back(inv_logit(y));
    std::sort(result.solutions.begin(), result.solutions.end());
    result.solution_count = gres.solution_count;

    const Map1D f = make_replicator_map(p);
    for (const auto& gorb : gres.orbits) {
        PeriodicOrbit orb;
        orb.least_period = n;
        std::vector<double> xcycle;
        xcycle.reserve(n);
        for (double y : gorb.points) xcycle.push_back(inv_logit(y));
        // h^{-1} is decreasing, so re-canonicalize in x.
        const auto it = std::min_element(xcycle.begin(), xcycle.end());
        std::rotate(xcycle.begin(), it, xcycle.end());
        orb.points = xcycle;
        orb.multiplier = gorb.multiplier;  // conjugacy-invariant
        orb.mean = 0.0;
        for (double pt : xcycle) orb.mean += pt;
        orb.mean /= static_cast<double>(n);
        orb.residual = 0.0;
        for (int i = 0; i < n; ++i)
            orb.residual = std::max(
                orb.residual, std::abs(eval_f(p, xcycle[i]) - xcycle[(i + 1) % n]));
        result.orbits.push_back(orb);
    }
    if (n == 1) {
        PeriodicOrbit zero{1, {0.0}, std::exp(p.a() * p.b()), 0.0, 0.0};
        PeriodicOrbit one{1, {1.0}, std::exp(p.a() * (1.0 - p.b())), 1.0, 0.0};
        result.orbits.insert(result.orbits.begin(), zero);
        result.orbits.push_back(one);
        result.solution_count += 2;
        result.solutions.insert(result.solutions.begin(), 0.0);
        result.solutions.push_back(1.0);
    }
    std::sort(result.orbits.begin(), result.orbits.end(),
              [](const PeriodicOrbit& a, const PeriodicOrbit& b) {
                  return a.points.front() < b.points.front();
              });
    return result;
}

MeanLawReport verify_mean_law(const std::vector<PeriodicOrbit>& orbits, double b, double tol) {
    MeanLawReport rep;
    for (const auto& orb : orbits) {
        // The endpoint fixed points 0 and 1 are outside the law.
        if (orb.least_period == 1 && (orb.points.front() == 0.0 || orb.points.front() == 1.0))
            continue;
        const double dev = std::abs(orb.mean - b);
        ++rep.orbits_checked;
        if (dev > rep.worst_deviation) {
            rep.worst_deviation = dev;
            rep.worst_period = orb.least_period;
        }
        if (dev > tol) ++rep.violations;
    }
    return rep;
}

Stability classify(const PeriodicOrbit& orbit, double neutral_band) {
    const double m = std::abs(orbit.multiplier);
    if (m < 1e-12) return Stability::Superstable;
    if (m < 1.0 - neutral_band) return Stability::Stable;
    if (m <= 1.0 + neutral_band) return Stability::Neutral;
    return Stability::Unstable;
}

namespace {

struct WindowSummary {
    int period = 0;  // 0 = aperiodic
    std::vector<double> rep;
};

WindowSummary summarize_window(const std::vector<double>& w, double tol) {
    const int n = static_cast<int>(w.size());
    for (int p = 1; p <= n / 2; ++p) {
        double worst = 0.0;
        for (int i = 0; i + p < n; ++i) worst = std::max(worst, std::abs(w[i + p] - w[i]));
        if (worst < tol) {
            std::vector<double> cyc(w.end() - p, w.end());
            std::sort(cyc.begin(), cyc.end());
            return {p, cyc};
        }
    }
    std::vector<double> all = w;
    std::sort(all.begin(), all.end());
    return {0, all};
}

bool same_attractor(const WindowSummary& a, const WindowSummary& b, double tol) {
    if (a.period != b.period) return false;
    if (a.period > 0) {
        for (int i = 0; i < a.period; ++i)
            if (std::abs(a.rep[i] - b.rep[i]) > 100.0 * tol) return false;
        return true;
    }
    // Aperiodic candidates: compare the occupied ranges.
    const double lo = std::max(a.rep.front(), b.rep.front());
    const double hi = std::min(a.rep.back(), b.rep.back());
    return hi - lo > -100.0 * tol;
}

}  // namespace

AttractorCensus attractor_census(const MapParams& p, long transient, int window,
                                 double cluster_tol) {
    const auto cp = critical_points(p, MapKind::Replicator);  // throws if a <= 4
    AttractorCensus census;
    std::vector<WindowSummary> summaries;
    for (double seed : {cp.lo, cp.hi}) {
        double x = seed;
        for (long i = 0; i < transient; ++i) x = eval_f(p, x);
        std::vector<double> w(window);
        for (int i = 0; i < window; ++i) {
            w[i] = x;
            x = eval_f(p, x);
        }
        summaries.push_back(summarize_window(w, cluster_tol));
    }
    for (const auto& s : summaries) {
        bool merged = false;
        for (std::size_t i = 0; i < census.representatives.size(); ++i) {
            WindowSummary existing{census.periods[i], census.representatives[i]};
            if (same_attractor(existing, s, cluster_tol)) {
                merged = true;
                break;
            }
        }
        if (!merged) {
            census.representatives.push_back(s.rep);
            census.periods.push_back(s.period);
        }
    }
    census.count = static_cast<int>(census.representatives.size());
    return census;
}

std::vector<BifurcationRow> bifurcation_scan(double b, double a_lo, double a_hi, int a_steps,
                                             int samples_per_a, long transient) {
    if (!(a_lo > 4.0)) throw std::invalid_argument("bifurcation_scan: need a_lo > 4");
    std::vector<BifurcationRow> rows;
    for (int i = 0; i < a_steps; ++i) {
        const double a = a_lo + (a_hi - a_lo) * i / std::max(1, a_steps - 1);
        const MapParams p(a, b);
        const auto cp = critical_points(p, MapKind::Replicator);
        for (double seed : {cp.lo, cp.hi}) {
            double x = seed;
            for (long k = 0; k < transient; ++k) x = eval_f(p, x);
            for (int k = 0; k < samples_per_a; ++k) {
                rows.push_back({a, x});
                x = eval_f(p, x);
            }
        }
    }
    return rows;
}

}  // namespace replab
