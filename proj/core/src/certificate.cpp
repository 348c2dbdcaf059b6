#include "replab/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace replab {

namespace {

// Root of g(y) = target on [lo, hi] where g is monotone there.
double inverse_on_branch(const MapParams& p, double lo, double hi, double target) {
    auto fn = [&](double y) { return eval_g(p, y) - target; };
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo * fhi > 0.0) {
        // Tolerate pure roundoff at the bracket ends.
        if (std::abs(flo) < 1e-9) return lo;
        if (std::abs(fhi) < 1e-9) return hi;
        throw RootNotBracketed("g(y)=" + fmt17(target) + " not bracketed in [" + fmt17(lo) + ", " +
                               fmt17(hi) + "]");
    }
    auto dfn = [&](double y) { return eval_g_prime(p, y); };
    double root = solve_monotone(fn, lo, hi, 1e-14, dfn);
    // Newton once more against the defining equation.
    for (int it = 0; it < 4 && std::abs(fn(root)) > 1e-13; ++it) {
        const double d = dfn(root);
        if (d == 0.0) break;
        root -= fn(root) / d;
    }
    return root;
}

}  // namespace

Landmarks landmarks(const MapParams& p) {
    const auto cp = critical_points(p, MapKind::Conjugate);  // throws for a <= 4
    Landmarks lm;
    lm.y0 = logit_ln(p.b());
    lm.y_max = cp.lo;
    lm.y_min = cp.hi;
    lm.g_min = eval_g(p, lm.y_min);
    lm.g_max = eval_g(p, lm.y_max);
    return lm;
}

A2Check check_A2(const MapParams& p) {
    const Landmarks lm = landmarks(p);
    A2Check c;
    c.margins[0] = lm.y_max - lm.g_min;
    c.margins[1] = lm.g_max - lm.y_min;
    c.margins[2] = eval_g(p, lm.g_max) - lm.y_min;
    c.pass = c.margins[0] > 0.0 && c.margins[1] > 0.0 && c.margins[2] > 0.0;
    return c;
}

BoundaryPoints boundary_points(const MapParams& p) {
    const Landmarks lm = landmarks(p);
    BoundaryPoints bp;
    // g increases on [y_min, inf): push the upper end until the target is crossed.
    double hi = lm.y_min + p.a() + 2.0;
    while (eval_g(p, hi) < lm.y_min) hi += p.a();
    bp.y2p = inverse_on_branch(p, lm.y_min, hi, lm.y_min);
    bp.y2m = inverse_on_branch(p, lm.y_min, hi, lm.y_max);
    // g decreases on [y_max, y_min].
    bp.y1p = inverse_on_branch(p, lm.y_max, lm.y_min, lm.y_max);
    bp.y1m = inverse_on_branch(p, lm.y_max, lm.y_min, bp.y2p);
    if (!(bp.y1m < bp.y1p && bp.y2m < bp.y2p))
        throw RootNotBracketed("boundary points out of order");
    return bp;
}

HyperbolicCertificate certify(const MapParams& p, int depth, int samples_per_component) {
    HyperbolicCertificate cert(p);
    cert.depth = depth;
    try {
        cert.lm = landmarks(p);
    } catch (const NoCriticalPoints& e) {
        cert.note = e.what();
        return cert;
    }
    cert.a2 = check_A2(p);
    if (!cert.a2.pass) {
        cert.note = "expansion margins (A2-style) nonpositive";
        return cert;
    }
    try {
        cert.bp = boundary_points(p);
    } catch (const RootNotBracketed& e) {
        cert.note = std::string("boundary points: ") + e.what();
        return cert;
    }
    const double tol = 1e-9;
    // Covering relations by endpoint arithmetic on the monotone branches.
    cert.cover_J1 = eval_g(p, cert.bp.y1p) <= cert.bp.y1m + tol &&
                    eval_g(p, cert.bp.y1m) >= cert.bp.y2p - tol;
    cert.cover_J2 = eval_g(p, cert.bp.y2m) <= cert.bp.y1m + tol &&
                    eval_g(p, cert.bp.y2p) >= cert.bp.y1p - tol;
    cert.disjoint_J2 = eval_g(p, cert.bp.y2p) < cert.bp.y2m;

    cert.gp_y1m = eval_g_prime(p, cert.bp.y1m);
    cert.gp_y1p = eval_g_prime(p, cert.bp.y1p);
    cert.gp_y2m = eval_g_prime(p, cert.bp.y2m);
    cert.margin_a6 =
        std::min(std::abs(cert.gp_y1m), std::abs(cert.gp_y1p)) * cert.gp_y2m - 1.0;
    cert.a6_pass = cert.margin_a6 > 0.0;

    if (!(cert.cover_J1 && cert.cover_J2 && cert.disjoint_J2 && cert.a6_pass)) {
        cert.note = "covering or derivative-product check failed";
        return cert;
    }
    try {
        const KApproximation k = approximate_K(cert, depth);
        cert.component_count = static_cast<long>(k.components.size());
        cert.expansion_margin = expansion_check(cert, k, samples_per_component);
    } catch (const std::exception& e) {
        cert.note = std::string("K approximation: ") + e.what();
        return cert;
    }
    if (BigInt(cert.component_count) != counts(depth + 1).A) {
        cert.note = "component count disagrees with admissible word count";
        return cert;
    }
    cert.pass = cert.expansion_margin > 0.0;
    cert.note = "third margin taken as g(g_max) - y_min";
    return cert;
}

KApproximation approximate_K(const HyperbolicCertificate& cert, int depth) {
    if (depth < 0 || depth > 25) throw std::invalid_argument("approximate_K: need 0 <= depth <= 25");
    const MapParams& p = cert.params;
    KApproximation k;
    k.depth = depth;
    k.components = {
        {cert.bp.y1m, cert.bp.y1p, SymbolicWord::from_string("0")},
        {cert.bp.y2m, cert.bp.y2p, SymbolicWord::from_string("1")},
    };
    for (int m = 1; m <= depth; ++m) {
        std::vector<KComponent> next;
        next.reserve(2 * k.components.size());
        for (const auto& comp : k.components) {
            for (int s = 0; s < 2; ++s) {
                if (s == 1 && comp.word.symbol(0) == 1) continue;  // "11" inadmissible
                KComponent child;
                if (s == 0) {
                    // decreasing branch on J1: order of endpoints flips
                    child.lo = inverse_on_branch(p, cert.bp.y1m, cert.bp.y1p, comp.hi);
                    child.hi = inverse_on_branch(p, cert.bp.y1m, cert.bp.y1p, comp.lo);
                } else {
                    child.lo = inverse_on_branch(p, cert.bp.y2m, cert.bp.y2p, comp.lo);
                    child.hi = inverse_on_branch(p, cert.bp.y2m, cert.bp.y2p, comp.hi);
                }
                if (!(child.lo <= child.hi))
                    throw std::runtime_error("approximate_K: empty branch pullback");
                child.word.length = comp.word.length + 1;
                child.word.bits = (comp.word.bits << 1) | static_cast<std::uint64_t>(s);
                child.word.mode = WordMode::Linear;
                next.push_back(child);
            }
        }
        k.components = std::move(next);
    }
    std::sort(k.components.begin(), k.components.end(),
              [](const KComponent& a, const KComponent& b) { return a.lo < b.lo; });
    return k;
}

double expansion_check(const HyperbolicCertificate& cert, const KApproximation& kapprox,
                       int samples_per_component) {
    const MapParams& p = cert.params;
    double min_prod = std::numeric_limits<double>::infinity();
    for (const auto& comp : kapprox.components) {
        for (int i = 0; i < samples_per_component; ++i) {
            const double y =
                comp.lo + (comp.hi - comp.lo) * (i + 0.5) / samples_per_component;
            const double prod = std::abs(eval_g_prime(p, y) * eval_g_prime(p, eval_g(p, y)));
            min_prod = std::min(min_prod, prod);
        }
    }
    return min_prod - 1.0;
}

SymbolicWord itinerary(const HyperbolicCertificate& cert, double y, int m) {
    const double tol = 1e-9;
    SymbolicWord w;
    w.length = m;
    w.mode = WordMode::Linear;
    for (int j = 0; j < m; ++j) {
        if (y >= cert.bp.y1m - tol && y <= cert.bp.y1p + tol) {
            // symbol 0
        } else if (y >= cert.bp.y2m - tol && y <= cert.bp.y2p + tol) {
            w.bits |= (1ull << j);
        } else {
            throw EscapedK("itinerary: orbit left J1 u J2 at step " + std::to_string(j) +
                           " (y=" + fmt17(y) + ")");
        }
        y = eval_g(cert.params, y);
    }
    return w;
}

namespace {

// Cylinder of a linear word by pulling the last branch interval back along
// the word, right to left.
KComponent cylinder_of_word(const HyperbolicCertificate& cert, const SymbolicWord& w) {
    const MapParams& p = cert.params;
    const int L = w.length;
    KComponent comp;
    if (w.symbol(L - 1) == 0) {
        comp = {cert.bp.y1m, cert.bp.y1p, SymbolicWord{0, 1, WordMode::Linear}};
    } else {
        comp = {cert.bp.y2m, cert.bp.y2p, SymbolicWord{1, 1, WordMode::Linear}};
    }
    for (int j = L - 2; j >= 0; --j) {
        KComponent parent;
        if (w.symbol(j) == 0) {
            parent.lo = inverse_on_branch(p, cert.bp.y1m, cert.bp.y1p, comp.hi);
            parent.hi = inverse_on_branch(p, cert.bp.y1m, cert.bp.y1p, comp.lo);
        } else {
            parent.lo = inverse_on_branch(p, cert.bp.y2m, cert.bp.y2p, comp.lo);
            parent.hi = inverse_on_branch(p, cert.bp.y2m, cert.bp.y2p, comp.hi);
        }
        comp = parent;
    }
    comp.word = w;
    return comp;
}

}  // namespace

double point_from_word(const HyperbolicCertificate& cert, const SymbolicWord& word) {
    if (!is_admissible(word)) throw std::invalid_argument("point_from_word: inadmissible word");
    if (word.length < 1) throw std::invalid_argument("point_from_word: empty word");
    if (word.mode == WordMode::Linear) {
        const KComponent c = cylinder_of_word(cert, word);
        return 0.5 * (c.lo + c.hi);
    }
    // Periodic point: deepen the cylinder by repetition, then Newton on g^n - id.
    const int n = word.length;
    SymbolicWord extended;
    extended.mode = WordMode::Linear;
    while (extended.length + n <= std::max(2 * n, 24) && extended.length + n <= 60) {
        extended.bits |= word.bits << extended.length;
        extended.length += n;
    }
    const KComponent c = cylinder_of_word(cert, extended);
    double y = 0.5 * (c.lo + c.hi);
    const MapParams& p = cert.params;
    auto F = [&](double v) {
        for (int i = 0; i < n; ++i) v = eval_g(p, v);
        return v;
    };
    for (int it = 0; it < 60; ++it) {
        double prod = 1.0, v = y;
        for (int i = 0; i < n; ++i) {
            prod *= eval_g_prime(p, v);
            v = eval_g(p, v);
        }
        const double resid = v - y;
        if (std::abs(resid) <= 1e-13) break;
        const double d = prod - 1.0;
        if (d == 0.0) break;
        y -= resid / d;
    }
    if (std::abs(F(y) - y) > 1e-12)
        throw std::runtime_error("point_from_word: Newton residual above 1e-12");
    return y;
}

long count_periodic_in_J(const HyperbolicCertificate& cert, int n) {
    const Map1D g = make_conjugate_map(cert.params);
    const long grid = std::max<long>(10000, 2000L * (1L << std::min(n, 24)));
    const FindResult r1 = find_periodic(g, n, cert.bp.y1m, cert.bp.y1p, grid, 1e-8);
    const FindResult r2 = find_periodic(g, n, cert.bp.y2m, cert.bp.y2p, grid, 1e-8);
    return r1.solution_count + r2.solution_count;
}

FindA0Result find_a0(double b, double a_lo, double a_hi, double factor, int depth,
                     int samples_per_component) {
    FindA0Result res;
    for (double a = a_lo; a <= a_hi; a *= factor) {
        const bool ok = certify(MapParams(a, b), depth, samples_per_component).pass;
        res.table.emplace_back(a, ok);
        if (ok && !res.found) {
            res.found = true;
            res.a0 = a;
        }
    }
    if (res.found) {
        res.passes_2a = certify(MapParams(2.0 * res.a0, b), depth, samples_per_component).pass;
        res.passes_4a = certify(MapParams(4.0 * res.a0, b), depth, samples_per_component).pass;
    }
    return res;
}

nlohmann::json to_json(const HyperbolicCertificate& c) {
    nlohmann::json j;
    j["a"] = c.params.a();
    j["b"] = c.params.b();
    j["pass"] = c.pass;
    j["landmarks"] = {{"y0", c.lm.y0},     {"y_max", c.lm.y_max}, {"y_min", c.lm.y_min},
                      {"g_min", c.lm.g_min}, {"g_max", c.lm.g_max}};
    j["J1"] = {c.bp.y1m, c.bp.y1p};
    j["J2"] = {c.bp.y2m, c.bp.y2p};
    j["margins_a2"] = c.a2.margins;
    j["a2_pass"] = c.a2.pass;
    j["covering"] = {{"gJ1_covers_J1uJ2", c.cover_J1},
                     {"gJ2_covers_J1", c.cover_J2},
                     {"gJ2_disjoint_J2", c.disjoint_J2}};
    j["derivatives"] = {{"gp_y1m", c.gp_y1m}, {"gp_y1p", c.gp_y1p}, {"gp_y2m", c.gp_y2m}};
    j["margin_a6"] = c.margin_a6;
    j["a6_pass"] = c.a6_pass;
    j["depth"] = c.depth;
    j["component_count"] = c.component_count;
    j["expansion_margin"] = c.expansion_margin;
    j["note"] = c.note;
    return j;
}

nlohmann::json to_json(const KApproximation& k) {
    nlohmann::json j;
    j["depth"] = k.depth;
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : k.components)
        comps.push_back({{"label", c.word.to_string()}, {"lo", c.lo}, {"hi", c.hi}});
    j["components"] = comps;
    return j;
}

}  // namespace replab
