#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "replab/map1d.hpp"
#include "replab/periodic.hpp"
#include "replab/symbolic.hpp"

namespace replab {

struct EscapedK : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RootNotBracketed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Landmarks {
    double y0, y_max, y_min, g_min, g_max;
};

// Throws NoCriticalPoints when a <= 4. Verifies y_min + y_max = 0.
Landmarks landmarks(const MapParams& p);

struct A2Check {
    // (i) y_max - g_min, (ii) g_max - y_min, (iii) g(g_max) - y_min.
    std::array<double, 3> margins;
    bool pass;
};
A2Check check_A2(const MapParams& p);

struct BoundaryPoints {
    double y1m, y1p;  // J1 = [y1m, y1p] in (y_max, y_min)
    double y2m, y2p;  // J2 = [y2m, y2p] in (y_min, inf)
};
// Monotone bisection + Newton, each defining residual <= 1e-12.
// Throws RootNotBracketed if any bracket fails.
BoundaryPoints boundary_points(const MapParams& p);

struct HyperbolicCertificate {
    MapParams params;
    Landmarks lm{};
    BoundaryPoints bp{};
    A2Check a2{};
    double margin_a6 = 0.0;
    double gp_y1m = 0.0, gp_y1p = 0.0, gp_y2m = 0.0;
    bool a6_pass = false;
    bool cover_J1 = false;       // g(J1) contains J1 u J2
    bool cover_J2 = false;       // g(J2) contains J1
    bool disjoint_J2 = false;    // g(J2) disjoint from J2
    int depth = 0;
    long component_count = 0;
    double expansion_margin = 0.0;  // min |(g^2)'| - 1 over the K approximation
    bool pass = false;
    std::string note;  // diagnostic on failure, assumptions on success

    explicit HyperbolicCertificate(const MapParams& p) : params(p) {}
};

struct KComponent {
    double lo, hi;
    SymbolicWord word;  // linear itinerary word, length depth+1
};

struct KApproximation {
    int depth = 0;
    std::vector<KComponent> components;  // sorted by position
};

// Branch-wise pullbacks of J1 u J2, depth m <= 25; component count is A_{m+1}
// once the covering relations hold.
KApproximation approximate_K(const HyperbolicCertificate& cert, int depth);

// min over dense per-component samples of |g'(y) g'(g(y))|, minus 1.
double expansion_check(const HyperbolicCertificate& cert, const KApproximation& kapprox,
                       int samples_per_component = 1000);

// Full certificate: landmarks, (A.2) margins (the third one taken as
// g(g_max) > y_min), boundary points, covering flags, the (A.6) derivative
// product, and the sampled expansion margin at the given depth.
HyperbolicCertificate certify(const MapParams& p, int depth = 10,
                              int samples_per_component = 1000);

// Symbol sequence of y under g relative to J1/J2. Throws EscapedK when the
// orbit leaves J1 u J2 within m steps.
SymbolicWord itinerary(const HyperbolicCertificate& cert, double y, int m);

// Midpoint of the cylinder of a linear word; for cyclic words the Newton-
// polished periodic point of g with residual <= 1e-12.
double point_from_word(const HyperbolicCertificate& cert, const SymbolicWord& word);

// Distinct solutions of g^n(y) = y found inside J1 u J2.
long count_periodic_in_J(const HyperbolicCertificate& cert, int n);

struct FindA0Result {
    bool found = false;
    double a0 = 0.0;
    std::vector<std::pair<double, bool>> table;  // (a, certificate pass)
    bool passes_2a = false, passes_4a = false;   // spot checks, no monotonicity claim
};

FindA0Result find_a0(double b, double a_lo = 4.1, double a_hi = 200.0, double factor = 1.05,
                     int depth = 6, int samples_per_component = 200);

nlohmann::json to_json(const HyperbolicCertificate& cert);
nlohmann::json to_json(const KApproximation& k);

}  // namespace replab
