#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace replab {

// 1/(1+e^y), evaluated without overflow for any finite y.
inline double inv_logit(double y) {
    if (y > 0.0) {
        const double z = std::exp(-y);
        return z / (1.0 + z);
    }
    return 1.0 / (1.0 + std::exp(y));
}

// ln((1-x)/x) on (0,1), keeps relative accuracy near both endpoints.
inline double logit_ln(double x) { return std::log1p(-x) - std::log(x); }

struct Bracket {
    double lo;
    double hi;
};

// Monotone root finding: bisection to locate, Newton to polish.
// fn must have opposite signs at the bracket endpoints.
double solve_monotone(const std::function<double(double)>& fn, double lo, double hi,
                      double tol = 1e-13, const std::function<double(double)>& dfn = nullptr);

// Least-squares slope of y against x.
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y);

// Parses "0.25" or "1/3" (exact double division of the two integers).
double parse_real_or_fraction(const std::string& s);

// FNV-1a, used to stamp output files with a hash of the run config.
std::uint64_t fnv1a(const std::string& s);
std::string hash_hex(const std::string& s);

// Prints a double with 17 significant digits so it round-trips exactly.
std::string fmt17(double v);

// Deterministic chunked parallel map over [0, n): chunks are assigned to
// workers in order and results must be written to pre-sized storage by index.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn);
void set_jobs(unsigned jobs);
unsigned get_jobs();

}  // namespace replab
