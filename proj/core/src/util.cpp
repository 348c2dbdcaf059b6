#include "replab/util.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <thread>

namespace replab {

double solve_monotone(const std::function<double(double)>& fn, double lo, double hi,
                      double tol, const std::function<double(double)>& dfn) {
    double flo = fn(lo);
    double fhi = fn(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0)
        throw std::runtime_error("solve_monotone: root not bracketed in [" + fmt17(lo) + ", " +
                                 fmt17(hi) + "]");
    // Bisect until the bracket is small, then Newton if a derivative is given.
    for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = fn(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
    }
    double x = 0.5 * (lo + hi);
    if (dfn) {
        for (int it = 0; it < 8; ++it) {
            const double fx = fn(x);
            const double dx = dfn(x);
            if (dx == 0.0) break;
            const double step = fx / dx;
            const double xn = x - step;
            if (xn < lo || xn > hi) break;
            x = xn;
            if (std::abs(step) < tol * (1.0 + std::abs(x))) break;
        }
    }
    return x;
}

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw std::invalid_argument("lsq_slope: need matched n >= 2");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (den == 0.0) return 0.0;
    return (n * sxy - sx * sy) / den;
}

double parse_real_or_fraction(const std::string& s) {
    const auto slash = s.find('/');
    if (slash != std::string::npos) {
        const double num = std::stod(s.substr(0, slash));
        const double den = std::stod(s.substr(slash + 1));
        if (den == 0.0) throw std::invalid_argument("fraction with zero denominator: " + s);
        return num / den;
    }
    return std::stod(s);
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(const std::string& s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(s)));
    return buf;
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {
std::atomic<unsigned> g_jobs{1};
}

void set_jobs(unsigned jobs) { g_jobs = std::max(1u, jobs); }
unsigned get_jobs() { return g_jobs.load(); }

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
    const unsigned jobs = std::min<std::size_t>(get_jobs(), n ? n : 1);
    if (jobs <= 1 || n < 1024) {
        if (n) chunk_fn(0, n);
        return;
    }
    std::vector<std::thread> pool;
    const std::size_t chunk = (n + jobs - 1) / jobs;
    for (unsigned j = 0; j < jobs; ++j) {
        const std::size_t lo = j * chunk;
        const std::size_t hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&chunk_fn, lo, hi] { chunk_fn(lo, hi); });
    }
    for (auto& t : pool) t.join();
}

}  // namespace replab
