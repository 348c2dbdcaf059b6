#include "replab/map1d.hpp"

#include <cmath>

namespace replab {

Map1D make_replicator_map(const MapParams& p) {
    Map1D m;
    m.name = "f(a=" + fmt17(p.a()) + ",b=" + fmt17(p.b()) + ")";
    m.eval = [p](double x) { return eval_f(p, x); };
    m.deriv = [p](double x) { return eval_f_prime(p, x); };
    m.lo = 0.0;
    m.hi = 1.0;
    return m;
}

Map1D make_conjugate_map(const MapParams& p) {
    Map1D m;
    m.name = "g(a=" + fmt17(p.a()) + ",b=" + fmt17(p.b()) + ")";
    m.eval = [p](double y) { return eval_g(p, y); };
    m.deriv = [p](double y) { return eval_g_prime(p, y); };
    return m;
}

namespace {
double mod1(double x) {
    double r = x - std::floor(x);
    if (r >= 1.0) r -= 1.0;
    return r;
}
}  // namespace

Map1D make_rotation(double alpha) {
    Map1D m;
    m.name = "rotation(" + fmt17(alpha) + ")";
    m.eval = [alpha](double x) { return mod1(x + alpha); };
    m.deriv = [](double) { return 1.0; };
    m.lo = 0.0;
    m.hi = 1.0;
    m.circle = true;
    return m;
}

Map1D make_doubling() {
    Map1D m;
    m.name = "doubling";
    m.eval = [](double x) { return mod1(2.0 * x); };
    m.deriv = [](double) { return 2.0; };
    m.lo = 0.0;
    m.hi = 1.0;
    m.circle = true;
    return m;
}

Map1D make_generator_map(GeneratorH gen, double a, double b) {
    Map1D m;
    m.name = "f_h[" + gen.name + "](a=" + fmt17(a) + ",b=" + fmt17(b) + ")";
    m.eval = [gen, a, b](double x) { return eval_fh(gen, a, b, x); };
    m.lo = gen.lo;
    m.hi = gen.hi;
    return m;
}

double doubling_periodic_point(int n, long k) {
    const long den = (1L << n) - 1;
    return static_cast<double>(k % den) / static_cast<double>(den);
}

}  // namespace replab
