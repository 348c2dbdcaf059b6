#include "replab/generator.hpp"

#include <cmath>

namespace replab {

double generator_invert(const GeneratorH& gen, double y) {
    if (!(y >= gen.range_lo && y <= gen.range_hi))
        throw std::range_error(gen.name + ": value " + fmt17(y) + " outside range of h");
    if (gen.inverse) return gen.inverse(y);

    // Numeric inversion: expand a bracket inside I, then bisect/Newton.
    // The open endpoints of I are approached but never evaluated exactly.
    const double sign = gen.increasing ? 1.0 : -1.0;
    auto resid = [&](double x) { return sign * (gen.forward(x) - y); };

    double lo = std::isfinite(gen.lo) ? gen.lo + 1e-15 * (1.0 + std::abs(gen.lo)) : -1.0;
    double hi = std::isfinite(gen.hi) ? gen.hi - 1e-15 * (1.0 + std::abs(gen.hi)) : 1.0;
    if (!std::isfinite(gen.lo)) {
        while (resid(lo) > 0.0) lo = lo * 2.0 - 1.0;
    }
    if (!std::isfinite(gen.hi)) {
        while (resid(hi) < 0.0) hi = hi * 2.0 + 1.0;
    }
    std::function<double(double)> dfn;
    if (gen.derivative) dfn = [&](double x) { return sign * gen.derivative(x); };
    return solve_monotone(resid, lo, hi, 1e-13, dfn);
}

double eval_fh(const GeneratorH& gen, double a, double b, double x) {
    if (!(x > gen.lo && x < gen.hi))
        throw std::domain_error(gen.name + ": x=" + fmt17(x) + " outside I");
    const double shifted = gen.forward(x) + a * (x - b);
    return generator_invert(gen, shifted);
}

GeneratorH logit_generator() {
    GeneratorH g;
    g.name = "logit";
    g.forward = [](double x) { return logit_ln(x); };
    g.inverse = [](double y) { return inv_logit(y); };
    g.derivative = [](double x) { return -1.0 / (x * (1.0 - x)); };
    g.lo = 0.0;
    g.hi = 1.0;
    g.increasing = false;
    return g;
}

GeneratorH neglog_generator() {
    GeneratorH g;
    g.name = "neglog";
    g.forward = [](double x) { return -std::log(x); };
    g.inverse = [](double y) { return std::exp(-y); };
    g.derivative = [](double x) { return -1.0 / x; };
    g.lo = 0.0;
    g.increasing = false;
    return g;
}

GeneratorH tan_generator() {
    GeneratorH g;
    g.name = "tan";
    g.forward = [](double x) { return std::tan(x); };
    g.inverse = [](double y) { return std::atan(y); };
    g.derivative = [](double x) { const double c = std::cos(x); return 1.0 / (c * c); };
    g.lo = -1.5707963267948966;
    g.hi = 1.5707963267948966;
    g.increasing = true;
    return g;
}

}  // namespace replab
