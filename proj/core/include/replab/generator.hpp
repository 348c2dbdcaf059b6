#pragma once

#include <functional>
#include <limits>
#include <string>

#include "replab/params.hpp"
#include "replab/util.hpp"

namespace replab {

// A strictly monotone generator h on an open interval I, driving the family
// f_h(x) = h^{-1}(h(x) + a(x-b)). The inverse may be closed-form or left
// empty, in which case it is computed by bisection on (lo,hi) plus a Newton
// polish (tolerance 1e-13).
struct GeneratorH {
    std::string name;
    std::function<double(double)> forward;
    std::function<double(double)> inverse;     // optional
    std::function<double(double)> derivative;  // optional (used by Newton)
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool increasing = true;
    // Range of h over I; shifted values outside are a reported range error.
    double range_lo = -std::numeric_limits<double>::infinity();
    double range_hi = std::numeric_limits<double>::infinity();
};

// Inverts h at y (closed form when available). Throws std::range_error when y
// is outside the declared range.
double generator_invert(const GeneratorH& gen, double y);

// f_h(x) = h^{-1}(h(x) + a(x-b)); range violations are reported, not clamped.
double eval_fh(const GeneratorH& gen, double a, double b, double x);

GeneratorH logit_generator();            // h(x) = ln((1-x)/x) on (0,1)
GeneratorH neglog_generator();           // h(x) = -ln x on (0,inf); f_h = e^{ab} x e^{-ax}
GeneratorH tan_generator();              // h(x) = tan x on (-pi/2, pi/2)

}  // namespace replab
