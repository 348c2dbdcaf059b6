#pragma once

#include <functional>
#include <limits>
#include <string>

#include "replab/generator.hpp"
#include "replab/maps.hpp"
#include "replab/params.hpp"

namespace replab {

// A one-dimensional map handle shared by the orbit, periodic and lab modules.
// deriv may be empty for maps without a usable derivative.
struct Map1D {
    std::string name;
    std::function<double(double)> eval;
    std::function<double(double)> deriv;
    double lo = -std::numeric_limits<double>::infinity();
    double hi = std::numeric_limits<double>::infinity();
    bool circle = false;  // mod-1 arithmetic on [0,1)
};

Map1D make_replicator_map(const MapParams& p);          // f_{a,b} on [0,1]
Map1D make_conjugate_map(const MapParams& p);           // g_{a,b} on the line
Map1D make_rotation(double alpha);                      // x -> x + alpha (mod 1)
Map1D make_doubling();                                  // x -> 2x (mod 1)
Map1D make_generator_map(GeneratorH gen, double a, double b);  // f_h on I

// Periodic point k/(2^n - 1) of the doubling map, in closed form.
double doubling_periodic_point(int n, long k);

}  // namespace replab
