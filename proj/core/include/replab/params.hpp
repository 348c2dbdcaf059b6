#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace replab {

enum class MapKind { Replicator, Conjugate };  // f_{a,b} on [0,1] or g_{a,b} on the line

struct NoCriticalPoints : std::domain_error {
    using std::domain_error::domain_error;
};

struct SingularAtCritical : std::domain_error {
    using std::domain_error::domain_error;
};

// The pair (a,b). The map is monotone (no interior critical points) iff a <= 4.
class MapParams {
public:
    MapParams(double a, double b) : a_(a), b_(b) {
        if (!(a > 0.0)) throw std::invalid_argument("MapParams: need a > 0, got a=" + std::to_string(a));
        if (!(b > 0.0 && b < 1.0))
            throw std::invalid_argument("MapParams: need 0 < b < 1, got b=" + std::to_string(b));
    }

    double a() const { return a_; }
    double b() const { return b_; }
    bool monotone() const { return a_ <= 4.0; }

    // a* = 2/(b(1-b)); the interior fixed point loses stability here.
    double stability_threshold() const { return 2.0 / (b_ * (1.0 - b_)); }

private:
    double a_;
    double b_;
};

}  // namespace replab
