#include "ljb/rng.hpp"

#include <cmath>

namespace ljb {

double CounterRng::gaussian() {
    // Box-Muller; u1 is kept away from 0 so the log is finite.
    double u1 = uniform();
    double u2 = uniform();
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(6.283185307179586476925286766559 * u2);
}

} // namespace ljb
