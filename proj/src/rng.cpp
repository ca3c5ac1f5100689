#include "exnet/rng.hpp"

#include "exnet/mathfn.hpp"

namespace exnet {

double CounterRng::normal(std::uint64_t counter) const {
    // Map to (0,1) strictly: shift the 53-bit uniform off the endpoints.
    double u = (static_cast<double>(bits(counter) >> 11) + 0.5) * 0x1.0p-53;
    return norm_ppf(u);
}

}  // namespace exnet
