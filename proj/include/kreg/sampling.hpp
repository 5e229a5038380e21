#ifndef KREG_SAMPLING_HPP
#define KREG_SAMPLING_HPP

#include "kreg/matrix.hpp"

#include <cstdint>
#include <random>

namespace kreg {

/// Independent generator for sample `index` of a run seeded with `seed`, so
/// results do not depend on which worker handles which sample.
std::mt19937_64 sampleRng(std::uint64_t seed, std::uint64_t index);

/// Gaussian integer with real and imaginary parts uniform in [-box, box].
Scalar randomScalar(std::mt19937_64& rng, long box);
Vec randomElement(std::mt19937_64& rng, std::size_t dim, long box);

}  // namespace kreg

#endif
