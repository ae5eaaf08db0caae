#pragma once

#include <cstdint>
#include <random>

namespace qvseg {

// Uniform double in [0, 1) built from the top 53 bits of one mt19937_64
// draw. std::uniform_real_distribution is implementation-defined; this keeps
// sampled artifacts byte-identical across standard libraries.
inline double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qvseg
