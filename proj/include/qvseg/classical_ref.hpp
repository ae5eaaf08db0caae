#pragma once

#include <cstdint>

#include "qvseg/video.hpp"

namespace qvseg {

// Neighbor-frame indexing at the video boundary. cyclic matches the quantum
// pipeline's modular frame shift; clamp reuses the edge frame itself (its
// self-difference is zero, so edge frames always decode to background).
enum class BoundaryMode { cyclic, clamp };

// Per-pixel |a - b|. Throws std::invalid_argument on dimension mismatch.
Frame abs_diff_frames(const Frame& a, const Frame& b);

// Per-pixel 1 iff value >= threshold.
Frame threshold_frame(const Frame& d, int threshold);

// Frame j of the result marks pixels whose absolute difference against both
// neighbor frames reaches the threshold. This per-pixel loop is the bit-exact
// oracle the quantum pipeline is checked against.
Video classical_three_frame_diff(const Video& video, int threshold,
                                 BoundaryMode boundary = BoundaryMode::cyclic);

}  // namespace qvseg
