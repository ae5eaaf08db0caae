#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qvseg {

using Frame = std::vector<std::vector<uint16_t>>;  // [y][x]

// Classical grayscale video: 2^m_exp frames of 2^n_exp x 2^n_exp pixels with
// q-bit depth. The frames vector is stored as loaded, so a malformed input
// (wrong frame count, ragged rows, out-of-range pixels) can be represented
// and reported by validate_video instead of aborting at construction.
struct Video {
    int m_exp = 0;
    int n_exp = 0;
    int q = 0;
    std::vector<Frame> frames;  // [j][y][x]

    static Video filled(int m_exp, int n_exp, int q, uint16_t value = 0);

    size_t frame_count() const { return size_t{1} << m_exp; }
    size_t side() const { return size_t{1} << n_exp; }

    uint16_t at(size_t j, size_t y, size_t x) const { return frames[j][y][x]; }
    uint16_t& at(size_t j, size_t y, size_t x) { return frames[j][y][x]; }

    friend bool operator==(const Video&, const Video&) = default;
};

// Returns every violation found (empty means valid). Never throws.
std::vector<std::string> validate_video(const Video& video);

// Throws std::invalid_argument carrying the joined violation list.
void require_valid(const Video& video);

}  // namespace qvseg
