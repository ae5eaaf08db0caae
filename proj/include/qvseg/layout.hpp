#pragma once

#include <cstdint>

namespace qvseg {

struct WireRange {
    uint32_t start = 0;
    uint32_t count = 0;

    uint32_t wire(uint32_t k) const { return start + k; }
    uint32_t end() const { return start + count; }

    friend bool operator==(const WireRange&, const WireRange&) = default;
};

// Wire 0 is the least-significant bit everywhere. Slices tile [0, width) in
// the order listed: color holds the current frame's pixel value, pos packs
// |Y>|X> with Y in the high n_exp bits, frame holds the frame index, the two
// diff registers hold neighbor-frame data and then absolute differences, anc
// is shared scratch, cmp_out is the comparator result pair y1y0, seg_out the
// final mask bit.
struct RegisterLayout {
    int m_exp = 0;
    int n_exp = 0;
    int q = 0;

    WireRange color;
    WireRange pos;
    WireRange frame;
    WireRange diff_prev;
    WireRange diff_next;
    WireRange anc;
    WireRange cmp_out;
    WireRange seg_out;

    uint32_t width() const { return seg_out.end(); }
};

// width = 3q + 2n + m + 6. Throws std::invalid_argument for m_exp/n_exp < 1
// and UnsupportedError for q outside [1, 8].
RegisterLayout layout_for(int m_exp, int n_exp, int q);

// Width of the variant that shares wires for the compare pair and AND output
// instead of allocating them: 3q + 2n + m + 3.
int compact_qubit_count(int m_exp, int n_exp, int q);

inline uint64_t extract_bits(uint64_t key, WireRange r) {
    uint64_t mask = r.count >= 64 ? ~uint64_t{0} : (uint64_t{1} << r.count) - 1;
    return (key >> r.start) & mask;
}

inline uint64_t deposit_bits(uint64_t key, WireRange r, uint64_t value) {
    uint64_t mask = r.count >= 64 ? ~uint64_t{0} : (uint64_t{1} << r.count) - 1;
    return (key & ~(mask << r.start)) | ((value & mask) << r.start);
}

}  // namespace qvseg
