#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qvseg/circuit.hpp"
#include "qvseg/layout.hpp"

namespace qvseg {

// Comparator: writes the three-way order of registers a and b into y.
// y1y0 = 10 when a > b, 01 when a < b, 00 when a = b (11 is never produced).
// a and b are preserved; anc wires end 0. Requires anc and y zero on entry.
//
// High-to-low scan. An "undecided" flag starts at 1 on anc[0]; at each bit a
// CX folds a_k^b_k into b_k, a CSWAP conditioned on that difference moves the
// flag into anc[1] (so it fires at the first differing bit only), a CCX sets
// y1 when that bit has a_k = 1, and a RESET reclaims anc[1]. y0 is inferred
// at the end from (decided, not greater). Cost 11q + 7.
Circuit build_comparator(uint32_t width, WireRange a, WireRange b, WireRange anc, WireRange y);

// Ripple-borrow subtractor: b <- a - b (mod 2^q), a preserved, anc ends 0.
// Intended for a >= b; smaller a wraps (the absolute subtractor guards this).
// Borrows live on anc[0]/anc[1] alternately; each consumed borrow is RESET.
Circuit build_subtractor(uint32_t width, WireRange a, WireRange b, WireRange anc);

// Absolute subtractor: b <- |a - b|, a <- max(a, b); anc and y end 0.
// Comparator, then q CSWAPs conditioned on the "less" bit, then subtractor,
// then resets of y.
Circuit build_abs_subtractor(uint32_t width, WireRange a, WireRange b, WireRange anc, WireRange y);

// dst <- src for dst = 0, with exactly q CX gates.
Circuit build_copy(uint32_t width, WireRange src, WireRange dst);

// Modular increment (+1) or decrement (-1) of the frame register.
Circuit build_cycle_shift(uint32_t width, WireRange frame, int direction);

// Comparator against a classical constant: same y semantics as
// build_comparator with b = threshold. The threshold is baked into control
// polarities, so cost (9q + 7) and census do not depend on its value.
Circuit build_threshold_compare(uint32_t width, WireRange c, uint32_t threshold, WireRange anc,
                                WireRange y);

// Binarization: c0 <- (c >= threshold); higher c wires keep the difference
// bits (deterministic garbage, never read downstream); anc and y end 0.
Circuit build_binarization(uint32_t width, WireRange c, uint32_t threshold, WireRange anc, WireRange y);

// out <- b0 AND b1 for out = 0; a single CCX.
Circuit build_and(uint32_t width, uint32_t b0, uint32_t b1, uint32_t out);

struct BlockSpec {
    std::string name;
    std::vector<std::pair<std::string, WireRange>> inputs;
    std::vector<std::pair<std::string, WireRange>> scratch;
    std::string output_contract;
};

std::vector<std::string> block_names();

// BlockSpec plus a standalone fragment at the given register sizes (q for data
// registers, m for the cycle-shift block). Throws std::invalid_argument for
// unknown names.
std::pair<BlockSpec, Circuit> describe_block(const std::string& name, int q, int m);

}  // namespace qvseg
