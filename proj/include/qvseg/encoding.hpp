#pragma once

#include <cstdint>
#include <vector>

#include "qvseg/layout.hpp"
#include "qvseg/measure.hpp"
#include "qvseg/sparse_state.hpp"
#include "qvseg/video.hpp"

namespace qvseg {

// Uniform basis-state ensemble over all (frame, position) pairs: exactly
// 2^(m+2n) components of probability 2^-(m+2n), each carrying its pixel value
// in the color slice and zeros elsewhere.
SparseState encode_video(const Video& video, const RegisterLayout& layout);

// Reads the color slice of every component back into a video; inverse of
// encode_video for states that still hold the encoded pixel values.
Video decode_color_register(const SparseState& state, const RegisterLayout& layout);

// Reads the seg_out bit per (frame, position) component into a binary video.
// Throws CorruptStateError when a cell is missing or two components of one
// cell disagree (either signals a pipeline bug).
Video decode_segmentation(const SparseState& state, const RegisterLayout& layout);

// The qubits a segmentation run measures: frame wires, then position wires,
// then seg_out (least-significant first).
std::vector<uint32_t> measurement_qubits(const RegisterLayout& layout);

// Rebuilds the binary video from measured shots over measurement_qubits.
// Throws IncompleteSamplingError listing unsampled cells, CorruptStateError
// when one cell was observed with both output bits.
Video decode_histogram(const Histogram& histogram, const RegisterLayout& layout);

}  // namespace qvseg
