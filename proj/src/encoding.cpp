#include "qvseg/encoding.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qvseg/errors.hpp"

namespace qvseg {

static void check_layout_match(const Video& video, const RegisterLayout& layout) {
    if (video.m_exp != layout.m_exp || video.n_exp != layout.n_exp || video.q != layout.q) {
        throw std::invalid_argument("video parameters (m_exp=" + std::to_string(video.m_exp) +
                                    ", n_exp=" + std::to_string(video.n_exp) + ", q=" +
                                    std::to_string(video.q) + ") do not match layout");
    }
}

SparseState encode_video(const Video& video, const RegisterLayout& layout) {
    require_valid(video);
    check_layout_match(video, layout);

    const int n = video.n_exp;
    const double prob = std::ldexp(1.0, -(video.m_exp + 2 * n));

    SparseState state;
    state.width = layout.width();
    state.components.reserve(video.frame_count() << (2 * n));
    for (uint64_t j = 0; j < video.frame_count(); ++j) {
        for (uint64_t y = 0; y < video.side(); ++y) {
            for (uint64_t x = 0; x < video.side(); ++x) {
                const uint64_t pos_value = (y << n) | x;
                uint64_t key = 0;
                key = deposit_bits(key, layout.color, video.at(j, y, x));
                key = deposit_bits(key, layout.pos, pos_value);
                key = deposit_bits(key, layout.frame, j);
                state.components.emplace_back(key, prob);
            }
        }
    }
    state.sort_and_merge();
    state.validate();
    return state;
}

Video decode_color_register(const SparseState& state, const RegisterLayout& layout) {
    if (state.width != layout.width()) {
        throw std::invalid_argument("state width does not match layout");
    }
    const int n = layout.n_exp;
    Video out = Video::filled(layout.m_exp, layout.n_exp, layout.q);
    std::vector<bool> seen(size_t{1} << (layout.m_exp + 2 * n), false);
    for (const auto& [key, p] : state.components) {
        const uint64_t j = extract_bits(key, layout.frame);
        const uint64_t pos_value = extract_bits(key, layout.pos);
        const uint64_t y = pos_value >> n;
        const uint64_t x = pos_value & ((uint64_t{1} << n) - 1);
        const uint16_t value = static_cast<uint16_t>(extract_bits(key, layout.color));
        const size_t cell = (j << (2 * n)) | pos_value;
        if (seen[cell] && out.at(j, y, x) != value) {
            throw CorruptStateError("cell (" + std::to_string(j) + "," + std::to_string(y) + "," +
                                    std::to_string(x) + ") holds conflicting color values");
        }
        seen[cell] = true;
        out.at(j, y, x) = value;
    }
    for (size_t cell = 0; cell < seen.size(); ++cell) {
        if (!seen[cell]) {
            throw CorruptStateError("cell index " + std::to_string(cell) + " missing from state");
        }
    }
    return out;
}

Video decode_segmentation(const SparseState& state, const RegisterLayout& layout) {
    if (state.width != layout.width()) {
        throw std::invalid_argument("state width does not match layout");
    }
    const int n = layout.n_exp;
    Video out = Video::filled(layout.m_exp, layout.n_exp, 1);
    // 0 = unseen, 1 = seen bit 0, 2 = seen bit 1.
    std::vector<uint8_t> seen(size_t{1} << (layout.m_exp + 2 * n), 0);
    for (const auto& [key, p] : state.components) {
        const uint64_t j = extract_bits(key, layout.frame);
        const uint64_t pos_value = extract_bits(key, layout.pos);
        const uint64_t y = pos_value >> n;
        const uint64_t x = pos_value & ((uint64_t{1} << n) - 1);
        const uint8_t bit = static_cast<uint8_t>(extract_bits(key, layout.seg_out));
        const size_t cell = (j << (2 * n)) | pos_value;
        if (seen[cell] != 0 && seen[cell] != bit + 1) {
            throw CorruptStateError("cell (" + std::to_string(j) + "," + std::to_string(y) + "," +
                                    std::to_string(x) + ") observed with both output bits");
        }
        seen[cell] = bit + 1;
        out.at(j, y, x) = bit;
    }
    for (size_t cell = 0; cell < seen.size(); ++cell) {
        if (seen[cell] == 0) {
            throw CorruptStateError("cell index " + std::to_string(cell) + " missing from state");
        }
    }
    return out;
}

std::vector<uint32_t> measurement_qubits(const RegisterLayout& layout) {
    std::vector<uint32_t> qubits;
    qubits.reserve(layout.frame.count + layout.pos.count + 1);
    for (uint32_t k = 0; k < layout.frame.count; ++k) {
        qubits.push_back(layout.frame.wire(k));
    }
    for (uint32_t k = 0; k < layout.pos.count; ++k) {
        qubits.push_back(layout.pos.wire(k));
    }
    qubits.push_back(layout.seg_out.wire(0));
    return qubits;
}

Video decode_histogram(const Histogram& histogram, const RegisterLayout& layout) {
    const int m = layout.m_exp;
    const int n = layout.n_exp;
    if (histogram.bit_count != static_cast<uint32_t>(m + 2 * n + 1)) {
        throw std::invalid_argument("histogram bit count does not match layout measurement");
    }
    Video out = Video::filled(m, n, 1);
    std::vector<uint8_t> seen(size_t{1} << (m + 2 * n), 0);
    for (const auto& [key, count] : histogram.counts) {
        if (count == 0) {
            continue;
        }
        const uint64_t j = key & ((uint64_t{1} << m) - 1);
        const uint64_t pos_value = (key >> m) & ((uint64_t{1} << (2 * n)) - 1);
        const uint64_t y = pos_value >> n;
        const uint64_t x = pos_value & ((uint64_t{1} << n) - 1);
        const uint8_t bit = static_cast<uint8_t>((key >> (m + 2 * n)) & 1u);
        const size_t cell = (j << (2 * n)) | pos_value;
        if (seen[cell] != 0 && seen[cell] != bit + 1) {
            throw CorruptStateError("cell (" + std::to_string(j) + "," + std::to_string(y) + "," +
                                    std::to_string(x) + ") sampled with both output bits");
        }
        seen[cell] = bit + 1;
        out.at(j, y, x) = bit;
    }
    std::string missing;
    int missing_count = 0;
    for (uint64_t j = 0; j < out.frame_count(); ++j) {
        for (uint64_t pos_value = 0; pos_value < (uint64_t{1} << (2 * n)); ++pos_value) {
            if (seen[(j << (2 * n)) | pos_value] == 0) {
                ++missing_count;
                if (missing_count <= 8) {
                    missing += " (" + std::to_string(j) + "," + std::to_string(pos_value >> n) + "," +
                               std::to_string(pos_value & ((uint64_t{1} << n) - 1)) + ")";
                }
            }
        }
    }
    if (missing_count > 0) {
        throw IncompleteSamplingError(std::to_string(missing_count) +
                                      " cell(s) never sampled; first missing:" + missing);
    }
    return out;
}

}  // namespace qvseg
