#include "qvseg/pipeline.hpp"

#include <random>
#include <stdexcept>
#include <string>

#include "qvseg/blocks.hpp"
#include "qvseg/errors.hpp"
#include "qvseg/simulate.hpp"

namespace qvseg {

namespace {

uint64_t mix_seed(uint64_t seed, uint64_t stream) {
    uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void emit_color_reset(Circuit& c, const RegisterLayout& lay) {
    for (uint32_t k = 0; k < lay.color.count; ++k) {
        c.append(Gate::reset(lay.color.wire(k)), "reset");
    }
}

// Writes f_j(i) into the color register of every component whose frame and
// position labels read (j, i). The color wires must be 0 (the XOR writes act
// as assignment). These are the preparation oracles of the pipeline; they
// are the only video-dependent gates.
void emit_color_load(Circuit& c, const RegisterLayout& lay, const Video& video) {
    const int n = lay.n_exp;
    for (uint64_t j = 0; j < video.frame_count(); ++j) {
        for (uint64_t y = 0; y < video.side(); ++y) {
            for (uint64_t x = 0; x < video.side(); ++x) {
                const uint16_t value = video.at(j, y, x);
                if (value == 0) {
                    continue;
                }
                std::vector<Control> controls;
                controls.reserve(lay.frame.count + lay.pos.count);
                for (uint32_t b = 0; b < lay.frame.count; ++b) {
                    controls.push_back({lay.frame.wire(b), ((j >> b) & 1u) != 0});
                }
                const uint64_t pos_value = (y << n) | x;
                for (uint32_t b = 0; b < lay.pos.count; ++b) {
                    controls.push_back({lay.pos.wire(b), ((pos_value >> b) & 1u) != 0});
                }
                for (uint32_t s = 0; s < lay.color.count; ++s) {
                    if ((value >> s) & 1u) {
                        c.append(Gate::mcx(controls, lay.color.wire(s)), "load");
                    }
                }
            }
        }
    }
}

// The shared assembly of skeleton and executable circuit. `video == nullptr`
// omits the load blocks and yields the video-independent skeleton.
void emit_pipeline(Circuit& c, const RegisterLayout& lay, uint32_t threshold, const Video* video) {
    const uint32_t w = c.width();

    // First difference: diff_prev <- |f_(j-1) - f_j|.
    c.extend(build_copy(w, lay.color, lay.diff_prev));
    emit_color_reset(c, lay);
    c.extend(build_cycle_shift(w, lay.frame, -1));
    if (video) {
        emit_color_load(c, lay, *video);
    }
    c.extend(build_cycle_shift(w, lay.frame, +1));
    c.extend(build_abs_subtractor(w, lay.color, lay.diff_prev, lay.anc, lay.cmp_out));

    // Restore the current frame's pixel value.
    emit_color_reset(c, lay);
    if (video) {
        emit_color_load(c, lay, *video);
    }

    // Second difference: diff_next <- |f_(j+1) - f_j|.
    c.extend(build_copy(w, lay.color, lay.diff_next));
    emit_color_reset(c, lay);
    c.extend(build_cycle_shift(w, lay.frame, +1));
    if (video) {
        emit_color_load(c, lay, *video);
    }
    c.extend(build_cycle_shift(w, lay.frame, -1));
    c.extend(build_abs_subtractor(w, lay.color, lay.diff_next, lay.anc, lay.cmp_out));

    c.extend(build_binarization(w, lay.diff_prev, threshold, lay.anc, lay.cmp_out));
    c.extend(build_binarization(w, lay.diff_next, threshold, lay.anc, lay.cmp_out));
    c.extend(build_and(w, lay.diff_prev.wire(0), lay.diff_next.wire(0), lay.seg_out.wire(0)));
}

void check_threshold(uint32_t threshold, int q) {
    if (threshold >= (uint32_t{1} << q)) {
        throw std::invalid_argument("threshold " + std::to_string(threshold) + " out of range [0, 2^" +
                                    std::to_string(q) + ")");
    }
}

uint64_t pack_bits(uint64_t key, const std::vector<uint32_t>& qubits) {
    uint64_t out = 0;
    for (size_t k = 0; k < qubits.size(); ++k) {
        out |= ((key >> qubits[k]) & 1u) << k;
    }
    return out;
}

}  // namespace

std::pair<Circuit, RegisterLayout> build_segmentation_circuit(int m_exp, int n_exp, int q,
                                                              uint32_t threshold) {
    RegisterLayout lay = layout_for(m_exp, n_exp, q);
    check_threshold(threshold, q);
    Circuit c(lay.width());
    emit_pipeline(c, lay, threshold, nullptr);
    c.freeze();
    return {std::move(c), lay};
}

Circuit build_video_pipeline_circuit(const Video& video, const RegisterLayout& layout,
                                     uint32_t threshold) {
    require_valid(video);
    check_threshold(threshold, layout.q);
    if (video.m_exp != layout.m_exp || video.n_exp != layout.n_exp || video.q != layout.q) {
        throw std::invalid_argument("video parameters do not match layout");
    }
    Circuit c(layout.width());
    emit_pipeline(c, layout, threshold, &video);
    c.freeze();
    return c;
}

SegmentationResult segment_video(const Video& video, uint32_t threshold, RunMode mode,
                                 std::optional<uint64_t> shots, uint64_t seed,
                                 uint64_t trajectories) {
    require_valid(video);
    RegisterLayout lay = layout_for(video.m_exp, video.n_exp, video.q);
    check_threshold(threshold, lay.q);

    const Circuit circuit = build_video_pipeline_circuit(video, lay, threshold);
    const SparseState initial = encode_video(video, lay);
    const SparseState final_state = run_sparse(circuit, initial);
    final_state.validate();

    SegmentationResult result;
    result.layout = lay;
    result.result_video = decode_segmentation(final_state, lay);
    result.cost = quantum_cost(circuit);
    result.cost.compact_qubit_count = compact_qubit_count(lay.m_exp, lay.n_exp, lay.q);

    const std::vector<uint32_t> measured = measurement_qubits(lay);
    if (shots.has_value()) {
        result.histogram = measure(final_state, measured, *shots, seed);
    }

    if (mode == RunMode::dense_check) {
        if (lay.width() > kDefaultDenseQubitLimit) {
            throw UnsupportedError("dense-check supports at most " +
                                   std::to_string(kDefaultDenseQubitLimit) + " qubits, layout needs " +
                                   std::to_string(lay.width()));
        }
        if (trajectories == 0) {
            throw std::invalid_argument("dense-check needs at least 1 trajectory");
        }
        Histogram empirical;
        empirical.bit_count = static_cast<uint32_t>(measured.size());
        empirical.shots = trajectories;
        for (uint64_t t = 0; t < trajectories; ++t) {
            std::mt19937_64 pick(mix_seed(seed, 2 * t));
            const uint64_t start = sample_component(initial, pick);
            const uint64_t end = run_dense_trajectory(circuit, start, mix_seed(seed, 2 * t + 1));
            ++empirical.counts[pack_bits(end, measured)];
        }
        const auto exact = marginal_distribution(final_state, measured);
        DenseCheckReport report;
        report.trajectories = trajectories;
        report.tv_distance = total_variation_distance(empirical, exact);
        report.pass = report.tv_distance < kDenseCheckTolerance;
        result.dense_check = report;
    }
    return result;
}

CostReport qubit_and_cost_summary(int m_exp, int n_exp, int q) {
    auto [circuit, lay] = build_segmentation_circuit(m_exp, n_exp, q, 0);
    CostReport report = quantum_cost(circuit);
    report.compact_qubit_count = compact_qubit_count(m_exp, n_exp, q);
    return report;
}

}  // namespace qvseg
