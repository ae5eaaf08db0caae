#include <doctest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"
#include "qvseg/encoding.hpp"
#include "qvseg/errors.hpp"

using namespace qvseg;

namespace {

Video random_video(int m_exp, int n_exp, int q, std::mt19937_64& rng) {
    Video v = Video::filled(m_exp, n_exp, q);
    for (auto& frame : v.frames) {
        for (auto& row : frame) {
            for (auto& px : row) {
                px = static_cast<uint16_t>(rng() % (uint64_t{1} << q));
            }
        }
    }
    return v;
}

}  // namespace

TEST_CASE("validate_video accepts the desk-scale shape") {
    Video v = Video::filled(2, 2, 3, 7);
    CHECK(validate_video(v).empty());
}

TEST_CASE("validate_video reports a non-power-of-two frame count") {
    Video v = Video::filled(2, 1, 3);
    v.frames.pop_back();  // 3 frames
    auto violations = validate_video(v);
    REQUIRE_FALSE(violations.empty());
    CHECK(violations[0].find("power of two") != std::string::npos);
}

TEST_CASE("validate_video reports out-of-range pixels") {
    Video v = Video::filled(1, 1, 3);
    v.at(0, 0, 0) = 8;
    auto violations = validate_video(v);
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].find("exceeds") != std::string::npos);
}

TEST_CASE("layout widths") {
    CHECK(layout_for(2, 2, 3).width() == 21);
    CHECK(layout_for(1, 1, 1).width() == 12);
    CHECK(compact_qubit_count(2, 2, 3) == 18);
    CHECK_THROWS_AS(layout_for(2, 2, 9), UnsupportedError);
    CHECK_THROWS_AS(layout_for(0, 2, 3), std::invalid_argument);
}

TEST_CASE("layout slices tile the width in order") {
    auto lay = layout_for(2, 2, 3);
    CHECK(lay.color.start == 0);
    CHECK(lay.pos.start == lay.color.end());
    CHECK(lay.frame.start == lay.pos.end());
    CHECK(lay.diff_prev.start == lay.frame.end());
    CHECK(lay.diff_next.start == lay.diff_prev.end());
    CHECK(lay.anc.start == lay.diff_next.end());
    CHECK(lay.cmp_out.start == lay.anc.end());
    CHECK(lay.seg_out.start == lay.cmp_out.end());
    CHECK(lay.seg_out.end() == lay.width());
    CHECK(lay.anc.count == 3);
    CHECK(lay.cmp_out.count == 2);
    CHECK(lay.seg_out.count == 1);
}

TEST_CASE("encode produces the uniform component ensemble") {
    Video v = Video::filled(1, 1, 1);
    auto lay = layout_for(1, 1, 1);
    auto state = encode_video(v, lay);
    CHECK(state.components.size() == 8);
    for (const auto& [key, p] : state.components) {
        CHECK(p == 0.125);
        CHECK(extract_bits(key, lay.color) == 0);
        CHECK(extract_bits(key, lay.diff_prev) == 0);
        CHECK(extract_bits(key, lay.diff_next) == 0);
    }
}

TEST_CASE("encode places pixel bits by frame and position") {
    Video v = Video::filled(1, 1, 2);
    v.at(0, 0, 1) = 3;
    auto lay = layout_for(1, 1, 2);
    auto state = encode_video(v, lay);
    bool found = false;
    for (const auto& [key, p] : state.components) {
        if (extract_bits(key, lay.frame) == 0 && extract_bits(key, lay.pos) == 0b01) {
            CHECK(extract_bits(key, lay.color) == 0b11);
            found = true;
        } else {
            CHECK(extract_bits(key, lay.color) == 0);
        }
    }
    CHECK(found);
}

TEST_CASE("encode rejects a video/layout mismatch") {
    Video v = Video::filled(1, 1, 2);
    CHECK_THROWS_AS(encode_video(v, layout_for(1, 1, 3)), std::invalid_argument);
}

TEST_CASE("decoding the color register inverts encode") {
    std::mt19937_64 rng(0xE0C0DE);
    for (int trial = 0; trial < 20; ++trial) {
        const int m = 1 + static_cast<int>(rng() % 2);
        const int n = 1 + static_cast<int>(rng() % 2);
        const int q = 1 + static_cast<int>(rng() % 3);
        Video v = random_video(m, n, q, rng);
        auto lay = layout_for(m, n, q);
        CHECK(decode_color_register(encode_video(v, lay), lay) == v);
    }
}

TEST_CASE("decode_segmentation reads seg_out per cell") {
    auto lay = layout_for(1, 2, 1);
    Video v = Video::filled(1, 2, 1);
    auto state = encode_video(v, lay);

    // All seg_out bits zero -> all-background video.
    Video zero = decode_segmentation(state, lay);
    CHECK(zero == Video::filled(1, 2, 1));

    // Mark one cell: frame 1, position i = 5, i.e. (y, x) = (1, 1).
    for (auto& [key, p] : state.components) {
        if (extract_bits(key, lay.frame) == 1 && extract_bits(key, lay.pos) == 5) {
            key = deposit_bits(key, lay.seg_out, 1);
        }
    }
    state.sort_and_merge();
    Video one = decode_segmentation(state, lay);
    CHECK(one.at(1, 1, 1) == 1);
    uint64_t total = 0;
    for (const auto& frame : one.frames) {
        for (const auto& row : frame) {
            for (uint16_t px : row) {
                total += px;
            }
        }
    }
    CHECK(total == 1);
}

TEST_CASE("decode_segmentation flags conflicting cells") {
    auto lay = layout_for(1, 1, 1);
    SparseState state;
    state.width = lay.width();
    // Same (frame, pos), different seg_out bits -> corrupt.
    uint64_t base = deposit_bits(0, lay.pos, 1);
    state.components.emplace_back(base, 0.5);
    state.components.emplace_back(deposit_bits(base, lay.seg_out, 1) | 1, 0.5);
    state.sort_and_merge();
    CHECK_THROWS_AS(decode_segmentation(state, lay), CorruptStateError);
}

TEST_CASE("decode_histogram rebuilds the mask and checks coverage") {
    auto lay = layout_for(2, 2, 3);
    const int cells_bits = lay.m_exp + 2 * lay.n_exp;

    Histogram h;
    h.bit_count = static_cast<uint32_t>(cells_bits + 1);
    h.shots = 64;
    for (uint64_t cell = 0; cell < 64; ++cell) {
        h.counts[cell] = 1;  // seg bit 0 for every (j, i)
    }
    CHECK(decode_histogram(h, lay) == Video::filled(2, 2, 1));

    h.counts.erase(uint64_t{0});
    h.shots = 63;
    CHECK_THROWS_AS(decode_histogram(h, lay), IncompleteSamplingError);
}

TEST_CASE("decode_histogram flags cells sampled with both bits") {
    auto lay = layout_for(1, 1, 1);
    Histogram h;
    h.bit_count = static_cast<uint32_t>(lay.m_exp + 2 * lay.n_exp + 1);
    h.shots = 9;
    for (uint64_t cell = 0; cell < 8; ++cell) {
        h.counts[cell] = 1;
    }
    h.counts[(uint64_t{1} << 3) | 5] = 1;  // cell 5 again, seg bit 1
    CHECK_THROWS_AS(decode_histogram(h, lay), CorruptStateError);
}

TEST_CASE("sampled histograms cover every cell at the experiment scale") {
    // 1024 shots over 64 uniform cells; fixed seed keeps it deterministic.
    Video v = Video::filled(2, 2, 3, 5);
    auto lay = layout_for(2, 2, 3);
    auto state = encode_video(v, lay);
    auto h = measure(state, measurement_qubits(lay), 1024, 99);
    Video mask = decode_histogram(h, lay);
    CHECK(mask == Video::filled(2, 2, 1));
    CHECK(h.counts.size() == 64);
}
