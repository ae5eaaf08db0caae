#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>

#include "helpers.hpp"
#include "qvseg/errors.hpp"
#include "qvseg/measure.hpp"
#include "qvseg/simulate.hpp"

using namespace qvseg;
using test::bits;
using test::state_of;

namespace {

Circuit random_circuit(uint32_t width, int gates, std::mt19937_64& rng, bool allow_reset) {
    Circuit c(width);
    for (int g = 0; g < gates; ++g) {
        const uint32_t t = static_cast<uint32_t>(rng() % width);
        switch (rng() % 5) {
            case 0:
                c.append(Gate::x(t));
                break;
            case 1: {
                uint32_t ctrl = static_cast<uint32_t>(rng() % width);
                if (ctrl != t) {
                    c.append(Gate::cx({ctrl, (rng() & 1) != 0}, t));
                }
                break;
            }
            case 2: {
                uint32_t o = static_cast<uint32_t>(rng() % width);
                if (o != t) {
                    c.append(Gate::swap(t, o));
                }
                break;
            }
            case 3: {
                if (width >= 3) {
                    uint32_t c0 = static_cast<uint32_t>(rng() % width);
                    uint32_t c1 = static_cast<uint32_t>(rng() % width);
                    if (c0 != c1 && c0 != t && c1 != t) {
                        c.append(Gate::cswap({c0, (rng() & 1) != 0}, c1, t));
                    }
                }
                break;
            }
            default:
                if (allow_reset) {
                    c.append(Gate::reset(t));
                } else {
                    c.append(Gate::x(t));
                }
                break;
        }
    }
    return c;
}

SparseState random_ensemble(uint32_t width, size_t component_count, std::mt19937_64& rng) {
    component_count = std::min(component_count, size_t{1} << width);
    SparseState state;
    state.width = width;
    std::map<uint64_t, double> weights;
    while (weights.size() < component_count) {
        weights[rng() % (uint64_t{1} << width)] = 1.0;
    }
    for (auto& [key, w] : weights) {
        state.components.emplace_back(key, 1.0 / static_cast<double>(component_count));
    }
    return state;
}

}  // namespace

TEST_CASE("run_sparse applies X with wire 0 least significant") {
    Circuit c(2);
    c.append(Gate::x(0));
    auto out = run_sparse(c, state_of(2, {{"00", 1.0}}));
    CHECK(out.components.size() == 1);
    CHECK(out.probability_of(bits("01")) == doctest::Approx(1.0));
}

TEST_CASE("run_sparse merges components on reset") {
    Circuit c(2);
    c.append(Gate::reset(0));
    auto out = run_sparse(c, state_of(2, {{"01", 0.5}, {"00", 0.5}}));
    REQUIRE(out.components.size() == 1);
    CHECK(out.probability_of(bits("00")) == doctest::Approx(1.0));
}

TEST_CASE("run_sparse applies the CCX truth table componentwise") {
    Circuit c(3);
    c.append(Gate::ccx(pos(0), pos(1), 2));
    auto out = run_sparse(c, state_of(3, {{"011", 0.5}, {"001", 0.5}}));
    CHECK(out.probability_of(bits("111")) == doctest::Approx(0.5));
    CHECK(out.probability_of(bits("001")) == doctest::Approx(0.5));
}

TEST_CASE("run_sparse rejects width mismatch") {
    Circuit c(3);
    CHECK_THROWS_AS(run_sparse(c, state_of(2, {{"00", 1.0}})), std::invalid_argument);
}

TEST_CASE("probability is conserved by arbitrary circuits") {
    std::mt19937_64 rng(0xBEEF);
    for (int trial = 0; trial < 25; ++trial) {
        const uint32_t width = 2 + static_cast<uint32_t>(rng() % 7);
        Circuit c = random_circuit(width, 60, rng, true);
        SparseState initial = random_ensemble(width, 1 + rng() % 12, rng);
        SparseState out = run_sparse(c, initial);
        CHECK(std::abs(out.total_probability() - 1.0) <= kProbabilityTolerance);
        out.validate();
    }
}

TEST_CASE("dense trajectory basics") {
    Circuit x(1);
    x.append(Gate::x(0));
    CHECK(run_dense_trajectory(x, 0, 7) == 1);

    Circuit idle(2);
    CHECK(run_dense_trajectory(idle, bits("10"), 7) == bits("10"));

    Circuit wide(25);
    CHECK_THROWS_AS(run_dense_trajectory(wide, 0, 7), UnsupportedError);
}

TEST_CASE("dense trajectories reproduce sparse marginals") {
    std::mt19937_64 rng(0x5EED);
    for (int trial = 0; trial < 3; ++trial) {
        const uint32_t width = 4 + static_cast<uint32_t>(rng() % 3);
        Circuit c = random_circuit(width, 40, rng, true);
        SparseState initial = random_ensemble(width, 5, rng);
        SparseState sparse_out = run_sparse(c, initial);

        std::vector<uint32_t> wires(width);
        for (uint32_t w = 0; w < width; ++w) {
            wires[w] = w;
        }
        const auto exact = marginal_distribution(sparse_out, wires);

        const uint64_t trajectories = 4096;
        Histogram empirical;
        empirical.bit_count = width;
        empirical.shots = trajectories;
        for (uint64_t t = 0; t < trajectories; ++t) {
            std::mt19937_64 pick(trial * 100003 + t);
            const uint64_t start = sample_component(initial, pick);
            ++empirical.counts[run_dense_trajectory(c, start, t * 2 + 1)];
        }
        CHECK(total_variation_distance(empirical, exact) < 0.05);
    }
}
