#include "qvseg/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qvseg/errors.hpp"
#include "qvseg/rng.hpp"

namespace qvseg {

namespace {

struct ControlMask {
    uint64_t mask = 0;
    uint64_t value = 0;
};

ControlMask control_mask(const Gate& g) {
    ControlMask cm;
    for (const Control& c : g.controls) {
        uint64_t bit = uint64_t{1} << c.qubit;
        cm.mask |= bit;
        if (c.positive) {
            cm.value |= bit;
        }
    }
    return cm;
}

}  // namespace

SparseState run_sparse(const Circuit& circuit, SparseState state) {
    if (state.width != circuit.width()) {
        throw std::invalid_argument("state width " + std::to_string(state.width) +
                                    " does not match circuit width " + std::to_string(circuit.width()));
    }
    if (circuit.width() > 64) {
        throw UnsupportedError("sparse simulation supports at most 64 qubits");
    }
    for (const Gate& g : circuit.gates()) {
        const ControlMask cm = control_mask(g);
        switch (g.kind) {
            case GateKind::X:
            case GateKind::CX:
            case GateKind::CCX:
            case GateKind::MCX: {
                uint64_t tmask = uint64_t{1} << g.targets[0];
                for (auto& [key, p] : state.components) {
                    if ((key & cm.mask) == cm.value) {
                        key ^= tmask;
                    }
                }
                break;
            }
            case GateKind::SWAP:
            case GateKind::CSWAP: {
                uint64_t m0 = uint64_t{1} << g.targets[0];
                uint64_t m1 = uint64_t{1} << g.targets[1];
                for (auto& [key, p] : state.components) {
                    if ((key & cm.mask) == cm.value) {
                        bool b0 = key & m0;
                        bool b1 = key & m1;
                        if (b0 != b1) {
                            key ^= m0 | m1;
                        }
                    }
                }
                break;
            }
            case GateKind::RESET: {
                uint64_t tmask = uint64_t{1} << g.targets[0];
                for (auto& [key, p] : state.components) {
                    key &= ~tmask;
                }
                break;
            }
        }
        state.sort_and_merge();
    }
    return state;
}

uint64_t run_dense_trajectory(const Circuit& circuit, uint64_t initial_bits, uint64_t seed,
                              uint32_t dense_qubit_limit) {
    const uint32_t width = circuit.width();
    if (width > dense_qubit_limit || dense_qubit_limit > 30) {
        throw UnsupportedError("dense trajectory limited to " + std::to_string(dense_qubit_limit) +
                               " qubits, circuit has " + std::to_string(width));
    }
    const size_t dim = size_t{1} << width;
    if (initial_bits >= dim) {
        throw std::invalid_argument("initial basis key does not fit in circuit width");
    }

    std::vector<double> amp(dim, 0.0);
    amp[initial_bits] = 1.0;
    std::mt19937_64 rng(seed);

    const uint64_t full_mask = dim - 1;
    // Enumerates i = fixed | s over all subsets s of free_mask, visiting
    // exactly the indices whose control and target bits match `fixed`.
    auto for_each_matching = [&](uint64_t fixed, uint64_t free_mask, auto&& body) {
        uint64_t s = 0;
        while (true) {
            body(fixed | s);
            if (s == free_mask) {
                break;
            }
            s = (s - free_mask) & free_mask;
        }
    };

    for (const Gate& g : circuit.gates()) {
        const ControlMask cm = control_mask(g);
        switch (g.kind) {
            case GateKind::X:
            case GateKind::CX:
            case GateKind::CCX:
            case GateKind::MCX: {
                const uint64_t tmask = uint64_t{1} << g.targets[0];
                const uint64_t free_mask = full_mask & ~(cm.mask | tmask);
                for_each_matching(cm.value, free_mask, [&](uint64_t i) {
                    std::swap(amp[i], amp[i | tmask]);
                });
                break;
            }
            case GateKind::SWAP:
            case GateKind::CSWAP: {
                const uint64_t m0 = uint64_t{1} << g.targets[0];
                const uint64_t m1 = uint64_t{1} << g.targets[1];
                const uint64_t free_mask = full_mask & ~(cm.mask | m0 | m1);
                for_each_matching(cm.value | m0, free_mask, [&](uint64_t i) {
                    std::swap(amp[i], amp[i ^ (m0 | m1)]);
                });
                break;
            }
            case GateKind::RESET: {
                const uint64_t tmask = uint64_t{1} << g.targets[0];
                double p0 = 0.0;
                for (uint64_t i = 0; i < dim; ++i) {
                    if ((i & tmask) == 0) {
                        p0 += amp[i] * amp[i];
                    }
                }
                const double u = uniform_unit(rng);
                if (u < p0) {
                    const double scale = 1.0 / std::sqrt(p0);
                    for (uint64_t i = 0; i < dim; ++i) {
                        if (i & tmask) {
                            amp[i] = 0.0;
                        } else {
                            amp[i] *= scale;
                        }
                    }
                } else {
                    // Project onto outcome 1, then flip the wire back to 0.
                    const double scale = 1.0 / std::sqrt(1.0 - p0);
                    for (uint64_t i = 0; i < dim; ++i) {
                        if ((i & tmask) == 0) {
                            amp[i] = amp[i | tmask] * scale;
                            amp[i | tmask] = 0.0;
                        }
                    }
                }
                break;
            }
        }
    }

    // Terminal full measurement.
    const double u = uniform_unit(rng);
    double cumulative = 0.0;
    uint64_t last_nonzero = 0;
    for (uint64_t i = 0; i < dim; ++i) {
        double p = amp[i] * amp[i];
        if (p > 0.0) {
            last_nonzero = i;
            cumulative += p;
            if (u < cumulative) {
                return i;
            }
        }
    }
    return last_nonzero;
}

uint64_t sample_component(const SparseState& state, std::mt19937_64& rng) {
    if (state.components.empty()) {
        throw std::invalid_argument("cannot sample an empty state");
    }
    const double u = uniform_unit(rng) * state.total_probability();
    double cumulative = 0.0;
    for (const auto& [key, p] : state.components) {
        cumulative += p;
        if (u < cumulative) {
            return key;
        }
    }
    return state.components.back().first;
}

}  // namespace qvseg
