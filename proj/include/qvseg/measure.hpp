#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qvseg/sparse_state.hpp"

namespace qvseg {

// Shot counts over a measured qubit subset. Outcome bit k holds the value of
// the k-th measured qubit, so qubits[0] is the least-significant bit of every
// key (strings render most-significant first).
struct Histogram {
    uint32_t bit_count = 0;
    uint64_t shots = 0;
    std::map<uint64_t, uint64_t> counts;

    std::string key_string(uint64_t key) const;
};

// Exact marginal of the state on the given qubits, keyed like Histogram.
std::map<uint64_t, double> marginal_distribution(const SparseState& state,
                                                 const std::vector<uint32_t>& qubits);

// Draws `shots` multinomial samples from the marginal with a seeded RNG.
// Deterministic for a fixed (state, qubits, shots, seed).
Histogram measure(const SparseState& state, const std::vector<uint32_t>& qubits, uint64_t shots,
                  uint64_t seed);

// Total variation distance between a sampled histogram and an exact marginal.
double total_variation_distance(const Histogram& histogram, const std::map<uint64_t, double>& exact);

}  // namespace qvseg
