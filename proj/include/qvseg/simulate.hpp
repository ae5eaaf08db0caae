#pragma once

#include <cstdint>
#include <random>

#include "qvseg/circuit.hpp"
#include "qvseg/sparse_state.hpp"

namespace qvseg {

inline constexpr uint32_t kDefaultDenseQubitLimit = 24;

// Exact ensemble evolution: every gate maps each component's key; RESET
// merges components that collide, summing probabilities. Total probability
// is preserved for any circuit.
SparseState run_sparse(const Circuit& circuit, SparseState initial);

// One stochastic state-vector trajectory from a single basis state. Unitary
// gates permute amplitudes; RESET measures the target (Born rule, seeded RNG)
// and flips it to 0 on outcome 1. Returns one terminal full-measurement key.
// Meaningful only statistically, as a cross-check of run_sparse.
uint64_t run_dense_trajectory(const Circuit& circuit, uint64_t initial_bits, uint64_t seed,
                              uint32_t dense_qubit_limit = kDefaultDenseQubitLimit);

// Draws one component key with probability proportional to its weight.
uint64_t sample_component(const SparseState& state, std::mt19937_64& rng);

}  // namespace qvseg
