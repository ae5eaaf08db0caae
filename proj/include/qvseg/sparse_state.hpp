#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace qvseg {

inline constexpr double kProbabilityTolerance = 1e-12;

// Probability-weighted set of computational-basis components, kept sorted by
// basis key. This is the exact state of a coherence-free circuit: every gate
// permutes keys and RESET merges them, so no amplitudes or phases are needed
// and the cost scales with the component count instead of 2^width.
struct SparseState {
    uint32_t width = 0;
    std::vector<std::pair<uint64_t, double>> components;

    static SparseState basis_state(uint32_t width, uint64_t bits);

    double total_probability() const;
    // Probability of one basis key (0.0 when absent).
    double probability_of(uint64_t key) const;

    // Restores the sorted-unique invariant, summing probabilities of
    // duplicate keys (the RESET merge rule).
    void sort_and_merge();

    // Throws CorruptStateError when keys are out of range / unsorted or the
    // probabilities are invalid or do not sum to 1 within tolerance.
    void validate() const;
};

}  // namespace qvseg
