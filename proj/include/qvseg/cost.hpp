#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qvseg/circuit.hpp"

namespace qvseg {

// Weighted gate count. Convention: single- and double-qubit gates and resets
// are unit 1 (X, CX, SWAP, RESET), CCX is 5, CSWAP is 3, and an MCX with
// k >= 3 controls is 5*(2k-3) — the cost of its decomposition into 2k-3
// Toffolis with k-2 ancillas. Control polarity does not change the cost.
int64_t gate_cost(const Gate& gate);

struct CostReport {
    std::map<std::string, int64_t> per_block;
    int64_t total_cost = 0;
    uint32_t qubit_count = 0;
    // Width of the variant that folds the compare/AND outputs into existing
    // wires instead of dedicating wires to them; negative when not reported.
    int32_t compact_qubit_count = -1;
    std::map<GateKind, int64_t> gate_census;
};

inline constexpr const char* kUnlabeledBlock = "unlabeled";

// Per-block and total cost of a frozen circuit. Unlabeled gates are pooled
// under kUnlabeledBlock so the block subtotals always sum to total_cost.
CostReport quantum_cost(const Circuit& circuit);

}  // namespace qvseg
