#include "qvseg/cost.hpp"

#include <stdexcept>

namespace qvseg {

int64_t gate_cost(const Gate& gate) {
    switch (gate.kind) {
        case GateKind::X:
        case GateKind::CX:
        case GateKind::SWAP:
        case GateKind::RESET:
            return 1;
        case GateKind::CCX:
            return 5;
        case GateKind::CSWAP:
            return 3;
        case GateKind::MCX: {
            int64_t k = static_cast<int64_t>(gate.controls.size());
            if (k <= 1) {
                return 1;
            }
            return 5 * (2 * k - 3);
        }
    }
    return 1;
}

CostReport quantum_cost(const Circuit& circuit) {
    if (!circuit.frozen()) {
        throw std::invalid_argument("quantum_cost requires a frozen circuit");
    }
    CostReport report;
    report.qubit_count = circuit.width();
    for (size_t i = 0; i < circuit.size(); ++i) {
        const Gate& g = circuit.gates()[i];
        int64_t cost = gate_cost(g);
        std::string_view block = circuit.block_of(i);
        report.per_block[block.empty() ? std::string(kUnlabeledBlock) : std::string(block)] += cost;
        report.total_cost += cost;
        ++report.gate_census[g.kind];
    }
    return report;
}

}  // namespace qvseg
