#include "qvseg/gate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qvseg {

std::string_view gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::CX:
            return "CX";
        case GateKind::CCX:
            return "CCX";
        case GateKind::MCX:
            return "MCX";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::CSWAP:
            return "CSWAP";
        case GateKind::RESET:
            return "RESET";
    }
    return "?";
}

Gate Gate::x(uint32_t target) {
    return Gate{GateKind::X, {target}, {}};
}

Gate Gate::cx(Control control, uint32_t target) {
    return Gate{GateKind::CX, {target}, {control}};
}

Gate Gate::ccx(Control c0, Control c1, uint32_t target) {
    return Gate{GateKind::CCX, {target}, {c0, c1}};
}

Gate Gate::mcx(std::vector<Control> controls, uint32_t target) {
    GateKind kind = GateKind::MCX;
    if (controls.empty()) {
        kind = GateKind::X;
    } else if (controls.size() == 1) {
        kind = GateKind::CX;
    } else if (controls.size() == 2) {
        kind = GateKind::CCX;
    }
    return Gate{kind, {target}, std::move(controls)};
}

Gate Gate::swap(uint32_t a, uint32_t b) {
    return Gate{GateKind::SWAP, {a, b}, {}};
}

Gate Gate::cswap(Control control, uint32_t a, uint32_t b) {
    return Gate{GateKind::CSWAP, {a, b}, {control}};
}

Gate Gate::reset(uint32_t target) {
    return Gate{GateKind::RESET, {target}, {}};
}

void Gate::validate(uint32_t width) const {
    size_t want_targets = (kind == GateKind::SWAP || kind == GateKind::CSWAP) ? 2 : 1;
    if (targets.size() != want_targets) {
        throw std::invalid_argument(std::string(gate_kind_name(kind)) + " gate wants " +
                                    std::to_string(want_targets) + " target(s), got " +
                                    std::to_string(targets.size()));
    }
    size_t k = controls.size();
    bool controls_ok = false;
    switch (kind) {
        case GateKind::X:
        case GateKind::SWAP:
        case GateKind::RESET:
            controls_ok = k == 0;
            break;
        case GateKind::CX:
        case GateKind::CSWAP:
            controls_ok = k == 1;
            break;
        case GateKind::CCX:
            controls_ok = k == 2;
            break;
        case GateKind::MCX:
            controls_ok = k >= 1;
            break;
    }
    if (!controls_ok) {
        throw std::invalid_argument(std::string(gate_kind_name(kind)) + " gate has invalid control count " +
                                    std::to_string(k));
    }

    std::vector<uint32_t> wires = targets;
    for (const Control& c : controls) {
        wires.push_back(c.qubit);
    }
    for (uint32_t w : wires) {
        if (w >= width) {
            throw std::invalid_argument("gate wire " + std::to_string(w) + " out of range for width " +
                                        std::to_string(width));
        }
    }
    std::sort(wires.begin(), wires.end());
    if (std::adjacent_find(wires.begin(), wires.end()) != wires.end()) {
        throw std::invalid_argument("gate wires must be pairwise distinct");
    }
}

bool Gate::controls_satisfied(uint64_t basis) const {
    for (const Control& c : controls) {
        bool bit = (basis >> c.qubit) & 1u;
        if (bit != c.positive) {
            return false;
        }
    }
    return true;
}

uint64_t Gate::apply_to_basis(uint64_t basis) const {
    switch (kind) {
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX:
            if (controls_satisfied(basis)) {
                basis ^= uint64_t{1} << targets[0];
            }
            return basis;
        case GateKind::SWAP:
        case GateKind::CSWAP:
            if (controls_satisfied(basis)) {
                uint64_t b0 = (basis >> targets[0]) & 1u;
                uint64_t b1 = (basis >> targets[1]) & 1u;
                if (b0 != b1) {
                    basis ^= (uint64_t{1} << targets[0]) | (uint64_t{1} << targets[1]);
                }
            }
            return basis;
        case GateKind::RESET:
            return basis & ~(uint64_t{1} << targets[0]);
    }
    return basis;
}

}  // namespace qvseg
