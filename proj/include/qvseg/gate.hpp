#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace qvseg {

enum class GateKind { X, CX, CCX, MCX, SWAP, CSWAP, RESET };

std::string_view gate_kind_name(GateKind kind);

// One control wire with its polarity. A negative control fires on |0>.
struct Control {
    uint32_t qubit = 0;
    bool positive = true;

    friend bool operator==(const Control&, const Control&) = default;
};

inline Control pos(uint32_t qubit) { return {qubit, true}; }
inline Control neg(uint32_t qubit) { return {qubit, false}; }

struct Gate {
    GateKind kind = GateKind::X;
    std::vector<uint32_t> targets;
    std::vector<Control> controls;

    static Gate x(uint32_t target);
    static Gate cx(Control control, uint32_t target);
    static Gate ccx(Control c0, Control c1, uint32_t target);
    // Canonicalizes: 1 control -> CX, 2 -> CCX, 3+ -> MCX.
    static Gate mcx(std::vector<Control> controls, uint32_t target);
    static Gate swap(uint32_t a, uint32_t b);
    static Gate cswap(Control control, uint32_t a, uint32_t b);
    static Gate reset(uint32_t target);

    // Throws std::invalid_argument on out-of-range or overlapping wires.
    void validate(uint32_t width) const;

    bool controls_satisfied(uint64_t basis) const;
    // Action on one computational-basis key. RESET clears the target bit;
    // everything else is a permutation of keys.
    uint64_t apply_to_basis(uint64_t basis) const;
};

}  // namespace qvseg
