#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qvseg/gate.hpp"

namespace qvseg {

// Ordered reversible-gate program over `width` wires. Append-only while
// building; freeze() makes it immutable (frozen circuits are safe to share
// across threads). Each gate may carry a block label for cost attribution.
class Circuit {
public:
    explicit Circuit(uint32_t width);

    uint32_t width() const { return width_; }
    size_t size() const { return gates_.size(); }
    bool frozen() const { return frozen_; }
    const std::vector<Gate>& gates() const { return gates_; }

    void append(Gate gate, std::string_view block = {});
    // Appends every gate of `fragment` (same width required). When `relabel`
    // is non-empty it replaces the fragment's block labels.
    void extend(const Circuit& fragment, std::string_view relabel = {});
    void freeze();

    // Label of gate `index`; empty when unlabeled.
    std::string_view block_of(size_t index) const;
    // Distinct labels in first-appearance order (skips the unlabeled bucket).
    std::vector<std::string> block_labels() const;

    bool has_reset() const;
    // Reversed gate order; every non-reset kind is an involution, so this is
    // the exact inverse. Throws for circuits containing RESET.
    Circuit mirror_inverse() const;

    // One line per gate: KIND targets=[..] controls=[(idx,+|-)..] block=<label>
    std::string debug_dump() const;

private:
    static constexpr uint32_t kNoLabel = UINT32_MAX;

    uint32_t intern(std::string_view label);
    void require_mutable() const;

    uint32_t width_ = 0;
    bool frozen_ = false;
    std::vector<Gate> gates_;
    std::vector<uint32_t> gate_label_;
    std::vector<std::string> labels_;
};

}  // namespace qvseg
