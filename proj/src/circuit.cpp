#include "qvseg/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace qvseg {

Circuit::Circuit(uint32_t width) : width_(width) {
    if (width == 0) {
        throw std::invalid_argument("circuit width must be at least 1");
    }
}

void Circuit::require_mutable() const {
    if (frozen_) {
        throw std::invalid_argument("circuit is frozen");
    }
}

uint32_t Circuit::intern(std::string_view label) {
    for (uint32_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] == label) {
            return i;
        }
    }
    labels_.emplace_back(label);
    return static_cast<uint32_t>(labels_.size() - 1);
}

void Circuit::append(Gate gate, std::string_view block) {
    require_mutable();
    gate.validate(width_);
    gates_.push_back(std::move(gate));
    gate_label_.push_back(block.empty() ? kNoLabel : intern(block));
}

void Circuit::extend(const Circuit& fragment, std::string_view relabel) {
    require_mutable();
    if (fragment.width_ != width_) {
        throw std::invalid_argument("fragment width " + std::to_string(fragment.width_) +
                                    " does not match circuit width " + std::to_string(width_));
    }
    for (size_t i = 0; i < fragment.gates_.size(); ++i) {
        std::string_view label = relabel.empty() ? fragment.block_of(i) : relabel;
        gates_.push_back(fragment.gates_[i]);
        gate_label_.push_back(label.empty() ? kNoLabel : intern(label));
    }
}

void Circuit::freeze() {
    frozen_ = true;
}

std::string_view Circuit::block_of(size_t index) const {
    uint32_t id = gate_label_.at(index);
    if (id == kNoLabel) {
        return {};
    }
    return labels_[id];
}

std::vector<std::string> Circuit::block_labels() const {
    return labels_;
}

bool Circuit::has_reset() const {
    for (const Gate& g : gates_) {
        if (g.kind == GateKind::RESET) {
            return true;
        }
    }
    return false;
}

Circuit Circuit::mirror_inverse() const {
    if (has_reset()) {
        throw std::invalid_argument("mirror_inverse requires a reset-free circuit");
    }
    Circuit out(width_);
    for (size_t i = gates_.size(); i-- > 0;) {
        out.append(gates_[i], block_of(i));
    }
    return out;
}

std::string Circuit::debug_dump() const {
    std::ostringstream out;
    for (size_t i = 0; i < gates_.size(); ++i) {
        const Gate& g = gates_[i];
        out << gate_kind_name(g.kind) << " targets=[";
        for (size_t t = 0; t < g.targets.size(); ++t) {
            if (t) out << ',';
            out << g.targets[t];
        }
        out << "] controls=[";
        for (size_t c = 0; c < g.controls.size(); ++c) {
            if (c) out << ',';
            out << '(' << g.controls[c].qubit << ',' << (g.controls[c].positive ? '+' : '-') << ')';
        }
        out << "] block=" << block_of(i) << '\n';
    }
    return out.str();
}

}  // namespace qvseg
