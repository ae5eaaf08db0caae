#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>

#include "qvseg/circuit.hpp"
#include "qvseg/simulate.hpp"
#include "qvseg/sparse_state.hpp"

namespace qvseg::test {

// "011" (most-significant first, wire 0 rightmost) -> key.
inline uint64_t bits(const std::string& s) {
    uint64_t key = 0;
    for (char ch : s) {
        key = (key << 1) | static_cast<uint64_t>(ch == '1');
    }
    return key;
}

inline std::string bit_string(uint64_t key, uint32_t width) {
    std::string s(width, '0');
    for (uint32_t k = 0; k < width; ++k) {
        if ((key >> k) & 1u) {
            s[width - 1 - k] = '1';
        }
    }
    return s;
}

inline SparseState state_of(uint32_t width,
                            std::initializer_list<std::pair<const char*, double>> components) {
    SparseState state;
    state.width = width;
    for (const auto& [text, p] : components) {
        state.components.emplace_back(bits(text), p);
    }
    state.sort_and_merge();
    return state;
}

// Runs a circuit on one basis state; deterministic evolution keeps the
// component count at exactly one.
inline uint64_t run_basis(const Circuit& circuit, uint64_t input) {
    SparseState out = run_sparse(circuit, SparseState::basis_state(circuit.width(), input));
    if (out.components.size() != 1) {
        throw std::logic_error("basis input did not stay a single component");
    }
    return out.components[0].first;
}

}  // namespace qvseg::test
