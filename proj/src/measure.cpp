#include "qvseg/measure.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qvseg/rng.hpp"

namespace qvseg {

std::string Histogram::key_string(uint64_t key) const {
    std::string s(bit_count, '0');
    for (uint32_t k = 0; k < bit_count; ++k) {
        if ((key >> k) & 1u) {
            s[bit_count - 1 - k] = '1';
        }
    }
    return s;
}

static void check_subset(const SparseState& state, const std::vector<uint32_t>& qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("measured qubit subset must be non-empty");
    }
    std::vector<uint32_t> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("measured qubits must be distinct");
    }
    if (sorted.back() >= state.width) {
        throw std::invalid_argument("measured qubit out of range");
    }
}

std::map<uint64_t, double> marginal_distribution(const SparseState& state,
                                                 const std::vector<uint32_t>& qubits) {
    check_subset(state, qubits);
    std::map<uint64_t, double> marginal;
    for (const auto& [key, p] : state.components) {
        uint64_t out = 0;
        for (size_t k = 0; k < qubits.size(); ++k) {
            out |= ((key >> qubits[k]) & 1u) << k;
        }
        marginal[out] += p;
    }
    return marginal;
}

Histogram measure(const SparseState& state, const std::vector<uint32_t>& qubits, uint64_t shots,
                  uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be at least 1");
    }
    const auto marginal = marginal_distribution(state, qubits);

    std::vector<std::pair<uint64_t, double>> bins(marginal.begin(), marginal.end());
    const double total = state.total_probability();

    Histogram h;
    h.bit_count = static_cast<uint32_t>(qubits.size());
    h.shots = shots;
    std::mt19937_64 rng(seed);
    for (uint64_t s = 0; s < shots; ++s) {
        const double u = uniform_unit(rng) * total;
        double cumulative = 0.0;
        uint64_t outcome = bins.back().first;
        for (const auto& [key, p] : bins) {
            cumulative += p;
            if (u < cumulative) {
                outcome = key;
                break;
            }
        }
        ++h.counts[outcome];
    }
    return h;
}

double total_variation_distance(const Histogram& histogram, const std::map<uint64_t, double>& exact) {
    if (histogram.shots == 0) {
        throw std::invalid_argument("histogram has no shots");
    }
    double tv = 0.0;
    for (const auto& [key, p] : exact) {
        auto it = histogram.counts.find(key);
        double empirical = it == histogram.counts.end()
                               ? 0.0
                               : static_cast<double>(it->second) / static_cast<double>(histogram.shots);
        tv += std::abs(empirical - p);
    }
    for (const auto& [key, n] : histogram.counts) {
        if (exact.find(key) == exact.end()) {
            tv += static_cast<double>(n) / static_cast<double>(histogram.shots);
        }
    }
    return 0.5 * tv;
}

}  // namespace qvseg
