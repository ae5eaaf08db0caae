#include "qvseg/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qvseg/errors.hpp"

namespace qvseg {

SparseState SparseState::basis_state(uint32_t width, uint64_t bits) {
    if (width == 0 || width > 64) {
        throw std::invalid_argument("sparse state width must be in [1, 64]");
    }
    if (width < 64 && (bits >> width) != 0) {
        throw std::invalid_argument("basis key does not fit in width " + std::to_string(width));
    }
    SparseState s;
    s.width = width;
    s.components.emplace_back(bits, 1.0);
    return s;
}

double SparseState::total_probability() const {
    double sum = 0.0;
    for (const auto& [key, p] : components) {
        sum += p;
    }
    return sum;
}

double SparseState::probability_of(uint64_t key) const {
    auto it = std::lower_bound(components.begin(), components.end(), key,
                               [](const auto& c, uint64_t k) { return c.first < k; });
    if (it != components.end() && it->first == key) {
        return it->second;
    }
    return 0.0;
}

void SparseState::sort_and_merge() {
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t out = 0;
    for (size_t i = 0; i < components.size();) {
        uint64_t key = components[i].first;
        double p = components[i].second;
        size_t j = i + 1;
        while (j < components.size() && components[j].first == key) {
            p += components[j].second;
            ++j;
        }
        components[out++] = {key, p};
        i = j;
    }
    components.resize(out);
}

void SparseState::validate() const {
    if (width == 0 || width > 64) {
        throw CorruptStateError("sparse state width out of range");
    }
    uint64_t prev = 0;
    bool first = true;
    double sum = 0.0;
    for (const auto& [key, p] : components) {
        if (width < 64 && (key >> width) != 0) {
            throw CorruptStateError("component key exceeds state width");
        }
        if (!first && key <= prev) {
            throw CorruptStateError("component keys not sorted/unique");
        }
        if (!(p > 0.0) || p > 1.0 + kProbabilityTolerance) {
            throw CorruptStateError("component probability outside (0, 1]");
        }
        prev = key;
        first = false;
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance) {
        throw CorruptStateError("probabilities sum to " + std::to_string(sum) + ", expected 1");
    }
}

}  // namespace qvseg
