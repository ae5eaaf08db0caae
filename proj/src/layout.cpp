#include "qvseg/layout.hpp"

#include <stdexcept>
#include <string>

#include "qvseg/errors.hpp"

namespace qvseg {

RegisterLayout layout_for(int m_exp, int n_exp, int q) {
    if (m_exp < 1 || n_exp < 1) {
        throw std::invalid_argument("m_exp and n_exp must be at least 1");
    }
    if (q < 1 || q > 8) {
        throw UnsupportedError("q must be in [1, 8] (grayscale), got " + std::to_string(q));
    }
    RegisterLayout lay;
    lay.m_exp = m_exp;
    lay.n_exp = n_exp;
    lay.q = q;

    uint32_t at = 0;
    auto next = [&at](uint32_t count) {
        WireRange r{at, count};
        at += count;
        return r;
    };
    lay.color = next(static_cast<uint32_t>(q));
    lay.pos = next(static_cast<uint32_t>(2 * n_exp));
    lay.frame = next(static_cast<uint32_t>(m_exp));
    lay.diff_prev = next(static_cast<uint32_t>(q));
    lay.diff_next = next(static_cast<uint32_t>(q));
    lay.anc = next(3);
    lay.cmp_out = next(2);
    lay.seg_out = next(1);
    return lay;
}

int compact_qubit_count(int m_exp, int n_exp, int q) {
    return 3 * q + 2 * n_exp + m_exp + 3;
}

}  // namespace qvseg
