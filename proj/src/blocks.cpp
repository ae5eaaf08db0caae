#include "qvseg/blocks.hpp"

#include <stdexcept>
#include <string>

namespace qvseg {

namespace {

void check_range(uint32_t width, WireRange r, const char* name, uint32_t want_count = 0) {
    if (want_count != 0 && r.count != want_count) {
        throw std::invalid_argument(std::string(name) + " slice must have " + std::to_string(want_count) +
                                    " wire(s), got " + std::to_string(r.count));
    }
    if (r.count == 0) {
        throw std::invalid_argument(std::string(name) + " slice is empty");
    }
    if (r.end() > width) {
        throw std::invalid_argument(std::string(name) + " slice exceeds circuit width");
    }
}

void check_disjoint(std::initializer_list<WireRange> ranges) {
    for (auto i = ranges.begin(); i != ranges.end(); ++i) {
        for (auto j = i + 1; j != ranges.end(); ++j) {
            if (i->start < j->end() && j->start < i->end()) {
                throw std::invalid_argument("register slices overlap");
            }
        }
    }
}

}  // namespace

Circuit build_comparator(uint32_t width, WireRange a, WireRange b, WireRange anc, WireRange y) {
    check_range(width, a, "a");
    check_range(width, b, "b", a.count);
    check_range(width, anc, "anc", 3);
    check_range(width, y, "y", 2);
    check_disjoint({a, b, anc, y});

    const uint32_t u = anc.wire(0);
    const uint32_t t = anc.wire(1);
    const uint32_t y0 = y.wire(0);
    const uint32_t y1 = y.wire(1);

    Circuit c(width);
    c.append(Gate::x(u), "QC");
    for (uint32_t k = a.count; k-- > 0;) {
        c.append(Gate::cx(pos(a.wire(k)), b.wire(k)), "QC");
        c.append(Gate::cswap(pos(b.wire(k)), u, t), "QC");
        c.append(Gate::ccx(pos(t), pos(a.wire(k)), y1), "QC");
        c.append(Gate::reset(t), "QC");
        c.append(Gate::cx(pos(a.wire(k)), b.wire(k)), "QC");
    }
    c.append(Gate::ccx(neg(u), neg(y1), y0), "QC");
    c.append(Gate::reset(u), "QC");
    return c;
}

Circuit build_subtractor(uint32_t width, WireRange a, WireRange b, WireRange anc) {
    check_range(width, a, "a");
    check_range(width, b, "b", a.count);
    check_range(width, anc, "anc", 3);
    check_disjoint({a, b, anc});

    Circuit c(width);
    for (uint32_t k = 0; k < a.count; ++k) {
        const uint32_t fresh = anc.wire(k % 2);
        if (k == 0) {
            // First borrow: !a_0 & b_0.
            c.append(Gate::ccx(neg(a.wire(0)), pos(b.wire(0)), fresh), "QS");
            c.append(Gate::cx(pos(a.wire(0)), b.wire(0)), "QS");
            continue;
        }
        const uint32_t borrow = anc.wire((k - 1) % 2);
        // Next borrow = MAJ(!a_k, b_k, borrow) as the XOR of pairwise ANDs,
        // computed from the original b_k before the difference lands on it.
        c.append(Gate::ccx(neg(a.wire(k)), pos(b.wire(k)), fresh), "QS");
        c.append(Gate::ccx(neg(a.wire(k)), pos(borrow), fresh), "QS");
        c.append(Gate::ccx(pos(b.wire(k)), pos(borrow), fresh), "QS");
        c.append(Gate::cx(pos(a.wire(k)), b.wire(k)), "QS");
        c.append(Gate::cx(pos(borrow), b.wire(k)), "QS");
        c.append(Gate::reset(borrow), "QS");
    }
    c.append(Gate::reset(anc.wire((a.count - 1) % 2)), "QS");
    return c;
}

Circuit build_abs_subtractor(uint32_t width, WireRange a, WireRange b, WireRange anc, WireRange y) {
    check_range(width, a, "a");
    check_range(width, b, "b", a.count);
    check_range(width, anc, "anc", 3);
    check_range(width, y, "y", 2);
    check_disjoint({a, b, anc, y});

    Circuit c(width);
    c.extend(build_comparator(width, a, b, anc, y), "QAS");
    // a < b: swap so the larger value ends in a before subtracting.
    for (uint32_t k = 0; k < a.count; ++k) {
        c.append(Gate::cswap(pos(y.wire(0)), a.wire(k), b.wire(k)), "QAS");
    }
    c.extend(build_subtractor(width, a, b, anc), "QAS");
    c.append(Gate::reset(y.wire(0)), "QAS");
    c.append(Gate::reset(y.wire(1)), "QAS");
    return c;
}

Circuit build_copy(uint32_t width, WireRange src, WireRange dst) {
    check_range(width, src, "src");
    check_range(width, dst, "dst", src.count);
    check_disjoint({src, dst});

    Circuit c(width);
    for (uint32_t k = 0; k < src.count; ++k) {
        c.append(Gate::cx(pos(src.wire(k)), dst.wire(k)), "copy");
    }
    return c;
}

Circuit build_cycle_shift(uint32_t width, WireRange frame, int direction) {
    check_range(width, frame, "frame");
    if (direction != 1 && direction != -1) {
        throw std::invalid_argument("cycle shift direction must be +1 or -1");
    }

    // Increment ripples a carry through all-ones prefixes; decrement is the
    // same cascade conditioned on all-zeros prefixes.
    const bool polarity = direction == 1;
    Circuit c(width);
    for (uint32_t k = frame.count; k-- > 1;) {
        std::vector<Control> controls;
        controls.reserve(k);
        for (uint32_t low = 0; low < k; ++low) {
            controls.push_back({frame.wire(low), polarity});
        }
        c.append(Gate::mcx(std::move(controls), frame.wire(k)), "CT");
    }
    c.append(Gate::x(frame.wire(0)), "CT");
    return c;
}

Circuit build_threshold_compare(uint32_t width, WireRange c_reg, uint32_t threshold, WireRange anc,
                                WireRange y) {
    check_range(width, c_reg, "c");
    check_range(width, anc, "anc", 3);
    check_range(width, y, "y", 2);
    check_disjoint({c_reg, anc, y});
    if (threshold >= (uint32_t{1} << c_reg.count)) {
        throw std::invalid_argument("threshold " + std::to_string(threshold) + " does not fit in " +
                                    std::to_string(c_reg.count) + " bits");
    }

    const uint32_t u = anc.wire(0);
    const uint32_t t = anc.wire(1);
    const uint32_t y0 = y.wire(0);
    const uint32_t y1 = y.wire(1);

    Circuit c(width);
    c.append(Gate::x(u), "QC");
    for (uint32_t k = c_reg.count; k-- > 0;) {
        const bool t_bit = (threshold >> k) & 1u;
        // c_k != t_bit, expressed as a control polarity on c_k.
        c.append(Gate::cswap({c_reg.wire(k), !t_bit}, u, t), "QC");
        c.append(Gate::ccx(pos(t), pos(c_reg.wire(k)), y1), "QC");
        c.append(Gate::reset(t), "QC");
    }
    c.append(Gate::ccx(neg(u), neg(y1), y0), "QC");
    c.append(Gate::reset(u), "QC");
    return c;
}

Circuit build_binarization(uint32_t width, WireRange c_reg, uint32_t threshold, WireRange anc,
                           WireRange y) {
    Circuit c(width);
    c.extend(build_threshold_compare(width, c_reg, threshold, anc, y), "QB");
    // c >= threshold unless y1y0 = 01.
    c.append(Gate::reset(c_reg.wire(0)), "QB");
    c.append(Gate::x(c_reg.wire(0)), "QB");
    c.append(Gate::ccx(neg(y.wire(1)), pos(y.wire(0)), c_reg.wire(0)), "QB");
    c.append(Gate::reset(y.wire(0)), "QB");
    c.append(Gate::reset(y.wire(1)), "QB");
    return c;
}

Circuit build_and(uint32_t width, uint32_t b0, uint32_t b1, uint32_t out) {
    Circuit c(width);
    c.append(Gate::ccx(pos(b0), pos(b1), out), "AND");
    return c;
}

std::vector<std::string> block_names() {
    return {"comparator", "subtractor",        "abs-subtractor", "copy",
            "cycle-shift", "threshold-compare", "binarization",   "and"};
}

std::pair<BlockSpec, Circuit> describe_block(const std::string& name, int q, int m) {
    if (q < 1 || q > 8) {
        throw std::invalid_argument("q must be in [1, 8]");
    }
    if (m < 1 || m > 16) {
        throw std::invalid_argument("m must be in [1, 16]");
    }
    const uint32_t uq = static_cast<uint32_t>(q);
    const WireRange a{0, uq};
    const WireRange b{uq, uq};
    const WireRange anc{2 * uq, 3};
    const WireRange y{2 * uq + 3, 2};
    const uint32_t two_reg_width = 2 * uq + 5;
    const WireRange c1{0, uq};
    const WireRange anc1{uq, 3};
    const WireRange y1{uq + 3, 2};
    const uint32_t one_reg_width = uq + 5;

    if (name == "comparator" || name == "QC") {
        BlockSpec spec{"comparator",
                       {{"a", a}, {"b", b}},
                       {{"anc", anc}},
                       "y1y0 <- 10 if a>b, 01 if a<b, 00 if a=b; a, b preserved; anc restored to 0"};
        spec.inputs.push_back({"y", y});
        return {spec, build_comparator(two_reg_width, a, b, anc, y)};
    }
    if (name == "subtractor" || name == "QS") {
        BlockSpec spec{"subtractor",
                       {{"a", a}, {"b", b}},
                       {{"anc", anc}},
                       "b <- a - b (mod 2^q, intended for a >= b); a preserved; anc restored to 0"};
        return {spec, build_subtractor(2 * uq + 3, a, b, anc)};
    }
    if (name == "abs-subtractor" || name == "QAS") {
        BlockSpec spec{"abs-subtractor",
                       {{"a", a}, {"b", b}, {"y", y}},
                       {{"anc", anc}},
                       "b <- |a - b|; a <- max(a, b); anc and y restored to 0"};
        return {spec, build_abs_subtractor(two_reg_width, a, b, anc, y)};
    }
    if (name == "copy") {
        BlockSpec spec{"copy", {{"src", a}, {"dst", b}}, {}, "dst <- src for dst = 0; exactly q CX gates"};
        return {spec, build_copy(2 * uq, a, b)};
    }
    if (name == "cycle-shift" || name == "CT") {
        const WireRange frame{0, static_cast<uint32_t>(m)};
        BlockSpec spec{"cycle-shift",
                       {{"frame", frame}},
                       {},
                       "frame index j -> (j+1) mod 2^m (direction +1) or (j-1) mod 2^m (direction -1)"};
        return {spec, build_cycle_shift(frame.count, frame, +1)};
    }
    if (name == "threshold-compare") {
        BlockSpec spec{"threshold-compare",
                       {{"c", c1}, {"y", y1}},
                       {{"anc", anc1}},
                       "y1y0 <- compare(c, T) for a constant T baked into control polarities; c preserved"};
        return {spec, build_threshold_compare(one_reg_width, c1, 1, anc1, y1)};
    }
    if (name == "binarization" || name == "QB") {
        BlockSpec spec{"binarization",
                       {{"c", c1}, {"y", y1}},
                       {{"anc", anc1}},
                       "c0 <- (c >= T); higher c wires hold deterministic garbage; anc and y restored to 0"};
        return {spec, build_binarization(one_reg_width, c1, 1, anc1, y1)};
    }
    if (name == "and" || name == "AND") {
        BlockSpec spec{"and",
                       {{"b0", {0, 1}}, {"b1", {1, 1}}, {"out", {2, 1}}},
                       {},
                       "out <- b0 AND b1 for out = 0; one CCX"};
        return {spec, build_and(3, 0, 1, 2)};
    }
    throw std::invalid_argument("unknown block '" + name + "'");
}

}  // namespace qvseg
