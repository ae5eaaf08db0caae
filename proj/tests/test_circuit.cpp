#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "qvseg/circuit.hpp"

using namespace qvseg;
using test::run_basis;

TEST_CASE("circuit construction") {
    Circuit c(18);
    CHECK(c.width() == 18);
    CHECK(c.size() == 0);
    CHECK_FALSE(c.frozen());

    Circuit one(1);
    CHECK(one.width() == 1);

    CHECK_THROWS_AS(Circuit(0), std::invalid_argument);
}

TEST_CASE("append validates gates") {
    Circuit c(2);
    c.append(Gate::x(0));
    CHECK(c.size() == 1);

    Circuit four(4);
    CHECK_THROWS_AS(four.append(Gate::cx(pos(5), 0)), std::invalid_argument);
    CHECK_THROWS_AS(four.append(Gate::ccx(pos(1), pos(2), 2)), std::invalid_argument);
    CHECK_THROWS_AS(four.append(Gate::swap(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(four.append(Gate{GateKind::RESET, {0}, {pos(1)}}), std::invalid_argument);
    CHECK_THROWS_AS(four.append(Gate{GateKind::X, {0, 1}, {}}), std::invalid_argument);
}

TEST_CASE("freeze makes the circuit immutable") {
    Circuit c(2);
    c.append(Gate::x(0));
    c.freeze();
    CHECK(c.frozen());
    CHECK_THROWS_AS(c.append(Gate::x(1)), std::invalid_argument);

    Circuit other(2);
    other.append(Gate::x(1));
    CHECK_THROWS_AS(c.extend(other), std::invalid_argument);
}

TEST_CASE("extend requires matching width and can relabel") {
    Circuit fragment(3);
    fragment.append(Gate::x(0), "QC");
    fragment.append(Gate::cx(pos(0), 1), "QC");

    Circuit c(3);
    c.extend(fragment, "QAS");
    CHECK(c.size() == 2);
    CHECK(c.block_of(0) == "QAS");
    CHECK(c.block_of(1) == "QAS");

    Circuit narrow(2);
    CHECK_THROWS_AS(narrow.extend(fragment), std::invalid_argument);
}

TEST_CASE("mcx factory canonicalizes the kind") {
    CHECK(Gate::mcx({pos(0)}, 1).kind == GateKind::CX);
    CHECK(Gate::mcx({pos(0), neg(1)}, 2).kind == GateKind::CCX);
    CHECK(Gate::mcx({pos(0), pos(1), pos(2)}, 3).kind == GateKind::MCX);
}

TEST_CASE("debug dump format is stable") {
    Circuit c(3);
    c.append(Gate::x(0), "init");
    c.append(Gate::ccx(pos(0), neg(1), 2), "QAS");
    c.append(Gate::reset(1));
    CHECK(c.debug_dump() ==
          "X targets=[0] controls=[] block=init\n"
          "CCX targets=[2] controls=[(0,+),(1,-)] block=QAS\n"
          "RESET targets=[1] controls=[] block=\n");
}

TEST_CASE("mirror inverse restores every basis state") {
    std::mt19937_64 rng(0xA11CE);
    for (uint32_t width = 1; width <= 10; ++width) {
        Circuit c(width);
        for (int g = 0; g < 30; ++g) {
            const uint32_t t = static_cast<uint32_t>(rng() % width);
            switch (rng() % 4) {
                case 0:
                    c.append(Gate::x(t));
                    break;
                case 1: {
                    uint32_t ctrl = static_cast<uint32_t>(rng() % width);
                    if (ctrl != t) {
                        c.append(Gate::cx({ctrl, (rng() & 1) != 0}, t));
                    }
                    break;
                }
                case 2: {
                    uint32_t o = static_cast<uint32_t>(rng() % width);
                    if (o != t) {
                        c.append(Gate::swap(t, o));
                    }
                    break;
                }
                default: {
                    if (width >= 3) {
                        uint32_t c0 = static_cast<uint32_t>(rng() % width);
                        uint32_t c1 = static_cast<uint32_t>(rng() % width);
                        if (c0 != c1 && c0 != t && c1 != t) {
                            c.append(Gate::ccx({c0, (rng() & 1) != 0}, {c1, (rng() & 1) != 0}, t));
                        }
                    }
                    break;
                }
            }
        }
        Circuit round_trip(width);
        round_trip.extend(c);
        round_trip.extend(c.mirror_inverse());
        for (uint64_t basis = 0; basis < (uint64_t{1} << width); ++basis) {
            CHECK(run_basis(round_trip, basis) == basis);
        }
    }
}

TEST_CASE("mirror inverse rejects resets") {
    Circuit c(2);
    c.append(Gate::reset(0));
    CHECK_THROWS_AS(c.mirror_inverse(), std::invalid_argument);
}
