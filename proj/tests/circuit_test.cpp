#include "rpga/circuit.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "rpga/error.hpp"
#include "rpga/gate.hpp"
#include "rpga/simulator.hpp"

using namespace rpga;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::FormatError;
}

Circuit adder() {
  Circuit c(4);
  c.place(0, builtin("toffoli"), {0, 1, 3});
  c.place(1, builtin("feynman"), {0, 1});
  c.place(2, builtin("toffoli"), {1, 2, 3});
  c.place(3, builtin("feynman"), {1, 2});
  c.set_roles({{3, false}}, {0, 1});
  return c;
}

/// Random circuit over the builtin library with one gate per slot.
Circuit random_circuit(std::mt19937_64& rng, std::size_t lines, std::size_t gates) {
  Circuit c(lines);
  const auto& names = builtin_names();
  std::size_t slot = 0;
  while (c.placements().size() < gates) {
    const auto gate = builtin(names[rng() % names.size()]);
    if (gate->arity() > lines) continue;
    std::vector<std::size_t> all(lines);
    for (std::size_t i = 0; i < lines; ++i) all[i] = i;
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(gate->arity());
    c.place(slot++, gate, all);
  }
  return c;
}

}  // namespace

TEST(CircuitTest, Construction) {
  Circuit c(3);
  EXPECT_EQ(c.width(), 3u);
  EXPECT_EQ(c.depth(), 0u);
  EXPECT_EQ(c.free_input_count(), 3u);
  EXPECT_EQ(c.primary_output_count(), 3u);
  EXPECT_EQ(code_of([] { Circuit(0); }), ErrorCode::BadWidth);
  EXPECT_EQ(code_of([] { Circuit(17); }), ErrorCode::BadWidth);
  EXPECT_NO_THROW(Circuit(20, 20));
}

TEST(CircuitTest, PlacementErrors) {
  Circuit c(3);
  EXPECT_EQ(code_of([&] { c.place(0, builtin("feynman"), {0, 3}); }), ErrorCode::PinOutOfRange);
  EXPECT_EQ(code_of([&] { c.place(0, builtin("feynman"), {1, 1}); }), ErrorCode::PinClash);
  EXPECT_EQ(code_of([&] { c.place(0, builtin("feynman"), {0}); }), ErrorCode::WidthError);
  c.place(0, builtin("feynman"), {0, 1});
  EXPECT_EQ(code_of([&] { c.place(0, builtin("not"), {1}); }), ErrorCode::SlotConflict);
  EXPECT_NO_THROW(c.place(0, builtin("not"), {2}));
  EXPECT_EQ(c.placements().size(), 2u);
  EXPECT_EQ(c.depth(), 1u);
}

TEST(CircuitTest, FailedPlacementLeavesCircuitUnchanged) {
  Circuit c = adder();
  const Circuit before = c;
  EXPECT_THROW(c.place(2, builtin("not"), {2}), Error);
  EXPECT_EQ(c, before);
}

TEST(CircuitTest, SlotOrderAndRemoval) {
  Circuit c(3);
  c.place(5, builtin("not"), {0});
  c.place(1, builtin("not"), {1});
  c.place(5, builtin("not"), {2});
  EXPECT_EQ(c.slots(), (std::vector<std::size_t>{1, 5}));
  EXPECT_EQ(c.next_free_slot(), 6u);
  EXPECT_EQ(c.placements()[0].slot, 1u);
  EXPECT_EQ(c.placements()[1].pins, (std::vector<std::size_t>{0}));
  c.remove(5, 0);
  EXPECT_EQ(c.placements().size(), 2u);
  EXPECT_EQ(code_of([&] { c.remove(5, 0); }), ErrorCode::NoSuchPlacement);
}

TEST(CircuitTest, ResizeDropsTouchingPlacements) {
  Circuit c = adder();
  c.resize(3);
  EXPECT_EQ(c.width(), 3u);
  EXPECT_EQ(c.placements().size(), 2u);
  EXPECT_NO_THROW(c.validate());
}

TEST(CircuitTest, Roles) {
  const Circuit c = adder();
  EXPECT_EQ(c.constant_count(), 1u);
  EXPECT_EQ(c.garbage_count(), 2u);
  EXPECT_EQ(c.free_input_count(), 3u);
  EXPECT_EQ(c.primary_output_count(), 2u);
  Circuit d(2);
  EXPECT_EQ(code_of([&] { d.set_roles({{2, true}}, {}); }), ErrorCode::PinOutOfRange);
}

TEST(SimulatorTest, AdderTrace) {
  const Circuit c = adder();
  const auto t = trace(c, Bits{1, 0, 1, 0});
  ASSERT_EQ(t.snapshots.size(), 5u);
  EXPECT_FALSE(t.snapshots[0].slot);
  EXPECT_EQ(t.snapshots[0].values, (Bits{1, 0, 1, 0}));
  EXPECT_EQ(t.snapshots[2].values, (Bits{1, 1, 1, 0}));
  EXPECT_EQ(t.final_values(), (Bits{1, 1, 0, 1}));
  EXPECT_EQ(eval(c, Bits{1, 0, 1, 0}), (Bits{1, 1, 0, 1}));
}

TEST(SimulatorTest, WidthMismatch) {
  const Circuit c = adder();
  EXPECT_EQ(code_of([&] { eval(c, Bits{1, 0}); }), ErrorCode::WidthError);
  Circuit wide(17, 17);
  EXPECT_EQ(code_of([&] { full_table(wide); }), ErrorCode::TooWide);
  EXPECT_NO_THROW(full_table(wide, 17));
}

TEST(SimulatorTest, EmptyCircuitIsIdentity) {
  Circuit c(3);
  const auto t = full_table(c);
  for (Word x = 0; x < 8; ++x) EXPECT_EQ(t.outputs[x], x);
}

TEST(SimulatorTest, RandomCircuitsMatchReferenceAndAreBijective) {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t lines = 1 + rng() % 7;
    const Circuit c = random_circuit(rng, lines, rng() % 12);
    const auto table = full_table(c);
    for (Word x = 0; x < table.rows(); ++x) {
      ASSERT_EQ(table.outputs[x], rpga::testing::simulate(c, x));
      ASSERT_EQ(eval(c, x), table.outputs[x]);
    }
    const auto report = check_bijective(c);
    EXPECT_TRUE(report.bijective);
    EXPECT_FALSE(report.collision);
  }
}

TEST(SimulatorTest, ReversedSelfInverseCircuitInverts) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> self_inverse = {"not", "feynman", "toffoli", "fredkin", "swap", "f2g"};
  for (int iter = 0; iter < 50; ++iter) {
    Circuit c(5);
    for (std::size_t s = 0; s < 10; ++s) {
      const auto gate = builtin(self_inverse[rng() % self_inverse.size()]);
      std::vector<std::size_t> pins = {0, 1, 2, 3, 4};
      std::shuffle(pins.begin(), pins.end(), rng);
      pins.resize(gate->arity());
      c.place(s, gate, pins);
    }
    const Circuit r = reversed(c);
    for (Word x = 0; x < 32; ++x) EXPECT_EQ(eval(r, eval(c, x)), x);
  }
}

TEST(SimulatorTest, TraceHasOneSnapshotPerSlot) {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 30; ++iter) {
    const Circuit c = random_circuit(rng, 4, rng() % 8);
    const auto t = trace(c, to_bits(rng() % 16, 4));
    EXPECT_EQ(t.snapshots.size(), c.depth() + 1);
  }
}
