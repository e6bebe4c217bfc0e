#include "rpga/fabric.hpp"

#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "reference_tables.hpp"
#include "rpga/error.hpp"
#include "rpga/simulator.hpp"

using namespace rpga;
using rpga::testing::popcount;
using rpga::testing::split_row;
using rpga::testing::word_of;

namespace {

const Realization kBoth[] = {Realization::Kerntopf, Realization::Picton};

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::FormatError;
}

SymmetryReport report_for(std::size_t n, std::vector<std::set<unsigned>> sets) {
  SymmetryReport r;
  r.input_count = n;
  for (std::size_t i = 0; i < n; ++i) r.input_names.push_back("x" + std::to_string(i + 1));
  for (std::size_t j = 0; j < sets.size(); ++j) {
    OutputSymmetry o;
    o.name = "O" + std::to_string(j + 1);
    o.symmetric = true;
    o.index_set = sets[j];
    std::vector<bool> values(n + 1, false);
    for (auto k : sets[j]) values[k] = true;
    o.value_vector = values;
    r.outputs.push_back(o);
  }
  return r;
}

}  // namespace

TEST(MaxMinTest, BothRealizationsAreOrAnd) {
  for (auto r : kBoth) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const auto m = maxmin_eval(r, a, b);
        EXPECT_EQ(m.max, a || b);
        EXPECT_EQ(m.min, a && b);
        EXPECT_EQ(m.garbage.size(), r == Realization::Kerntopf ? 1u : 2u);
      }
    }
  }
}

TEST(MaxMinTest, PictonPairMatchesPrintedTable) {
  for (const auto& row : rpga::testing::picton_maxmin_rows()) {
    const auto [in, out] = split_row(row);
    const auto m = maxmin_eval(Realization::Picton, in[0] == '1', in[1] == '1');
    EXPECT_EQ(m.max, out[0] == '1') << row;
    EXPECT_EQ(m.min, out[1] == '1') << row;
  }
}

TEST(FabricTest, Shape) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto f = Fabric::build(n, Realization::Kerntopf);
    EXPECT_EQ(f.nodes().size(), n * (n - 1) / 2);
    EXPECT_EQ(f.level_count(), n >= 2 ? 2 * n - 3 : 0u);
    EXPECT_EQ(f.threshold_taps().size(), n);
    EXPECT_EQ(f.single_index_taps().size(), n);
  }
  EXPECT_EQ(code_of([] { Fabric::build(0, Realization::Kerntopf); }), ErrorCode::BadWidth);
  EXPECT_EQ(code_of([] { Fabric::build(13, Realization::Picton); }), ErrorCode::BadWidth);
  EXPECT_NO_THROW(Fabric::build(12, Realization::Kerntopf));
}

TEST(FabricTest, NodesAreSingleAssignment) {
  const auto f = Fabric::build(6, Realization::Picton);
  std::vector<int> defined(f.wire_count(), 0);
  for (std::size_t i = 0; i < 6; ++i) defined[i]++;
  for (const auto& node : f.nodes()) {
    EXPECT_TRUE(defined[node.in_a]);
    EXPECT_TRUE(defined[node.in_b]);
    defined[node.max_out]++;
    defined[node.min_out]++;
    for (auto g : node.garbage) defined[g]++;
  }
  for (std::size_t w = 0; w < f.wire_count(); ++w)
    if (defined[w]) EXPECT_EQ(defined[w], 1) << w;
}

TEST(FabricTest, ThresholdAndOneHotInvariants) {
  for (auto r : kBoth) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto f = Fabric::build(n, r);
      for (Word x = 0; x < (Word{1} << n); ++x) {
        const auto input = to_bits(x, n);
        const auto t = f.thresholds(input);
        const auto s = f.single_indices(input);
        ASSERT_EQ(t.size(), n);
        ASSERT_EQ(s.size(), n + 1);
        for (std::size_t k = 1; k <= n; ++k) EXPECT_EQ(t[k - 1], popcount(x) >= k);
        for (std::size_t k = 1; k < n; ++k) EXPECT_GE(t[k - 1], t[k]);
        EXPECT_EQ(std::accumulate(s.begin(), s.end(), 0), 1);
        EXPECT_EQ(s[popcount(x)], 1);
      }
    }
  }
}

TEST(FabricTest, EveryIndexSetMatchesWeightOracle) {
  for (auto r : kBoth) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto f = Fabric::build(n, r);
      for (unsigned mask = 1; mask < (1U << (n + 1)); ++mask) {
        std::set<unsigned> k;
        for (unsigned i = 0; i <= n; ++i)
          if (mask & (1U << i)) k.insert(i);
        const Configuration config(f, {{"O1", k}});
        for (Word x = 0; x < (Word{1} << n); ++x) {
          const auto result = fabric_eval(config, to_bits(x, n));
          ASSERT_EQ(result.outputs.size(), 1u);
          EXPECT_EQ(result.outputs[0].second, rpga::testing::weight_in(k, x));
        }
      }
    }
  }
}

TEST(FabricTest, ResourceAccounting) {
  for (std::size_t n = 1; n <= 8; ++n) {
    const auto k = Configuration(Fabric::build(n, Realization::Kerntopf), {}).resources();
    const auto p = Configuration(Fabric::build(n, Realization::Picton), {}).resources();
    EXPECT_EQ(k.nodes, n * (n - 1) / 2);
    EXPECT_EQ(k.node_constants, n * (n - 1) / 2);
    EXPECT_EQ(k.node_garbage, n * (n - 1) / 2);
    EXPECT_EQ(p.node_constants, 2 * k.node_constants);
    EXPECT_EQ(p.node_garbage, 2 * k.node_garbage);
  }
}

TEST(FabricTest, CopyAndXorCounts) {
  const auto f = Fabric::build(3, Realization::Kerntopf);
  const Configuration config(f, {{"O1", {1, 3}}, {"O2", {2, 3}}});
  const auto r = config.resources();
  EXPECT_EQ(r.copy_gates, 2u);
  EXPECT_EQ(r.feynman_gates, 2u + 2u);  // two single-index gates, two extra XORs
  EXPECT_EQ(r.not_gates, 0u);
  EXPECT_FALSE(r.uses_index_zero);
  EXPECT_EQ(r.constants, 3u + 2u);
  const Configuration zero(f, {{"Z", {0}}});
  EXPECT_TRUE(zero.resources().uses_index_zero);
  EXPECT_EQ(zero.resources().not_gates, 1u);
  EXPECT_EQ(zero.resources().copy_gates, 2u);
}

TEST(FabricTest, NetlistIsReversibleAndCleanOnConstants) {
  const auto f = Fabric::build(3, Realization::Picton);
  const Configuration config(f, {{"O1", {0, 2}}});
  const auto& net = config.netlist();
  EXPECT_TRUE(check_bijective(net).bijective);
  const auto table = project(full_table(net), Roles::of(net));
  EXPECT_EQ(table.input_count(), 3u);
  ASSERT_EQ(table.output_count(), 1u);
  for (Word x = 0; x < 8; ++x) EXPECT_EQ(table.output_bit(x, 0), rpga::testing::weight_in({0, 2}, x));
}

TEST(FabricTest, AdderConfiguration) {
  const auto f = Fabric::build(3, Realization::Kerntopf);
  const auto config = configure(f, report_for(3, {{1, 3}, {2, 3}}));
  ASSERT_EQ(config.bindings().size(), 2u);
  EXPECT_EQ(config.bindings()[0].name, "O1");
  const auto& rows = rpga::testing::adder_rows();
  for (Word x = 0; x < 8; ++x) {
    const auto out = word_of(split_row(rows[x]).second);
    const auto result = fabric_eval(config, to_bits(x, 3));
    EXPECT_EQ(result.outputs[0].second, bool(out & 2));
    EXPECT_EQ(result.outputs[1].second, bool(out & 1));
  }
  const auto result = fabric_eval(config, Bits{1, 0, 0});
  EXPECT_EQ(result.outputs[0], (std::pair<std::string, bool>{"O1", true}));
  EXPECT_EQ(result.outputs[1], (std::pair<std::string, bool>{"O2", false}));
  EXPECT_EQ(result.garbage.size(), 3u);
}

TEST(FabricTest, ConfigureErrors) {
  const auto f = Fabric::build(3, Realization::Kerntopf);
  EXPECT_EQ(code_of([&] { configure(f, report_for(4, {{1}})); }), ErrorCode::ConfigMismatch);
  auto r = report_for(3, {{1}});
  r.outputs[0].symmetric = false;
  r.outputs[0].value_vector.reset();
  r.outputs[0].witness = Witness{1, true, 2, false};
  EXPECT_EQ(code_of([&] { configure(f, r); }), ErrorCode::NotSymmetric);
  EXPECT_EQ(code_of([&] { Configuration(f, {{"O", {4}}}); }), ErrorCode::WidthError);
  EXPECT_EQ(code_of([&] { fabric_eval(Configuration(f, {}), Bits{1, 0}); }), ErrorCode::WidthError);
}

TEST(FabricTest, ActiveNodesAndTaps) {
  const auto f = Fabric::build(4, Realization::Kerntopf);
  const Configuration none(f, {});
  for (bool a : none.active_nodes()) EXPECT_FALSE(a);
  const Configuration top(f, {{"O1", {4}}});
  const auto active = top.active_nodes();
  EXPECT_EQ(active.size(), f.nodes().size());
  EXPECT_GT(std::count(active.begin(), active.end(), true), 0);
  const Configuration all(f, {{"O1", {1, 2, 3, 4}}});
  for (bool a : all.active_nodes()) EXPECT_TRUE(a);
  EXPECT_EQ(top.bound_taps(), (std::vector<bool>{false, false, false, false, true}));
}

TEST(FabricTest, Addressing) {
  EXPECT_EQ(addressable_outputs(3, false), 7u);
  EXPECT_EQ(addressable_outputs(3, true), 15u);
  EXPECT_EQ(output_address({1, 3}), 0b1010u);
  EXPECT_EQ(to_string(Realization::Picton), "picton");
  EXPECT_EQ(parse_realization("kerntopf"), Realization::Kerntopf);
  EXPECT_THROW(parse_realization("luts"), FormatError);
}
