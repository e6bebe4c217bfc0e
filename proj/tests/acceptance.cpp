// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "reference_tables.hpp"
#include "rpga/bits.hpp"
#include "rpga/fabric.hpp"
#include "rpga/io.hpp"
#include "rpga/session.hpp"
#include "rpga/simulator.hpp"
#include "rpga/symmetry.hpp"
#include "rpga/truth_table.hpp"

using namespace rpga;
using rpga::testing::split_row;
using rpga::testing::word_of;

namespace {

struct Failure {
  std::string message;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw Failure{message};
}

struct Criterion {
  std::string name;
  double budget_ms;  // 0 = unbounded
  std::function<std::string()> run;  // returns a short detail on success
};

const Realization kBoth[] = {Realization::Kerntopf, Realization::Picton};

std::set<unsigned> mask_to_set(unsigned mask, std::size_t n) {
  std::set<unsigned> k;
  for (unsigned i = 0; i <= n; ++i)
    if (mask & (1U << i)) k.insert(i);
  return k;
}

IrreversibleTruthTable adder_from_benchmark() {
  const auto circuit = parse_real(rpga::testing::read_data("rd32.real"));
  return project(full_table(circuit), Roles::of(circuit));
}

void require_adder_rows(const std::function<std::pair<bool, bool>(Word)>& outputs, const std::string& what) {
  const auto& rows = rpga::testing::adder_rows();
  require(rows.size() == 8, "adder table must have 8 rows");
  for (Word x = 0; x < 8; ++x) {
    const auto [in, out] = split_row(rows[x]);
    require(word_of(in) == x, "adder rows out of order");
    const auto [o1, o2] = outputs(x);
    require(o1 == (out[0] == '1') && o2 == (out[1] == '1'),
            what + " differs at input " + in + ": got " + std::to_string(o1) + std::to_string(o2) + ", want " + out);
  }
}

std::string gate_tables() {
  std::size_t rows = 0;
  std::set<std::string> covered;
  for (const auto& table : rpga::testing::gate_tables()) {
    const auto gate = builtin(table.gate);
    covered.insert(table.gate);
    require(table.rows.size() == std::size_t{1} << gate->arity(), table.id + ": incomplete table");
    for (const auto& row : table.rows) {
      const auto [in, out] = split_row(row);
      require(gate->apply(word_of(in)) == word_of(out), table.id + " row " + in);
      require(gate->apply_inverse(word_of(out)) == word_of(in), table.id + " inverse row " + out);
      ++rows;
    }
  }
  for (const auto& table : rpga::testing::standard_tables()) {
    const auto gate = builtin(table.gate);
    covered.insert(table.gate);
    for (const auto& row : table.rows) {
      const auto [in, out] = split_row(row);
      require(gate->apply(word_of(in)) == word_of(out), table.id + " row " + in);
    }
  }
  for (const auto& name : builtin_names()) require(covered.count(name) > 0, "no table for " + name);
  require(builtin_names().size() == 11, "expected 11 builtin gates");
  require(rows == 88, "checked " + std::to_string(rows) + " rows, expected 88");
  return std::to_string(rows) + " rows, " + std::to_string(covered.size()) + " gates";
}

std::string kerntopf_algebra() {
  const auto g = builtin("kerntopf");
  for (Word x = 0; x < 8; ++x) {
    const bool a = x & 4, b = x & 2, c = x & 1;
    const bool p = 1 ^ a ^ b ^ c ^ (a & b);
    const bool q = 1 ^ (a & b) ^ b ^ c ^ (b & c);
    const bool r = 1 ^ a ^ b ^ (a & c);
    require(g->apply(x) == ((Word(p) << 2) | (Word(q) << 1) | Word(r)), "XOR form differs at " + format_word(x, 3));
  }
  std::set<std::string> distinct;
  for (const auto& row : rpga::testing::kerntopf_maxmin_rows()) {
    distinct.insert(row);
    const auto [in, out] = split_row(row);
    require(in[2] == '1', "restriction row without C=1: " + row);
    require(g->apply(word_of(in)) == word_of(out), "restriction row " + row);
    const bool a = in[0] == '1', b = in[1] == '1';
    require((out[0] == '1') == (a || b) && (out[1] == '1') == (a && b), "not MAX/MIN: " + row);
    const auto m = maxmin_eval(Realization::Kerntopf, a, b);
    require(m.max == (a || b) && m.min == (a && b), "fabric node differs from gate: " + row);
  }
  require(distinct.size() == 4, "restriction table must have 4 distinct rows");
  return "8 inputs, 4 restriction rows";
}

std::string benchmark_reproduction() {
  const auto table = adder_from_benchmark();
  require(table.input_count() == 3 && table.output_count() == 2, "projected shape is not 3 -> 2");
  require_adder_rows([&](Word x) { return std::pair{table.output_bit(x, 0), table.output_bit(x, 1)}; },
                     "projected table");
  const auto rcir = parse_rcir(rpga::testing::read_data("rd32.rcir"));
  require(project(full_table(rcir), Roles::of(rcir)).outputs() == table.outputs(), "rcir and real disagree");
  return "8/8 rows bit-exact";
}

std::string symmetry_verdicts() {
  const auto adder = analyze(parse_rtab(rpga::testing::read_data("adder.rtab")));
  require(adder.outputs.size() == 2, "adder report must have 2 outputs");
  require(adder.outputs[0].name == "out1" && adder.outputs[0].index_set == std::set<unsigned>{1, 3},
          "out1 is not S{1,3}");
  require(adder.outputs[1].name == "out2" && adder.outputs[1].index_set == std::set<unsigned>{2, 3},
          "out2 is not S{2,3}");
  require(adder.all_symmetric(), "adder verdict must be symmetric");

  const auto asym_table = parse_rtab(rpga::testing::read_data("asym.rtab"));
  const auto asym = analyze(asym_table);
  require(!asym.all_symmetric(), "asymmetric table reported symmetric");
  const auto& w = asym.outputs[0].witness;
  require(!asym.outputs[0].symmetric && w.has_value(), "out1 of the asymmetric table has no witness");
  require(rpga::testing::popcount(w->first_row) == 1 && rpga::testing::popcount(w->second_row) == 1,
          "witness rows are not of weight 1");
  require(w->first_value != w->second_value, "witness values do not differ");
  require(asym_table.output_bit(w->first_row, 0) == w->first_value &&
              asym_table.output_bit(w->second_row, 0) == w->second_value,
          "witness disagrees with the table");

  std::mt19937_64 rng(1234);
  std::size_t symmetric = 0, total = 0;
  for (int iter = 0; iter < 500; ++iter) {
    const std::size_t n = 1 + rng() % 6;
    const auto t = rpga::testing::random_table(rng, n, 1 + rng() % 2, true);
    const auto report = analyze(t);
    for (std::size_t col = 0; col < t.output_count(); ++col) {
      const bool expected = rpga::testing::symmetric_by_transpositions(t, col);
      require(report.outputs[col].symmetric == expected, "verdict differs from oracle on random table " +
                                                             std::to_string(iter));
      if (expected)
        require(report.outputs[col].index_set == rpga::testing::ones_by_weight(t, col),
                "index set differs from oracle on random table " + std::to_string(iter));
      symmetric += expected;
      ++total;
    }
  }
  return "500 random tables, " + std::to_string(symmetric) + "/" + std::to_string(total) + " outputs symmetric";
}

std::string end_to_end_session() {
  const auto report = analyze(adder_from_benchmark());
  auto fabric = std::make_shared<const Fabric>(Fabric::build(3, Realization::Kerntopf));
  auto config = std::make_shared<const Configuration>(configure(*fabric, report));
  Session session(fabric);
  session.load_config(config);
  const auto model = session.apply_input(Bits{1, 0, 0});
  require(model.outputs.size() == 2, "session must show 2 outputs");
  require(model.outputs[0].state == OutputState::On, "O1 is not on for 100");
  require(model.outputs[1].state == OutputState::Off, "O2 is not off for 100");
  require_adder_rows(
      [&](Word x) {
        const auto m = session.apply_input(x);
        return std::pair{m.outputs[0].state == OutputState::On, m.outputs[1].state == OutputState::On};
      },
      "session outputs");
  require_adder_rows(
      [&](Word x) {
        const auto r = fabric_eval(*config, to_bits(x, 3));
        return std::pair{r.outputs[0].second, r.outputs[1].second};
      },
      "fabric outputs");
  return "100 -> " + model.outputs[0].name + "=1 " + model.outputs[1].name + "=0, 8/8 rows";
}

std::string fabric_property() {
  std::size_t configs = 0, evals = 0;
  for (auto r : kBoth) {
    for (std::size_t n = 1; n <= 5; ++n) {
      const auto f = Fabric::build(n, r);
      for (unsigned mask = 0; mask < (1U << (n + 1)); ++mask) {
        const auto k = mask_to_set(mask, n);
        const Configuration config(f, {{"O1", k}});
        ++configs;
        for (Word x = 0; x < (Word{1} << n); ++x, ++evals) {
          const auto result = fabric_eval(config, to_bits(x, n));
          require(result.outputs.size() == 1 && result.outputs[0].second == rpga::testing::weight_in(k, x),
                  std::string(to_string(r)) + " n=" + std::to_string(n) + " K=" + index_set_label(k) +
                      " input " + format_word(x, n));
        }
      }
    }
  }
  return std::to_string(configs) + " index sets, " + std::to_string(evals) + " evaluations";
}

std::string threshold_invariants() {
  std::size_t checked = 0;
  for (auto r : kBoth) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto f = Fabric::build(n, r);
      for (Word x = 0; x < (Word{1} << n); ++x, ++checked) {
        const auto input = to_bits(x, n);
        const auto t = f.thresholds(input);
        const auto s = f.single_indices(input);
        const std::string where = std::string(to_string(r)) + " input " + format_word(x, n);
        require(t.size() == n && s.size() == n + 1, "tap count at " + where);
        for (std::size_t k = 1; k <= n; ++k)
          require(bool(t[k - 1]) == (rpga::testing::popcount(x) >= k), "T" + std::to_string(k) + " at " + where);
        for (std::size_t k = 1; k < n; ++k) require(t[k - 1] >= t[k], "thresholds not sorted at " + where);
        require(std::accumulate(s.begin(), s.end(), 0) == 1, "single-index sum is not 1 at " + where);
      }
    }
  }
  return std::to_string(checked) + " inputs";
}

std::string resource_accounting() {
  for (std::size_t n = 1; n <= 12; ++n) {
    const auto k = Configuration(Fabric::build(n, Realization::Kerntopf), {}).resources();
    const auto p = Configuration(Fabric::build(n, Realization::Picton), {}).resources();
    const auto pairs = n * (n - 1) / 2;
    const auto at = " at n=" + std::to_string(n);
    require(k.node_constants == pairs && k.node_garbage == pairs, "kerntopf counts" + at);
    require(p.node_constants == 2 * pairs && p.node_garbage == 2 * pairs, "picton counts" + at);
  }
  return "n = 1..12";
}

std::string format_round_trips() {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 200; ++iter) {
    const auto c = rpga::testing::random_circuit(rng);
    const auto text = emit_rcir(c);
    require(parse_rcir(text) == c && emit_rcir(parse_rcir(text)) == text, "rcir round trip " + std::to_string(iter));
  }
  rng.seed(77);
  for (int iter = 0; iter < 200; ++iter) {
    const std::size_t n = rng() % 7, m = 1 + rng() % 4;
    const auto t = rpga::testing::random_table(rng, n, m, false);
    const auto text = emit_rtab(t);
    require(parse_rtab(text) == t && emit_rtab(parse_rtab(text)) == text, "rtab round trip " + std::to_string(iter));
  }
  rng.seed(4242);
  for (int iter = 0; iter < 200; ++iter) {
    const auto config = rpga::testing::random_configuration(rng);
    const auto text = emit_fabric_doc(config);
    require(parse_fabric_doc(text) == config && emit_fabric_doc(parse_fabric_doc(text)) == text,
            "fabric doc round trip " + std::to_string(iter));
  }
  const auto parsed = parse_real(rpga::testing::read_data("rd32.real"));
  const auto hand = rpga::testing::hand_built_adder();
  require(parsed.placements().size() == hand.placements().size(), "benchmark gate count");
  for (std::size_t i = 0; i < hand.placements().size(); ++i) {
    require(*parsed.placements()[i].gate == *hand.placements()[i].gate, "benchmark gate " + std::to_string(i));
    require(parsed.placements()[i].pins == hand.placements()[i].pins, "benchmark pins " + std::to_string(i));
  }
  for (std::size_t l = 0; l < hand.width(); ++l) {
    require(parsed.lines()[l].input == hand.lines()[l].input, "benchmark constant on line " + std::to_string(l));
    require(parsed.lines()[l].output.garbage == hand.lines()[l].output.garbage,
            "benchmark garbage on line " + std::to_string(l));
  }
  require(full_table(parsed) == full_table(hand), "benchmark truth table");
  return "3 x 200 artifacts, benchmark matches";
}

std::string session_algebra() {
  std::mt19937_64 rng(99);
  std::size_t steps = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto r : kBoth) {
      auto f = std::make_shared<const Fabric>(Fabric::build(n, r));
      const auto k = mask_to_set(static_cast<unsigned>(rng() % (1U << (n + 1))), n);
      auto config = std::make_shared<const Configuration>(
          *f, std::vector<std::pair<std::string, std::set<unsigned>>>{{"O1", k}, {"O2", {0, static_cast<unsigned>(n)}}});
      Session s(f);
      s.load_config(config);
      const Word size = Word{1} << n;
      auto matches_eval = [&](const RenderModel& m) {
        require(m.input.has_value(), "snapshot without input");
        const auto result = fabric_eval(*config, *m.input);
        require(m.outputs.size() == result.outputs.size(), "snapshot output count");
        for (std::size_t i = 0; i < result.outputs.size(); ++i)
          require((m.outputs[i].state == OutputState::On) == result.outputs[i].second,
                  "snapshot differs from fabric_eval at " + format_bits(*m.input));
        ++steps;
      };
      for (Word start = 0; start < size; ++start) {
        s.apply_input(start);
        require(s.next().cursor == (start + 1) % size, "next");
        require(s.prev().cursor == start, "next then prev");
        require(s.prev().cursor == (start + size - 1) % size, "prev");
        require(s.next().cursor == start, "prev then next");
        matches_eval(s.snapshot());
      }
      s.apply_input(Word{0});
      std::set<Word> forward, backward;
      for (Word i = 0; i < size; ++i) {
        const auto m = s.next();
        forward.insert(*m.cursor);
        matches_eval(m);
      }
      require(forward.size() == size && s.cursor() == Word{0}, "forward cycle");
      for (Word i = 0; i < size; ++i) {
        const auto m = s.prev();
        backward.insert(*m.cursor);
        matches_eval(m);
      }
      require(backward.size() == size && s.cursor() == Word{0}, "backward cycle");
    }
  }
  return std::to_string(steps) + " snapshots";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"gate-table exactness", 1000, gate_tables},
      {"kerntopf algebra", 0, kerntopf_algebra},
      {"benchmark reproduction", 1000, benchmark_reproduction},
      {"symmetry verdicts", 0, symmetry_verdicts},
      {"end-to-end session", 0, end_to_end_session},
      {"fabric correctness property", 10000, fabric_property},
      {"threshold/one-hot invariants", 0, threshold_invariants},
      {"resource accounting", 0, resource_accounting},
      {"format round-trips", 0, format_round_trips},
      {"session algebra", 0, session_algebra},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.message;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.budget_ms > 0 && ms > c.budget_ms) {
      ok = false;
      detail += "; over budget of " + std::to_string(static_cast<int>(c.budget_ms)) + " ms";
    }
    failed += !ok;
    std::printf("%s  %-30s %9.1f ms  %s\n", ok ? "PASS" : "FAIL", c.name.c_str(), ms, detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
