#include "rpga/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "rpga/error.hpp"
#include "rpga/gate.hpp"

namespace rpga {

namespace {

struct Token {
  std::string_view text;
  std::size_t line = 0;
  std::size_t column = 0;
};

using TokenLine = std::vector<Token>;

/// Splits into non-empty lines of whitespace-separated tokens, dropping
/// `#` comments.
std::vector<TokenLine> tokenize(std::string_view text) {
  std::vector<TokenLine> lines;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    TokenLine tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      const std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) tokens.push_back({line.substr(start, i - start), line_no, start + 1});
    }
    if (!tokens.empty()) lines.push_back(std::move(tokens));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void fail(const Token& at, const std::string& message, std::string expected = {}) {
  throw FormatError(at.line, at.column, message, std::move(expected));
}

std::size_t to_count(const Token& token, const char* what) {
  std::size_t value = 0;
  const auto* first = token.text.data();
  const auto* last = first + token.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last)
    fail(token, "expected " + std::string(what) + ", got '" + std::string(token.text) + "'",
         "a non-negative integer");
  return value;
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-';
  });
}

std::string identifier(const Token& token) {
  if (!is_identifier(token.text))
    fail(token, "invalid name '" + std::string(token.text) + "'", "an identifier");
  return std::string(token.text);
}

void expect_arity(const TokenLine& tokens, std::size_t count, const char* usage) {
  if (tokens.size() != count) {
    const Token& at = tokens.size() > count ? tokens[count] : tokens.back();
    fail(at, "wrong number of fields for '" + std::string(tokens[0].text) + "'", usage);
  }
}

/// Re-raises a domain error from circuit editing at the offending token.
template <typename Fn>
void at_token(const Token& token, Fn&& fn) {
  try {
    fn();
  } catch (const FormatError&) {
    throw;
  } catch (const Error& e) {
    fail(token, std::string(to_string(e.code())) + ": " + e.what());
  }
}

}  // namespace

Circuit parse_rcir(std::string_view text, std::size_t line_cap) {
  const auto lines = tokenize(text);
  std::optional<Circuit> circuit;
  std::string name;
  std::map<std::size_t, bool> constants;
  std::set<std::size_t> garbage;

  auto line_index = [&](const Token& token) {
    const auto index = to_count(token, "a line index");
    if (index >= circuit->width())
      fail(token, "line " + std::to_string(index) + " does not exist",
           "0.." + std::to_string(circuit->width() - 1));
    return index;
  };

  for (const auto& tokens : lines) {
    const auto& head = tokens[0];
    const auto keyword = head.text;
    if (keyword == "circuit") {
      expect_arity(tokens, 2, "circuit <name>");
      name = identifier(tokens[1]);
      continue;
    }
    if (keyword == "lines") {
      if (circuit) fail(head, "duplicate 'lines' directive");
      expect_arity(tokens, 2, "lines <n>");
      const auto n = to_count(tokens[1], "a line count");
      at_token(tokens[1], [&] { circuit.emplace(n, line_cap); });
      continue;
    }
    if (!circuit) fail(head, "'" + std::string(keyword) + "' before 'lines'", "lines <n>");

    if (keyword == "label") {
      expect_arity(tokens, 3, "label <line> <name>");
      circuit->set_line_name(line_index(tokens[1]), identifier(tokens[2]));
    } else if (keyword == "output") {
      expect_arity(tokens, 3, "output <line> <name>");
      circuit->set_output_name(line_index(tokens[1]), identifier(tokens[2]));
    } else if (keyword == "constant") {
      expect_arity(tokens, 3, "constant <line> <0|1>");
      const auto line = line_index(tokens[1]);
      if (tokens[2].text != "0" && tokens[2].text != "1")
        fail(tokens[2], "constant value must be 0 or 1", "0 or 1");
      constants[line] = tokens[2].text == "1";
    } else if (keyword == "garbage") {
      expect_arity(tokens, 2, "garbage <line>");
      garbage.insert(line_index(tokens[1]));
    } else if (keyword == "slot") {
      if (tokens.size() < 4) fail(tokens.back(), "incomplete gate placement", "slot <s> <gate> <pins...>");
      const auto slot = to_count(tokens[1], "a slot index");
      GatePtr gate;
      try {
        gate = gate_by_name(tokens[2].text);
      } catch (const Error& e) {
        fail(tokens[2], "unknown gate '" + std::string(tokens[2].text) + "'", "a library gate name");
      }
      std::vector<std::size_t> pins;
      for (std::size_t i = 3; i < tokens.size(); ++i) pins.push_back(line_index(tokens[i]));
      if (pins.size() != gate->arity())
        fail(tokens[2], "gate '" + gate->name() + "' takes " + std::to_string(gate->arity()) +
                            " pins, got " + std::to_string(pins.size()));
      at_token(tokens[2], [&] { circuit->place(slot, gate, pins); });
    } else {
      fail(head, "unknown directive '" + std::string(keyword) + "'",
           "circuit, lines, label, output, constant, garbage or slot");
    }
  }
  if (!circuit) throw FormatError(0, 0, "missing 'lines' directive", "lines <n>");
  circuit->set_roles(constants, garbage);
  circuit->set_name(name);
  return std::move(*circuit);
}

std::string emit_rcir(const Circuit& circuit) {
  std::ostringstream out;
  if (!circuit.name().empty()) out << "circuit " << circuit.name() << '\n';
  out << "lines " << circuit.width() << '\n';
  for (const auto& line : circuit.lines())
    if (!line.name.empty()) out << "label " << line.index << ' ' << line.name << '\n';
  for (const auto& line : circuit.lines())
    if (!line.output.name.empty()) out << "output " << line.index << ' ' << line.output.name << '\n';
  for (const auto& line : circuit.lines())
    if (line.input.constant) out << "constant " << line.index << ' ' << (*line.input.constant ? 1 : 0) << '\n';
  for (const auto& line : circuit.lines())
    if (line.output.garbage) out << "garbage " << line.index << '\n';
  for (const auto& p : circuit.placements()) {
    out << "slot " << p.slot << ' ' << p.gate->name();
    for (auto pin : p.pins) out << ' ' << pin;
    out << '\n';
  }
  return out.str();
}

Circuit parse_real(std::string_view text, std::size_t line_cap) {
  const auto lines = tokenize(text);
  std::optional<std::size_t> numvars;
  std::vector<std::string> variables;
  std::vector<std::string> output_names;
  std::string constants_spec, garbage_spec;
  std::optional<Circuit> circuit;
  bool in_body = false, ended = false;
  std::map<std::string, std::size_t, std::less<>> index_of;

  auto require_variables = [&](const Token& at) {
    if (variables.empty()) fail(at, "'" + std::string(at.text) + "' before '.variables'", ".variables");
  };

  for (const auto& tokens : lines) {
    const auto& head = tokens[0];
    const auto keyword = head.text;
    if (ended) fail(head, "content after '.end'");
    if (!in_body) {
      if (keyword == ".version") {
        continue;
      } else if (keyword == ".numvars") {
        expect_arity(tokens, 2, ".numvars <n>");
        numvars = to_count(tokens[1], "a variable count");
      } else if (keyword == ".variables") {
        if (numvars && tokens.size() - 1 != *numvars)
          fail(head, "expected " + std::to_string(*numvars) + " variables, got " +
                         std::to_string(tokens.size() - 1));
        for (std::size_t i = 1; i < tokens.size(); ++i) {
          auto name = std::string(tokens[i].text);
          if (index_of.contains(name)) fail(tokens[i], "duplicate variable '" + name + "'");
          index_of[name] = variables.size();
          variables.push_back(std::move(name));
        }
      } else if (keyword == ".inputs") {
        require_variables(head);
        if (tokens.size() - 1 != variables.size())
          fail(head, "expected " + std::to_string(variables.size()) + " input labels");
      } else if (keyword == ".outputs") {
        require_variables(head);
        if (tokens.size() - 1 != variables.size())
          fail(head, "expected " + std::to_string(variables.size()) + " output labels");
        for (std::size_t i = 1; i < tokens.size(); ++i) output_names.emplace_back(tokens[i].text);
      } else if (keyword == ".constants" || keyword == ".garbage") {
        require_variables(head);
        expect_arity(tokens, 2, keyword == ".constants" ? ".constants <0|1|- per line>"
                                                         : ".garbage <1|- per line>");
        const auto spec = tokens[1].text;
        if (spec.size() != variables.size())
          fail(tokens[1], "expected " + std::to_string(variables.size()) + " characters");
        const std::string_view allowed = keyword == ".constants" ? "01-" : "1-";
        for (std::size_t i = 0; i < spec.size(); ++i)
          if (allowed.find(spec[i]) == std::string_view::npos)
            fail({tokens[1].text, tokens[1].line, tokens[1].column + i},
                 "unexpected character '" + std::string(1, spec[i]) + "'", std::string(allowed));
        (keyword == ".constants" ? constants_spec : garbage_spec) = std::string(spec);
      } else if (keyword == ".begin") {
        require_variables(head);
        at_token(head, [&] { circuit.emplace(variables.size(), line_cap); });
        in_body = true;
      } else {
        fail(head, "unsupported token '" + std::string(keyword) + "'");
      }
      continue;
    }

    if (keyword == ".end") {
      ended = true;
      continue;
    }
    const char family = keyword.empty() ? '\0' : keyword[0];
    std::size_t k = 0;
    if (family == 't' || family == 'f') {
      Token count{keyword.substr(1), head.line, head.column + 1};
      auto [ptr, ec] = std::from_chars(count.text.data(), count.text.data() + count.text.size(), k);
      if (count.text.empty() || ec != std::errc{} || ptr != count.text.data() + count.text.size())
        fail(head, "unsupported token '" + std::string(keyword) + "'", "t<k> or f<k>");
    } else {
      fail(head, "unsupported token '" + std::string(keyword) + "'", "t<k> or f<k>");
    }
    if (tokens.size() - 1 != k)
      fail(head, "gate '" + std::string(keyword) + "' needs " + std::to_string(k) + " lines, got " +
                     std::to_string(tokens.size() - 1));
    std::vector<std::size_t> pins;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto it = index_of.find(tokens[i].text);
      if (it == index_of.end()) fail(tokens[i], "unknown variable '" + std::string(tokens[i].text) + "'");
      pins.push_back(it->second);
    }
    GatePtr gate;
    at_token(head, [&] {
      if (family == 't') {
        if (k < 1) throw Error(ErrorCode::InvalidGate, "t0 has no target");
        gate = mct(k - 1);
      } else {
        if (k < 2) throw Error(ErrorCode::InvalidGate, "fredkin needs two targets");
        gate = mcf(k - 2);
      }
      circuit->place(circuit->next_free_slot(), gate, pins);
    });
  }
  if (!circuit) throw FormatError(0, 0, "missing '.begin'", ".begin");
  if (!ended) throw FormatError(0, 0, "missing '.end'", ".end");

  std::map<std::size_t, bool> constants;
  std::set<std::size_t> garbage;
  for (std::size_t i = 0; i < constants_spec.size(); ++i)
    if (constants_spec[i] != '-') constants[i] = constants_spec[i] == '1';
  for (std::size_t i = 0; i < garbage_spec.size(); ++i)
    if (garbage_spec[i] == '1') garbage.insert(i);
  circuit->set_roles(constants, garbage);
  for (std::size_t i = 0; i < variables.size(); ++i) {
    circuit->set_line_name(i, variables[i]);
    if (!output_names.empty() && !garbage.contains(i)) circuit->set_output_name(i, output_names[i]);
  }
  return std::move(*circuit);
}

IrreversibleTruthTable parse_rtab(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw FormatError(0, 0, "empty table", "inputs <n> outputs <m>");
  const auto& header = lines[0];
  if (header.size() != 4 || header[0].text != "inputs" || header[2].text != "outputs")
    fail(header[0], "bad table header", "inputs <n> outputs <m>");
  const auto n = to_count(header[1], "an input count");
  const auto m = to_count(header[3], "an output count");
  if (n > 20) fail(header[1], "too many inputs", "at most 20");
  if (m < 1 || m > 64) fail(header[3], "output count must be 1..64");

  std::vector<std::string> input_names, output_names;
  for (std::size_t i = 1; i <= n; ++i) input_names.push_back("I" + std::to_string(i));
  for (std::size_t j = 1; j <= m; ++j) output_names.push_back("O" + std::to_string(j));

  std::size_t first_row = 1;
  if (lines.size() > 1 && lines[1][0].text == "names") {
    const auto& names = lines[1];
    if (names.size() != n + m + 2 || names[n + 1].text != "->")
      fail(names[0], "names line must list " + std::to_string(n) + " inputs, '->', " +
                         std::to_string(m) + " outputs");
    for (std::size_t i = 0; i < n; ++i) input_names[i] = identifier(names[1 + i]);
    for (std::size_t j = 0; j < m; ++j) output_names[j] = identifier(names[n + 2 + j]);
    first_row = 2;
  }

  const Word expected_rows = Word{1} << n;
  std::vector<Word> outputs;
  outputs.reserve(expected_rows);
  for (std::size_t li = first_row; li < lines.size(); ++li) {
    const auto& tokens = lines[li];
    auto arrow = std::find_if(tokens.begin(), tokens.end(), [](const Token& t) { return t.text == "->"; });
    if (arrow == tokens.end()) fail(tokens[0], "row without '->'", "<bits> -> <bits>");
    std::string in_bits, out_bits;
    auto collect = [&](auto first, auto last, std::string& into) {
      for (auto it = first; it != last; ++it) {
        for (char c : it->text)
          if (c != '0' && c != '1') fail(*it, "invalid bit '" + std::string(1, c) + "'", "0 or 1");
        into += it->text;
      }
    };
    collect(tokens.begin(), arrow, in_bits);
    collect(arrow + 1, tokens.end(), out_bits);
    if (in_bits.size() != n)
      fail(tokens[0], "row has " + std::to_string(in_bits.size()) + " input bits, expected " +
                          std::to_string(n));
    if (out_bits.size() != m)
      fail(*(arrow + 1 == tokens.end() ? arrow : arrow + 1),
           "row has " + std::to_string(out_bits.size()) + " output bits, expected " + std::to_string(m));
    const Word in = to_word(parse_bits(in_bits));
    const Word next = outputs.size();
    if (in < next) {
      if (in + 1 == next)
        throw FormatError(tokens[0].line, tokens[0].column, "duplicate row " + in_bits, {},
                          ErrorCode::MalformedTable);
      fail(tokens[0], "row " + in_bits + " out of order", format_word(next, n));
    }
    if (in > next)
      throw FormatError(tokens[0].line, tokens[0].column, "missing row " + format_word(next, n), {},
                        ErrorCode::MalformedTable);
    outputs.push_back(to_word(parse_bits(out_bits)));
  }
  if (outputs.size() != expected_rows)
    throw FormatError(0, 0,
                      "missing row " + format_word(outputs.size(), n) + " (table has " +
                          std::to_string(outputs.size()) + " of " + std::to_string(expected_rows) +
                          " rows)",
                      {}, ErrorCode::MalformedTable);
  return IrreversibleTruthTable(std::move(input_names), std::move(output_names), std::move(outputs));
}

std::string emit_rtab(const IrreversibleTruthTable& table) {
  const std::size_t n = table.input_count();
  const std::size_t m = table.output_count();
  std::ostringstream out;
  out << "inputs " << n << " outputs " << m << '\n';
  bool default_names = true;
  for (std::size_t i = 0; i < n; ++i)
    default_names = default_names && table.input_names()[i] == "I" + std::to_string(i + 1);
  for (std::size_t j = 0; j < m; ++j)
    default_names = default_names && table.output_names()[j] == "O" + std::to_string(j + 1);
  if (!default_names) {
    out << "names";
    for (const auto& name : table.input_names()) out << ' ' << name;
    out << " ->";
    for (const auto& name : table.output_names()) out << ' ' << name;
    out << '\n';
  }
  for (Word row = 0; row < table.rows(); ++row)
    out << format_word(row, n) << " -> " << format_word(table.output_word(row), m) << '\n';
  return out.str();
}

namespace {

using nlohmann::ordered_json;

ordered_json fabric_json(const Fabric& fabric, const std::vector<Binding>& bindings) {
  ordered_json doc;
  doc["n"] = fabric.n();
  doc["realization"] = std::string(to_string(fabric.realization()));
  doc["nodes"] = ordered_json::array();
  for (const auto& node : fabric.nodes()) {
    ordered_json j;
    j["id"] = node.id;
    j["level"] = node.level;
    j["in"] = {node.in_a, node.in_b};
    j["max_out"] = node.max_out;
    j["min_out"] = node.min_out;
    j["garbage"] = node.garbage;
    doc["nodes"].push_back(std::move(j));
  }
  doc["taps"] = {{"T", fabric.threshold_taps()}, {"S", fabric.single_index_taps()}};
  doc["bindings"] = ordered_json::array();
  for (const auto& b : bindings) {
    ordered_json j;
    j["name"] = b.name;
    j["K"] = std::vector<unsigned>(b.index_set.begin(), b.index_set.end());
    j["line"] = b.line;
    doc["bindings"].push_back(std::move(j));
  }
  return doc;
}

std::pair<std::size_t, std::size_t> offset_position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void doc_fail(const std::string& message, std::string expected = {}) {
  throw FormatError(0, 0, "fabric document: " + message, std::move(expected));
}

const ordered_json& field(const ordered_json& obj, const char* name) {
  if (!obj.is_object() || !obj.contains(name)) doc_fail("missing field '" + std::string(name) + "'");
  return obj.at(name);
}

std::size_t count_field(const ordered_json& obj, const char* name) {
  const auto& v = field(obj, name);
  if (!v.is_number_unsigned()) doc_fail("field '" + std::string(name) + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

}  // namespace

std::string emit_fabric_doc(const Configuration& config) {
  return fabric_json(config.fabric(), config.bindings()).dump(2) + "\n";
}

std::string emit_fabric_doc(const Fabric& fabric) { return fabric_json(fabric, {}).dump(2) + "\n"; }

Configuration parse_fabric_doc(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = offset_position(text, e.byte > 0 ? e.byte - 1 : 0);
    throw FormatError(line, column, "invalid JSON", "a fabric document");
  }
  if (!doc.is_object()) doc_fail("top level must be an object");
  const std::size_t n = count_field(doc, "n");
  const auto& realization_field = field(doc, "realization");
  if (!realization_field.is_string()) doc_fail("field 'realization' must be a string");
  Realization realization;
  try {
    realization = parse_realization(realization_field.get<std::string>());
  } catch (const FormatError&) {
    doc_fail("unknown realization '" + realization_field.get<std::string>() + "'", "kerntopf or picton");
  }
  if (n < 1 || n > kMaxFabricInputs) doc_fail("n out of range", "1.." + std::to_string(kMaxFabricInputs));
  Fabric fabric = Fabric::build(n, realization);

  // The structure is fully determined by (n, realization); a document that
  // disagrees with the generated one was edited by hand or is corrupt.
  const ordered_json expected = fabric_json(fabric, {});
  if (field(doc, "nodes") != expected["nodes"])
    doc_fail("nodes do not match the generated " + std::to_string(n) + "-input fabric");
  if (field(doc, "taps") != expected["taps"])
    doc_fail("taps do not match the generated " + std::to_string(n) + "-input fabric");

  const auto& bindings = field(doc, "bindings");
  if (!bindings.is_array()) doc_fail("field 'bindings' must be an array");
  std::vector<std::pair<std::string, std::set<unsigned>>> outputs;
  std::vector<std::size_t> lines;
  for (const auto& b : bindings) {
    const auto& name = field(b, "name");
    if (!name.is_string() || !is_identifier(name.get<std::string>()))
      doc_fail("binding name must be an identifier");
    const auto& k = field(b, "K");
    if (!k.is_array()) doc_fail("binding 'K' must be an array");
    std::set<unsigned> index_set;
    for (const auto& v : k) {
      if (!v.is_number_unsigned()) doc_fail("index set entries must be non-negative integers");
      const auto index = v.get<std::size_t>();
      if (index > n)
        doc_fail("index " + std::to_string(index) + " out of range for n=" + std::to_string(n),
                 "0.." + std::to_string(n));
      if (!index_set.insert(static_cast<unsigned>(index)).second)
        doc_fail("duplicate index " + std::to_string(index));
    }
    outputs.emplace_back(name.get<std::string>(), std::move(index_set));
    lines.push_back(count_field(b, "line"));
  }
  Configuration config(std::move(fabric), std::move(outputs));
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (config.bindings()[i].line != lines[i])
      doc_fail("binding '" + config.bindings()[i].name + "' line " + std::to_string(lines[i]) +
               " does not match netlist line " + std::to_string(config.bindings()[i].line));
  return config;
}

}  // namespace rpga
