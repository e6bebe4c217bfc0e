// rpga: command-line front end. Links only the C interface.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 parse error, 3 domain error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "rpga/rpga.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitDomain = 3;

struct Failure {
  int exit_code;
  std::string message;
};

template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using CircuitPtr = std::unique_ptr<rpga_circuit, Deleter<rpga_circuit, rpga_circuit_free>>;
using TablePtr = std::unique_ptr<rpga_table, Deleter<rpga_table, rpga_table_free>>;
using ReportPtr = std::unique_ptr<rpga_report, Deleter<rpga_report, rpga_report_free>>;
using FabricPtr = std::unique_ptr<rpga_fabric, Deleter<rpga_fabric, rpga_fabric_free>>;
using ConfigPtr = std::unique_ptr<rpga_config, Deleter<rpga_config, rpga_config_free>>;

std::string context;  // file being processed, for messages

void check(rpga_status status) {
  if (status == RPGA_OK) return;
  std::string message = rpga_last_error_message();
  message += " [" + std::string(rpga_status_name(status)) + "]";
  if (!context.empty()) message = context + ": " + message;
  if (status == RPGA_ERR_INVALID_ARGUMENT || status == RPGA_ERR_INTERNAL) throw Failure{kExitUsage, message};
  throw Failure{rpga_status_is_parse_error(status) ? kExitParse : kExitDomain, message};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  rpga_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "cannot read '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

enum class FileKind { Rcir, Real, Table, Report };

FileKind kind_of(const std::string& path) {
  if (ends_with(path, ".real")) return FileKind::Real;
  if (ends_with(path, ".rtab")) return FileKind::Table;
  if (ends_with(path, ".json")) return FileKind::Report;
  return FileKind::Rcir;
}

CircuitPtr load_circuit(const std::string& path) {
  const auto kind = kind_of(path);
  if (kind == FileKind::Table || kind == FileKind::Report)
    throw Failure{kExitUsage, path + ": expected a circuit file (.rcir or .real)"};
  const auto text = read_file(path);
  context = path;
  rpga_circuit* raw = nullptr;
  check(rpga_circuit_parse(text.c_str(), kind == FileKind::Real ? RPGA_SYNTAX_REAL : RPGA_SYNTAX_RCIR, &raw));
  return CircuitPtr(raw);
}

/// Circuits are projected; tables are read directly; JSON files are taken
/// as saved symmetry reports.
ReportPtr load_report(const std::string& path) {
  rpga_report* report = nullptr;
  if (kind_of(path) == FileKind::Report) {
    const auto text = read_file(path);
    context = path;
    check(rpga_report_parse(text.c_str(), &report));
    return ReportPtr(report);
  }
  TablePtr table;
  if (kind_of(path) == FileKind::Table) {
    const auto text = read_file(path);
    context = path;
    rpga_table* raw = nullptr;
    check(rpga_table_parse(text.c_str(), &raw));
    table.reset(raw);
  } else {
    auto circuit = load_circuit(path);
    rpga_table* raw = nullptr;
    check(rpga_circuit_project(circuit.get(), &raw));
    table.reset(raw);
  }
  check(rpga_analyze(table.get(), &report));
  return ReportPtr(report);
}

ConfigPtr load_config(const std::string& path) {
  const auto text = read_file(path);
  context = path;
  rpga_config* raw = nullptr;
  check(rpga_config_parse(text.c_str(), &raw));
  return ConfigPtr(raw);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out || !(out << text)) throw Failure{kExitUsage, "cannot write '" + output + "'"};
}

rpga_format format_of(const std::string& name) { return name == "json" ? RPGA_FORMAT_JSON : RPGA_FORMAT_TEXT; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reversible programmable gate array toolkit"};
  app.set_version_flag("--version", std::string(rpga_version()));
  app.require_subcommand(1, 1);

  std::string format = "text";
  std::string output;
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_output = [&](CLI::App* cmd) { cmd->add_option("-o,--output", output, "Write to a file instead of stdout"); };

  std::string input_path;

  auto* tt = app.add_subcommand("tt", "Print the reversible and projected truth tables of a circuit");
  tt->add_option("circuit", input_path, "Circuit file (.rcir or .real)")->required();
  add_format(tt);
  add_output(tt);

  auto* analyze = app.add_subcommand("analyze", "Symmetry report for a circuit or truth table");
  analyze->add_option("input", input_path, "Circuit (.rcir, .real) or table (.rtab)")->required();
  add_format(analyze);
  add_output(analyze);

  std::size_t n = 0;
  std::string realization = "kerntopf";
  auto* fabric = app.add_subcommand("fabric", "Emit a fabric document");
  fabric->add_option("--n", n, "Number of fabric inputs")->required();
  fabric->add_option("--realization", realization, "MAX/MIN node realization")
      ->check(CLI::IsMember({"kerntopf", "picton"}));
  add_output(fabric);

  std::string fabric_path;
  auto* configure = app.add_subcommand("configure", "Bind a symmetric function to a fabric");
  configure->add_option("table", input_path, "Table (.rtab), circuit (.rcir, .real) or report (.json)")
      ->required();
  configure->add_option("--fabric", fabric_path, "Fabric document")->required();
  add_output(configure);

  std::string bits;
  bool all = false;
  bool trace = false;
  auto* run = app.add_subcommand("run", "Evaluate a configured fabric");
  run->add_option("config", input_path, "Configuration document")->required();
  auto* input_opt = run->add_option("--input", bits, "Input word, line 0 first");
  auto* all_flag = run->add_flag("--all", all, "Every input in ascending order");
  run->add_flag("--trace", trace, "Print every netlist stage");
  input_opt->excludes(all_flag);
  add_format(run);
  add_output(run);

  auto* metrics = app.add_subcommand("metrics", "Gate count, constants, garbage, levels and quantum cost");
  metrics->add_option("circuit", input_path, "Circuit file")->required();
  add_format(metrics);
  add_output(metrics);

  auto* check_cmd = app.add_subcommand("check", "Check that a circuit is a bijection");
  check_cmd->add_option("circuit", input_path, "Circuit file")->required();
  add_format(check_cmd);
  add_output(check_cmd);

  int port = 8080;
  std::string host = "127.0.0.1";
  auto* serve = app.add_subcommand("serve", "Start the HTTP API server");
  serve->add_option("--port", port, "Port to listen on");
  serve->add_option("--host", host, "Address to bind");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto fmt = format_of(format);
  try {
    char* text = nullptr;
    if (tt->parsed()) {
      auto circuit = load_circuit(input_path);
      check(rpga_circuit_truth_table(circuit.get(), fmt, &text));
      emit(take(text), output);
    } else if (analyze->parsed()) {
      auto report = load_report(input_path);
      check(rpga_report_render(report.get(), fmt, &text));
      emit(take(text), output);
    } else if (fabric->parsed()) {
      rpga_fabric* raw = nullptr;
      check(rpga_fabric_build(n, realization.c_str(), &raw));
      FabricPtr f(raw);
      check(rpga_fabric_emit(f.get(), &text));
      emit(take(text), output);
    } else if (configure->parsed()) {
      const auto doc = read_file(fabric_path);
      context = fabric_path;
      rpga_fabric* raw = nullptr;
      check(rpga_fabric_parse(doc.c_str(), &raw));
      FabricPtr f(raw);
      auto report = load_report(input_path);
      rpga_config* cfg = nullptr;
      check(rpga_configure(f.get(), report.get(), &cfg));
      ConfigPtr config(cfg);
      check(rpga_config_emit(config.get(), &text));
      emit(take(text), output);
    } else if (run->parsed()) {
      auto config = load_config(input_path);
      context.clear();
      if (!bits.empty())
        check(rpga_config_run(config.get(), bits.c_str(), fmt, trace ? 1 : 0, &text));
      else if (all || trace)
        check(rpga_config_run_all(config.get(), fmt, trace ? 1 : 0, &text));
      else
        throw Failure{kExitUsage, "run: one of --input, --all or --trace is required"};
      emit(take(text), output);
    } else if (metrics->parsed()) {
      auto circuit = load_circuit(input_path);
      check(rpga_circuit_metrics(circuit.get(), fmt, &text));
      emit(take(text), output);
    } else if (check_cmd->parsed()) {
      auto circuit = load_circuit(input_path);
      int bijective = 0;
      check(rpga_circuit_check(circuit.get(), fmt, &bijective, &text));
      emit(take(text), output);
    } else if (serve->parsed()) {
      std::cerr << "serving on http://" << host << ":" << port << '\n';
      check(rpga_server_run(host.c_str(), port));
    }
  } catch (const Failure& f) {
    std::cerr << "rpga: " << f.message << '\n';
    return f.exit_code;
  }
  return 0;
}
