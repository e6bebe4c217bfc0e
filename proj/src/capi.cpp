#include "rpga/rpga.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <string>

#include "rpga/error.hpp"
#include "rpga/io.hpp"
#include "rpga/json_codec.hpp"
#include "rpga/render.hpp"
#include "rpga/server.hpp"
#include "rpga/session.hpp"
#include "rpga/simulator.hpp"
#include "rpga/symmetry.hpp"

struct rpga_circuit {
  rpga::Circuit value;
};
struct rpga_table {
  rpga::IrreversibleTruthTable value;
};
struct rpga_report {
  rpga::SymmetryReport value;
};
struct rpga_fabric {
  std::shared_ptr<const rpga::Fabric> value;
};
struct rpga_config {
  std::shared_ptr<const rpga::Configuration> value;
};
struct rpga_session {
  rpga::Session value;
};
struct rpga_server {
  rpga::HttpServer value;
};

namespace {

thread_local std::string last_message;
thread_local std::string last_json;

struct InvalidArgument {
  const char* what;
};

rpga_status status_of(rpga::ErrorCode code) {
  return static_cast<rpga_status>(static_cast<int>(code) + 1);
}

void record(rpga_status status, const std::string& message, rpga::Json json) {
  last_message = message;
  if (!json.contains("code")) json["code"] = rpga_status_name(status);
  if (!json.contains("message")) json["message"] = message;
  last_json = json.dump();
}

template <typename F>
rpga_status guard(F&& body) {
  try {
    body();
    return RPGA_OK;
  } catch (const rpga::Error& e) {
    const auto status = status_of(e.code());
    record(status, e.what(), rpga::to_json(e));
    return status;
  } catch (const InvalidArgument& e) {
    record(RPGA_ERR_INVALID_ARGUMENT, e.what, rpga::Json::object());
    return RPGA_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    record(RPGA_ERR_INTERNAL, e.what(), rpga::Json::object());
    return RPGA_ERR_INTERNAL;
  }
}

template <typename T>
T& need(T* ptr, const char* what) {
  if (!ptr) throw InvalidArgument{what};
  return *ptr;
}

const char* need_text(const char* text) {
  if (!text) throw InvalidArgument{"null string argument"};
  return text;
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) { need(out, "null output pointer") = dup(s); }

std::string json_text(const rpga::Json& j) { return j.dump(2) + "\n"; }

bool json_format(rpga_format format) {
  if (format != RPGA_FORMAT_TEXT && format != RPGA_FORMAT_JSON) throw InvalidArgument{"unknown format"};
  return format == RPGA_FORMAT_JSON;
}

std::string run_text_row(const rpga::Bits& input, const rpga::FabricResult& result) {
  return rpga::format_bits(input) + " " + rpga::render_outputs(result) + "\n";
}

}  // namespace

extern "C" {

const char* rpga_version(void) { return "1.0.0"; }

const char* rpga_status_name(rpga_status status) {
  switch (status) {
    case RPGA_OK:
      return "OK";
    case RPGA_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case RPGA_ERR_INTERNAL:
      return "Internal";
    default:
      break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(rpga::ErrorCode::FormatError))
    return rpga::to_string(static_cast<rpga::ErrorCode>(code)).data();
  return "Unknown";
}

int rpga_status_is_parse_error(rpga_status status) {
  return status == RPGA_ERR_FORMAT || status == RPGA_ERR_MALFORMED_TABLE;
}

const char* rpga_last_error_message(void) { return last_message.c_str(); }
const char* rpga_last_error_json(void) { return last_json.c_str(); }
void rpga_string_free(char* str) { std::free(str); }

rpga_status rpga_circuit_parse(const char* text, rpga_circuit_syntax syntax, rpga_circuit** out) {
  return guard([&] {
    need(out, "null output pointer");
    if (syntax == RPGA_SYNTAX_RCIR)
      *out = new rpga_circuit{rpga::parse_rcir(need_text(text))};
    else if (syntax == RPGA_SYNTAX_REAL)
      *out = new rpga_circuit{rpga::parse_real(need_text(text))};
    else
      throw InvalidArgument{"unknown circuit syntax"};
  });
}

rpga_status rpga_circuit_new(size_t lines, rpga_circuit** out) {
  return guard([&] { need(out, "null output pointer") = new rpga_circuit{rpga::Circuit(lines)}; });
}

void rpga_circuit_free(rpga_circuit* circuit) { delete circuit; }

rpga_status rpga_circuit_place(rpga_circuit* circuit, size_t slot, const char* gate, const size_t* pins,
                               size_t pin_count) {
  return guard([&] {
    auto& c = need(circuit, "null circuit").value;
    if (pin_count && !pins) throw InvalidArgument{"null pin array"};
    c.place(slot, rpga::gate_by_name(need_text(gate)), std::vector<std::size_t>(pins, pins + pin_count));
  });
}

rpga_status rpga_circuit_set_constant(rpga_circuit* circuit, size_t line, int value) {
  return guard([&] {
    auto& c = need(circuit, "null circuit").value;
    auto roles = rpga::Roles::of(c);
    roles.constants[line] = value != 0;
    c.set_roles(roles.constants, roles.garbage);
  });
}

rpga_status rpga_circuit_set_garbage(rpga_circuit* circuit, size_t line) {
  return guard([&] {
    auto& c = need(circuit, "null circuit").value;
    auto roles = rpga::Roles::of(c);
    roles.garbage.insert(line);
    c.set_roles(roles.constants, roles.garbage);
  });
}

size_t rpga_circuit_width(const rpga_circuit* circuit) { return circuit ? circuit->value.width() : 0; }

rpga_status rpga_circuit_emit(const rpga_circuit* circuit, char** out) {
  return guard([&] { put(out, rpga::emit_rcir(need(circuit, "null circuit").value)); });
}

rpga_status rpga_circuit_eval(const rpga_circuit* circuit, const char* input, char** out) {
  return guard([&] {
    const auto& c = need(circuit, "null circuit").value;
    put(out, rpga::format_bits(rpga::eval(c, rpga::parse_bits(need_text(input)))));
  });
}

rpga_status rpga_circuit_truth_table(const rpga_circuit* circuit, rpga_format format, char** out) {
  return guard([&] {
    const auto& c = need(circuit, "null circuit").value;
    const bool json = json_format(format);
    const auto rtt = rpga::full_table(c);
    const auto projected = rpga::project(rtt, rpga::Roles::of(c));
    if (json)
      put(out, json_text({{"reversible", rpga::to_json(rtt)}, {"irreversible", rpga::to_json(projected)}}));
    else
      put(out, rpga::render_text(rtt, c) + "\n" + rpga::render_text(projected));
  });
}

rpga_status rpga_circuit_project(const rpga_circuit* circuit, rpga_table** out) {
  return guard([&] {
    const auto& c = need(circuit, "null circuit").value;
    need(out, "null output pointer") = new rpga_table{rpga::project(rpga::full_table(c), rpga::Roles::of(c))};
  });
}

rpga_status rpga_circuit_metrics(const rpga_circuit* circuit, rpga_format format, char** out) {
  return guard([&] {
    const auto m = rpga::metrics(need(circuit, "null circuit").value);
    put(out, json_format(format) ? json_text(rpga::to_json(m)) : rpga::render_text(m));
  });
}

rpga_status rpga_circuit_check(const rpga_circuit* circuit, rpga_format format, int* bijective, char** out) {
  return guard([&] {
    const auto& c = need(circuit, "null circuit").value;
    const bool json = json_format(format);
    const auto report = rpga::check_bijective(c);
    if (bijective) *bijective = report.bijective ? 1 : 0;
    if (out) put(out, json ? json_text(rpga::to_json(report, c.width())) : rpga::render_text(report, c.width()));
  });
}

rpga_status rpga_table_parse(const char* text, rpga_table** out) {
  return guard([&] { need(out, "null output pointer") = new rpga_table{rpga::parse_rtab(need_text(text))}; });
}

void rpga_table_free(rpga_table* table) { delete table; }

rpga_status rpga_table_emit(const rpga_table* table, char** out) {
  return guard([&] { put(out, rpga::emit_rtab(need(table, "null table").value)); });
}

rpga_status rpga_table_render(const rpga_table* table, rpga_format format, char** out) {
  return guard([&] {
    const auto& t = need(table, "null table").value;
    put(out, json_format(format) ? json_text(rpga::to_json(t)) : rpga::render_text(t));
  });
}

size_t rpga_table_input_count(const rpga_table* table) { return table ? table->value.input_count() : 0; }
size_t rpga_table_output_count(const rpga_table* table) { return table ? table->value.output_count() : 0; }

rpga_status rpga_analyze(const rpga_table* table, rpga_report** out) {
  return guard([&] {
    need(out, "null output pointer") = new rpga_report{rpga::analyze(need(table, "null table").value)};
  });
}

rpga_status rpga_report_parse(const char* json, rpga_report** out) {
  return guard([&] {
    need(out, "null output pointer");
    rpga::Json doc;
    try {
      doc = rpga::Json::parse(need_text(json));
    } catch (const nlohmann::json::parse_error& e) {
      throw rpga::FormatError(1, e.byte, "symmetry report is not valid JSON");
    }
    *out = new rpga_report{rpga::report_from_json(doc)};
  });
}

void rpga_report_free(rpga_report* report) { delete report; }

rpga_status rpga_report_render(const rpga_report* report, rpga_format format, char** out) {
  return guard([&] {
    const auto& r = need(report, "null report").value;
    put(out, json_format(format) ? json_text(rpga::to_json(r)) : rpga::render_text(r));
  });
}

int rpga_report_all_symmetric(const rpga_report* report) {
  return report && report->value.all_symmetric() ? 1 : 0;
}

rpga_status rpga_fabric_build(size_t n, const char* realization, rpga_fabric** out) {
  return guard([&] {
    need(out, "null output pointer");
    const auto r = rpga::parse_realization(need_text(realization));
    *out = new rpga_fabric{std::make_shared<const rpga::Fabric>(rpga::Fabric::build(n, r))};
  });
}

rpga_status rpga_fabric_parse(const char* doc, rpga_fabric** out) {
  return guard([&] {
    need(out, "null output pointer");
    auto config = rpga::parse_fabric_doc(need_text(doc));
    *out = new rpga_fabric{std::make_shared<const rpga::Fabric>(config.fabric())};
  });
}

void rpga_fabric_free(rpga_fabric* fabric) { delete fabric; }

rpga_status rpga_fabric_emit(const rpga_fabric* fabric, char** out) {
  return guard([&] { put(out, rpga::emit_fabric_doc(*need(fabric, "null fabric").value)); });
}

size_t rpga_fabric_input_count(const rpga_fabric* fabric) { return fabric ? fabric->value->n() : 0; }

rpga_status rpga_configure(const rpga_fabric* fabric, const rpga_report* report, rpga_config** out) {
  return guard([&] {
    const auto& f = *need(fabric, "null fabric").value;
    const auto& r = need(report, "null report").value;
    need(out, "null output pointer") =
        new rpga_config{std::make_shared<const rpga::Configuration>(rpga::configure(f, r))};
  });
}

rpga_status rpga_config_parse(const char* doc, rpga_config** out) {
  return guard([&] {
    need(out, "null output pointer") =
        new rpga_config{std::make_shared<const rpga::Configuration>(rpga::parse_fabric_doc(need_text(doc)))};
  });
}

void rpga_config_free(rpga_config* config) { delete config; }

rpga_status rpga_config_emit(const rpga_config* config, char** out) {
  return guard([&] { put(out, rpga::emit_fabric_doc(*need(config, "null configuration").value)); });
}

rpga_status rpga_config_resources(const rpga_config* config, rpga_format format, char** out) {
  return guard([&] {
    const auto& r = need(config, "null configuration").value->resources();
    put(out, json_format(format) ? json_text(rpga::to_json(r)) : rpga::render_text(r));
  });
}

size_t rpga_config_input_count(const rpga_config* config) { return config ? config->value->fabric().n() : 0; }
size_t rpga_config_output_count(const rpga_config* config) {
  return config ? config->value->bindings().size() : 0;
}

rpga_status rpga_config_output(const rpga_config* config, const char* input, size_t index, int* value) {
  return guard([&] {
    const auto& c = *need(config, "null configuration").value;
    const auto result = rpga::fabric_eval(c, rpga::parse_bits(need_text(input)));
    if (index >= result.outputs.size()) throw InvalidArgument{"output index out of range"};
    need(value, "null output pointer") = result.outputs[index].second ? 1 : 0;
  });
}

rpga_status rpga_config_run(const rpga_config* config, const char* input, rpga_format format, int trace,
                            char** out) {
  return guard([&] {
    const auto& c = *need(config, "null configuration").value;
    const bool json = json_format(format);
    const auto result = rpga::fabric_eval(c, rpga::parse_bits(need_text(input)));
    if (json)
      put(out, json_text(rpga::to_json(result, c, trace != 0)));
    else
      put(out, trace ? rpga::render_trace(result, c) : rpga::render_outputs(result) + "\n");
  });
}

rpga_status rpga_config_run_all(const rpga_config* config, rpga_format format, int trace, char** out) {
  return guard([&] {
    const auto& c = *need(config, "null configuration").value;
    const bool json = json_format(format);
    const std::size_t n = c.fabric().n();
    rpga::Json rows = rpga::Json::array();
    std::ostringstream text;
    for (rpga::Word x = 0; x < (rpga::Word{1} << n); ++x) {
      const auto input = rpga::to_bits(x, n);
      const auto result = rpga::fabric_eval(c, input);
      if (json) {
        rows.push_back(rpga::to_json(result, c, trace != 0));
      } else if (trace) {
        if (x) text << '\n';
        text << rpga::render_trace(result, c);
      } else {
        text << run_text_row(input, result);
      }
    }
    put(out, json ? json_text({{"rows", rows}}) : text.str());
  });
}

rpga_status rpga_session_new(const rpga_fabric* fabric, rpga_session** out) {
  return guard([&] {
    const auto& f = need(fabric, "null fabric").value;
    need(out, "null output pointer") = new rpga_session{rpga::Session(f)};
  });
}

void rpga_session_free(rpga_session* session) { delete session; }

rpga_status rpga_session_load(rpga_session* session, const rpga_config* config) {
  return guard([&] { need(session, "null session").value.load_config(need(config, "null configuration").value); });
}

rpga_status rpga_session_input(rpga_session* session, const char* input) {
  return guard([&] { need(session, "null session").value.apply_input(rpga::parse_bits(need_text(input))); });
}

rpga_status rpga_session_next(rpga_session* session) {
  return guard([&] { need(session, "null session").value.next(); });
}

rpga_status rpga_session_prev(rpga_session* session) {
  return guard([&] { need(session, "null session").value.prev(); });
}

rpga_status rpga_session_reset(rpga_session* session) {
  return guard([&] { need(session, "null session").value.reset(); });
}

rpga_session_mode rpga_session_get_mode(const rpga_session* session) {
  if (!session) return RPGA_MODE_INITIAL;
  return static_cast<rpga_session_mode>(static_cast<int>(session->value.mode()));
}

rpga_status rpga_session_snapshot(const rpga_session* session, rpga_format format, char** out) {
  return guard([&] {
    const auto model = need(session, "null session").value.snapshot();
    put(out, json_format(format) ? json_text(rpga::to_json(model)) : rpga::render_text(model));
  });
}

rpga_status rpga_server_start(const char* host, int port, rpga_server** out, int* bound_port) {
  return guard([&] {
    need(out, "null output pointer");
    auto server = std::make_unique<rpga_server>();
    const int bound = server->value.start(need_text(host), port);
    if (bound < 0) throw InvalidArgument{"could not bind the requested address"};
    if (bound_port) *bound_port = bound;
    *out = server.release();
  });
}

void rpga_server_stop(rpga_server* server) { delete server; }

rpga_status rpga_server_run(const char* host, int port) {
  return guard([&] {
    rpga::HttpServer server;
    if (!server.run(need_text(host), port)) throw InvalidArgument{"could not bind the requested address"};
  });
}

}  // extern "C"
