#include "rpga/server.hpp"

#include <httplib.h>

#include <vector>

#include "rpga/error.hpp"
#include "rpga/io.hpp"
#include "rpga/json_codec.hpp"
#include "rpga/simulator.hpp"
#include "rpga/symmetry.hpp"

namespace rpga {

namespace {

/// Client-side mistakes that are not domain errors: bad JSON, missing
/// fields, unknown routes and ids.
struct HttpError {
  int status;
  std::string code;
  std::string message;
};

[[noreturn]] void not_found(const std::string& what) { throw HttpError{404, "NotFound", what}; }
[[noreturn]] void bad_request(const std::string& what) { throw HttpError{400, "BadRequest", what}; }

Json parse_body(std::string_view body) {
  if (body.empty()) return Json::object();
  try {
    auto j = Json::parse(body.begin(), body.end());
    if (!j.is_object()) bad_request("request body must be a JSON object");
    return j;
  } catch (const nlohmann::json::parse_error&) {
    bad_request("request body is not valid JSON");
  }
}

std::string string_field(const Json& body, const char* name) {
  if (!body.contains(name) || !body[name].is_string())
    bad_request("field '" + std::string(name) + "' must be a string");
  return body[name].get<std::string>();
}

std::vector<std::string_view> split_path(std::string_view path) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (pos < path.size()) {
    if (path[pos] == '/') {
      ++pos;
      continue;
    }
    auto end = path.find('/', pos);
    if (end == std::string_view::npos) end = path.size();
    parts.push_back(path.substr(pos, end - pos));
    pos = end;
  }
  return parts;
}

Json fabric_doc_json(const Configuration& config) { return Json::parse(emit_fabric_doc(config)); }
Json fabric_doc_json(const Fabric& fabric) { return Json::parse(emit_fabric_doc(fabric)); }

ApiResponse ok(Json body, int status = 200) { return {status, body.dump()}; }

Circuit circuit_from_body(const Json& body) {
  if (body.contains("rcir")) return parse_rcir(string_field(body, "rcir"));
  if (body.contains("real")) return parse_real(string_field(body, "real"));
  if (!body.contains("lines") || !body["lines"].is_number_unsigned())
    bad_request("expected 'rcir', 'real' or 'lines' + 'placements'");
  Circuit circuit(body["lines"].get<std::size_t>());
  try {
    if (body.contains("placements")) {
      for (const auto& p : body["placements"]) {
        const auto slot = p.at("slot").get<std::size_t>();
        const auto gate = gate_by_name(p.at("gate").get<std::string>());
        circuit.place(slot, gate, p.at("pins").get<std::vector<std::size_t>>());
      }
    }
    std::map<std::size_t, bool> constants;
    std::set<std::size_t> garbage;
    if (body.contains("constants"))
      for (const auto& [line, value] : body["constants"].items())
        constants[std::stoul(line)] = value.get<int>() != 0;
    if (body.contains("garbage")) garbage = body["garbage"].get<std::set<std::size_t>>();
    circuit.set_roles(constants, garbage);
  } catch (const nlohmann::json::exception& e) {
    bad_request(std::string("malformed placement list: ") + e.what());
  } catch (const std::invalid_argument&) {
    bad_request("constant keys must be line indices");
  }
  return circuit;
}

IrreversibleTruthTable table_from_body(const Json& body) {
  if (body.contains("rtab")) return parse_rtab(string_field(body, "rtab"));
  if (!body.contains("rows")) bad_request("expected 'rtab' or 'inputs'/'outputs'/'rows'");
  try {
    auto inputs = body.at("inputs").get<std::vector<std::string>>();
    auto outputs = body.at("outputs").get<std::vector<std::string>>();
    std::vector<std::pair<Word, Word>> rows;
    for (const auto& row : body.at("rows")) {
      const auto in = parse_bits(row.at("in").get<std::string>());
      const auto out = parse_bits(row.at("out").get<std::string>());
      if (in.size() != inputs.size() || out.size() != outputs.size())
        throw Error(ErrorCode::MalformedTable, "row width does not match the column names");
      rows.emplace_back(to_word(in), to_word(out));
    }
    return IrreversibleTruthTable::from_rows(std::move(inputs), std::move(outputs), rows);
  } catch (const nlohmann::json::exception& e) {
    bad_request(std::string("malformed table: ") + e.what());
  }
}

Json circuit_json(std::string_view id, const Circuit& circuit) {
  return {{"id", id}, {"rcir", emit_rcir(circuit)}, {"metrics", to_json(metrics(circuit))}};
}

Json config_json(std::string_view id, const Configuration& config) {
  return {{"id", id}, {"config", fabric_doc_json(config)}, {"resources", to_json(config.resources())}};
}

}  // namespace

std::string ResourceStore::next_id(const char* prefix) {
  return std::string(prefix) + std::to_string(++counter_);
}

std::string ResourceStore::add(std::shared_ptr<const Circuit> v) {
  std::unique_lock lock(mutex_);
  auto id = next_id("c");
  circuits_.emplace(id, std::move(v));
  return id;
}

std::string ResourceStore::add(std::shared_ptr<const IrreversibleTruthTable> v) {
  std::unique_lock lock(mutex_);
  auto id = next_id("t");
  tables_.emplace(id, std::move(v));
  return id;
}

std::string ResourceStore::add(std::shared_ptr<const Fabric> v) {
  std::unique_lock lock(mutex_);
  auto id = next_id("f");
  fabrics_.emplace(id, std::move(v));
  return id;
}

std::string ResourceStore::add(std::shared_ptr<const Configuration> v) {
  std::unique_lock lock(mutex_);
  auto id = next_id("cfg");
  configs_.emplace(id, std::move(v));
  return id;
}

std::string ResourceStore::add(std::shared_ptr<SessionEntry> v) {
  std::unique_lock lock(mutex_);
  auto id = next_id("s");
  sessions_.emplace(id, std::move(v));
  return id;
}

namespace {
template <typename M>
auto find_in(const M& map, std::string_view id) -> typename M::mapped_type {
  auto it = map.find(id);
  return it == map.end() ? nullptr : it->second;
}
}  // namespace

std::shared_ptr<const Circuit> ResourceStore::circuit(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return find_in(circuits_, id);
}
std::shared_ptr<const IrreversibleTruthTable> ResourceStore::table(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return find_in(tables_, id);
}
std::shared_ptr<const Fabric> ResourceStore::fabric(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return find_in(fabrics_, id);
}
std::shared_ptr<const Configuration> ResourceStore::config(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return find_in(configs_, id);
}
std::shared_ptr<ResourceStore::SessionEntry> ResourceStore::session(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return find_in(sessions_, id);
}

ApiResponse ApiService::handle(std::string_view method, std::string_view path, std::string_view body_text) {
  try {
    const auto parts = split_path(path);
    const bool get = method == "GET";
    const bool post = method == "POST";
    auto route = [&](std::size_t size, std::string_view first) {
      return parts.size() == size && parts[0] == first;
    };

    if (get && route(1, "health")) return ok({{"status", "ok"}});

    if (route(1, "circuits") && post) {
      auto circuit = std::make_shared<const Circuit>(circuit_from_body(parse_body(body_text)));
      auto id = store_.add(circuit);
      return ok(circuit_json(id, *circuit), 201);
    }
    if (parts.size() >= 2 && parts[0] == "circuits" && get) {
      auto circuit = store_.circuit(parts[1]);
      if (!circuit) not_found("unknown circuit '" + std::string(parts[1]) + "'");
      if (parts.size() == 2) return ok(circuit_json(parts[1], *circuit));
      if (parts.size() == 3 && parts[2] == "truth-table") {
        const auto rtt = full_table(*circuit);
        return ok({{"reversible", to_json(rtt)}, {"irreversible", to_json(project(rtt, Roles::of(*circuit)))}});
      }
      if (parts.size() == 3 && parts[2] == "symmetry")
        return ok(to_json(analyze(project(full_table(*circuit), Roles::of(*circuit)))));
      if (parts.size() == 3 && parts[2] == "check")
        return ok(to_json(check_bijective(*circuit), circuit->width()));
    }

    if (route(1, "tables") && post) {
      auto table = std::make_shared<const IrreversibleTruthTable>(table_from_body(parse_body(body_text)));
      auto id = store_.add(table);
      return ok({{"id", id}, {"table", to_json(*table)}}, 201);
    }
    if (parts.size() >= 2 && parts[0] == "tables" && get) {
      auto table = store_.table(parts[1]);
      if (!table) not_found("unknown table '" + std::string(parts[1]) + "'");
      if (parts.size() == 2) return ok({{"id", parts[1]}, {"table", to_json(*table)}});
      if (parts.size() == 3 && parts[2] == "symmetry") return ok(to_json(analyze(*table)));
    }

    if (route(1, "fabrics") && post) {
      const auto body = parse_body(body_text);
      if (!body.contains("n") || !body["n"].is_number_unsigned()) bad_request("field 'n' must be a count");
      const auto realization =
          parse_realization(body.contains("realization") ? string_field(body, "realization") : "kerntopf");
      auto fabric = std::make_shared<const Fabric>(Fabric::build(body["n"].get<std::size_t>(), realization));
      auto id = store_.add(fabric);
      return ok({{"id", id}, {"fabric", fabric_doc_json(*fabric)}}, 201);
    }
    if (parts.size() >= 2 && parts[0] == "fabrics") {
      auto fabric = store_.fabric(parts[1]);
      if (!fabric) not_found("unknown fabric '" + std::string(parts[1]) + "'");
      if (get && parts.size() == 2) return ok({{"id", parts[1]}, {"fabric", fabric_doc_json(*fabric)}});
      if (post && parts.size() == 3 && parts[2] == "configure") {
        const auto body = parse_body(body_text);
        SymmetryReport report;
        if (body.contains("report")) {
          report = report_from_json(body["report"]);
        } else if (body.contains("table")) {
          auto table = store_.table(string_field(body, "table"));
          if (!table) not_found("unknown table '" + string_field(body, "table") + "'");
          report = analyze(*table);
        } else if (body.contains("circuit")) {
          auto circuit = store_.circuit(string_field(body, "circuit"));
          if (!circuit) not_found("unknown circuit '" + string_field(body, "circuit") + "'");
          report = analyze(project(full_table(*circuit), Roles::of(*circuit)));
        } else if (body.contains("rtab")) {
          report = analyze(parse_rtab(string_field(body, "rtab")));
        } else {
          bad_request("expected 'report', 'table', 'circuit' or 'rtab'");
        }
        auto config = std::make_shared<const Configuration>(configure(*fabric, report));
        auto id = store_.add(config);
        return ok(config_json(id, *config), 201);
      }
    }

    if (parts.size() >= 2 && parts[0] == "configs") {
      auto config = store_.config(parts[1]);
      if (!config) not_found("unknown configuration '" + std::string(parts[1]) + "'");
      if (get && parts.size() == 2) return ok(config_json(parts[1], *config));
      if (post && parts.size() == 3 && parts[2] == "eval") {
        const auto body = parse_body(body_text);
        const auto input = parse_bits(string_field(body, "input"));
        const bool with_trace = body.contains("trace") && body["trace"].is_boolean() && body["trace"].get<bool>();
        return ok(to_json(fabric_eval(*config, input), *config, with_trace));
      }
    }

    if (route(1, "sessions") && post) {
      const auto body = parse_body(body_text);
      std::shared_ptr<ResourceStore::SessionEntry> entry;
      if (body.contains("config")) {
        auto config = store_.config(string_field(body, "config"));
        if (!config) not_found("unknown configuration '" + string_field(body, "config") + "'");
        Session session(std::make_shared<const Fabric>(config->fabric()));
        session.load_config(config);
        entry = std::make_shared<ResourceStore::SessionEntry>(std::move(session));
      } else if (body.contains("fabric")) {
        auto fabric = store_.fabric(string_field(body, "fabric"));
        if (!fabric) not_found("unknown fabric '" + string_field(body, "fabric") + "'");
        entry = std::make_shared<ResourceStore::SessionEntry>(Session(fabric));
      } else {
        bad_request("expected 'config' or 'fabric'");
      }
      auto id = store_.add(entry);
      std::lock_guard lock(entry->mutex);
      return ok({{"id", id}, {"snapshot", to_json(entry->session.snapshot())}}, 201);
    }
    if (parts.size() >= 2 && parts[0] == "sessions") {
      auto entry = store_.session(parts[1]);
      if (!entry) not_found("unknown session '" + std::string(parts[1]) + "'");
      if (get && (parts.size() == 2 || (parts.size() == 3 && parts[2] == "snapshot"))) {
        std::lock_guard lock(entry->mutex);
        return ok(to_json(entry->session.snapshot()));
      }
      if (post && parts.size() == 3 && parts[2] == "actions") {
        const auto body = parse_body(body_text);
        const auto action = string_field(body, "action");
        std::shared_ptr<const Configuration> config;
        if (action == "load") {
          config = store_.config(string_field(body, "config"));
          if (!config) not_found("unknown configuration '" + string_field(body, "config") + "'");
        }
        std::lock_guard lock(entry->mutex);
        auto& session = entry->session;
        if (action == "input") return ok(to_json(session.apply_input(parse_bits(string_field(body, "input")))));
        if (action == "next") return ok(to_json(session.next()));
        if (action == "prev") return ok(to_json(session.prev()));
        if (action == "reset") return ok(to_json(session.reset()));
        if (action == "load") return ok(to_json(session.load_config(config)));
        bad_request("unknown action '" + action + "'");
      }
    }

    not_found("no route for " + std::string(method) + " " + std::string(path));
  } catch (const HttpError& e) {
    return {e.status, Json{{"error", {{"code", e.code}, {"message", e.message}}}}.dump()};
  } catch (const Error& e) {
    const int status = is_parse_error(e.code()) ? 400 : 422;
    return {status, Json{{"error", to_json(e)}}.dump()};
  }
}

HttpServer::HttpServer() : server_(std::make_unique<httplib::Server>()) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    const auto response = service_.handle(req.method, req.path, req.body);
    res.status = response.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(response.body, "application/json");
  };
  server_->Get(R"(/.*)", handler);
  server_->Post(R"(/.*)", handler);
  server_->Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
  const int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) return -1;
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

bool HttpServer::run(const std::string& host, int port) { return server_->listen(host, port); }

void HttpServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace rpga
