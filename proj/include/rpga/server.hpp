#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <thread>

#include "rpga/circuit.hpp"
#include "rpga/fabric.hpp"
#include "rpga/session.hpp"
#include "rpga/truth_table.hpp"

namespace httplib {
class Server;
}

namespace rpga {

struct ApiResponse {
  int status = 200;
  std::string body;  // JSON
};

/// In-memory id -> value store. Circuits, tables, fabrics and configurations
/// are immutable once stored; sessions carry their own lock.
class ResourceStore {
 public:
  struct SessionEntry {
    std::mutex mutex;
    Session session;
    explicit SessionEntry(Session s) : session(std::move(s)) {}
  };

  std::string add(std::shared_ptr<const Circuit> circuit);
  std::string add(std::shared_ptr<const IrreversibleTruthTable> table);
  std::string add(std::shared_ptr<const Fabric> fabric);
  std::string add(std::shared_ptr<const Configuration> config);
  std::string add(std::shared_ptr<SessionEntry> session);

  // nullptr for unknown ids.
  std::shared_ptr<const Circuit> circuit(std::string_view id) const;
  std::shared_ptr<const IrreversibleTruthTable> table(std::string_view id) const;
  std::shared_ptr<const Fabric> fabric(std::string_view id) const;
  std::shared_ptr<const Configuration> config(std::string_view id) const;
  std::shared_ptr<SessionEntry> session(std::string_view id) const;

 private:
  template <typename T>
  using Map = std::map<std::string, T, std::less<>>;

  std::string next_id(const char* prefix);

  mutable std::shared_mutex mutex_;
  std::uint64_t counter_ = 0;
  Map<std::shared_ptr<const Circuit>> circuits_;
  Map<std::shared_ptr<const IrreversibleTruthTable>> tables_;
  Map<std::shared_ptr<const Fabric>> fabrics_;
  Map<std::shared_ptr<const Configuration>> configs_;
  Map<std::shared_ptr<SessionEntry>> sessions_;
};

/// Transport-independent request handler; every response is a library call
/// result rendered as JSON. Routes are listed in the README.
class ApiService {
 public:
  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body);

 private:
  ResourceStore store_;
};

/// HTTP front end over ApiService.
class HttpServer {
 public:
  HttpServer();
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and serves on a background thread; port 0 picks a free port.
  /// Returns the bound port, or -1 if binding failed.
  int start(const std::string& host, int port);
  /// Binds and serves on the calling thread until stop().
  bool run(const std::string& host, int port);
  void stop();

 private:
  ApiService service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace rpga
