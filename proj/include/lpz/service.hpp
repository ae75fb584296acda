#pragma once

// HTTP/JSON facade over projects. Service::handle() is the whole API without
// sockets; HttpServer only adapts it to cpp-httplib. See docs/http-api.md.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "json.hpp"
#include "lpz/contour.hpp"
#include "lpz/model.hpp"

namespace lpz {

struct Request {
  std::string method;
  /// Path without the query string, e.g. "/v1/projects/p1/table".
  std::string path;
  std::map<std::string, std::string> query;
  /// Header names in lowercase.
  std::map<std::string, std::string> headers;
  std::string body;
};

struct Response {
  int status = 200;
  std::string content_type = "application/json";
  std::map<std::string, std::string> headers;
  std::string body;
};

struct ServiceConfig {
  /// Directory holding <id>.lpz files; empty keeps projects in memory only.
  std::string data_dir;
};

class Service {
 public:
  /// Loads every readable <id>.lpz in the data directory.
  explicit Service(ServiceConfig config = {});
  ~Service();

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Thread-safe. Reads run concurrently on immutable snapshots; writes to
  /// one project are serialized.
  Response handle(const Request& req);

  /// Files in the data directory that could not be loaded at startup.
  const std::vector<std::string>& startup_warnings() const noexcept { return startup_warnings_; }

  struct Snapshot;
  struct Entry;

 private:
  std::shared_ptr<Entry> find(const std::string& id) const;
  std::string create(Project p);
  void persist(const std::string& id, const Project& p) const;

  Response list_projects() const;
  Response create_project(const Request& req);
  Response project_route(const Request& req, const std::string& id, const std::vector<std::string>& rest);

  ServiceConfig config_;
  mutable std::shared_mutex registry_mx_;
  std::map<std::string, std::shared_ptr<Entry>> projects_;
  std::uint64_t next_number_ = 1;
  std::vector<std::string> startup_warnings_;
};

/// Contours as arc-aware path arrays in mm Nature:
/// ["M", x, y, "L", x, y, "A", r, ccw, x, y, ..., "Z"], ccw being 1 for a
/// counter-clockwise arc. Arcs longer than half a turn are split.
nlohmann::ordered_json contours_to_json(const std::vector<Contour>& contours);

/// The same path as SVG-like text: "M x y L x y A r ccw x y Z".
std::string contour_path_text(const Contour& c);

/// Binds cpp-httplib to a Service.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();

  /// Returns the bound port; port 0 picks a free one.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lpz
