#include "lpz/service.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <numbers>

#include "httplib.h"
#include "lpz/display.hpp"
#include "lpz/drafting.hpp"
#include "lpz/editops.hpp"
#include "lpz/numfmt.hpp"
#include "lpz/store.hpp"
#include "lpz/tablegen.hpp"
#include "lpz/zonecalc.hpp"

namespace lpz {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Contour paths

namespace {

void push_point(ojson& a, Point2 p) {
  a.push_back(p.x);
  a.push_back(p.y);
}

template <class Emit>
void walk_contour(const Contour& c, Emit&& emit) {
  if (c.segments.empty()) return;
  const Point2 start =
      std::visit([](const auto& s) -> Point2 {
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, LineSeg>) {
          return s.a;
        } else {
          return s.start_point();
        }
      }, c.segments.front());
  emit.move(start);
  for (const auto& seg : c.segments) {
    if (const auto* l = std::get_if<LineSeg>(&seg)) {
      emit.line(l->b);
      continue;
    }
    const auto& a = std::get<ArcSeg>(seg);
    const int pieces = std::max(1, static_cast<int>(std::ceil(std::abs(a.sweep) / std::numbers::pi - 1e-12)));
    for (int k = 1; k <= pieces; ++k) {
      emit.arc(a.radius, a.sweep > 0, a.point_at(a.start + a.sweep * k / pieces));
    }
  }
  emit.close();
}

struct JsonPath {
  ojson& a;
  void move(Point2 p) { a.push_back("M"); push_point(a, p); }
  void line(Point2 p) { a.push_back("L"); push_point(a, p); }
  void arc(double r, bool ccw, Point2 p) {
    a.push_back("A");
    a.push_back(r);
    a.push_back(ccw ? 1 : 0);
    push_point(a, p);
  }
  void close() { a.push_back("Z"); }
};

struct TextPath {
  std::string& s;
  static std::string num(double v) { return format_sig6(std::abs(v) < 1e-9 ? 0.0 : v); }
  void put(Point2 p) { s += num(p.x) + " " + num(p.y); }
  void move(Point2 p) { s += "M "; put(p); }
  void line(Point2 p) { s += " L "; put(p); }
  void arc(double r, bool ccw, Point2 p) {
    s += " A " + num(r) + (ccw ? " 1 " : " 0 ");
    put(p);
  }
  void close() { s += " Z"; }
};

}  // namespace

nlohmann::ordered_json contours_to_json(const std::vector<Contour>& contours) {
  ojson out = ojson::array();
  for (const auto& c : contours) {
    ojson path = ojson::array();
    walk_contour(c, JsonPath{path});
    out.push_back(std::move(path));
  }
  return out;
}

std::string contour_path_text(const Contour& c) {
  std::string s;
  walk_contour(c, TextPath{s});
  return s;
}

// ---------------------------------------------------------------------------
// State

struct Service::Snapshot {
  Project project;
  std::uint64_t revision = 0;

  const ZoneField& field() const {
    std::call_once(field_once_, [&] {
      field_ = std::make_unique<ZoneField>(project.terminals, project.general.zone_type);
    });
    return *field_;
  }

  const std::string& plan_svg() const {
    std::call_once(plan_once_, [&] { plan_ = emit_svg(render_plan(project)); });
    return plan_;
  }

 private:
  mutable std::once_flag field_once_;
  mutable std::unique_ptr<ZoneField> field_;
  mutable std::once_flag plan_once_;
  mutable std::string plan_;
};

struct Service::Entry {
  std::mutex writer;
  mutable std::shared_mutex mx;
  std::shared_ptr<const Snapshot> snap;

  std::shared_ptr<const Snapshot> current() const {
    std::shared_lock lock(mx);
    return snap;
  }

  void publish(Project p, std::uint64_t revision) {
    auto s = std::make_shared<Snapshot>();
    s->project = std::move(p);
    s->revision = revision;
    std::unique_lock lock(mx);
    snap = std::move(s);
  }
};

namespace {

/// Malformed request outside any document: query parameters, headers.
struct BadRequest : Error {
  using Error::Error;
};

bool valid_id(std::string_view id) {
  return !id.empty() && id.size() <= 64 && std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
  });
}

Response json_response(int status, const ojson& body) { return {status, "application/json", {}, body.dump() + "\n"}; }

ojson violations_json(const std::vector<Violation>& vs) {
  ojson a = ojson::array();
  for (const auto& v : vs) a.push_back({{"path", v.path}, {"kind", v.kind}, {"message", v.message}});
  return a;
}

Response error(int status, const std::string& kind, const std::string& message, ojson extra = ojson::object()) {
  ojson e = {{"kind", kind}, {"message", message}};
  for (auto it = extra.begin(); it != extra.end(); ++it) e[it.key()] = it.value();
  return json_response(status, {{"error", e}});
}

/// Maps library errors to HTTP statuses.
Response from_exception() {
  try {
    throw;
  } catch (const ParseError& e) {
    return error(400, "ParseError", e.what(), {{"line", e.line()}, {"column", e.column()}});
  } catch (const BadRequest& e) {
    return error(400, "BadRequest", e.what());
  } catch (const VersionError& e) {
    return error(400, "VersionError", e.what());
  } catch (const NotFound& e) {
    return error(404, "NotFound", e.what());
  } catch (const CommandRejected& e) {
    return error(422, "CommandRejected", e.what(), {{"violations", violations_json(e.violations())}});
  } catch (const ViolationError& e) {
    return error(422, "Invalid", e.what(), {{"violations", violations_json(e.violations())}});
  } catch (const RefError& e) {
    return error(422, "RefError", e.what());
  } catch (const GeometryError& e) {
    return error(422, "GeometryError", e.what());
  } catch (const KindError& e) {
    return error(422, "KindError", e.what());
  } catch (const DomainError& e) {
    return error(422, "DomainError", e.what());
  } catch (const NoTerminals& e) {
    return error(422, "NoTerminals", e.what());
  } catch (const std::exception& e) {
    return error(500, "Internal", e.what());
  }
}

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::size_t i = 0;
  while (i < path.size()) {
    if (path[i] == '/') {
      ++i;
      continue;
    }
    const auto j = std::min(path.find('/', i), path.size());
    parts.push_back(path.substr(i, j - i));
    i = j;
  }
  return parts;
}

double query_number(const Request& req, const std::string& key) {
  auto it = req.query.find(key);
  if (it == req.query.end()) throw BadRequest("missing query parameter " + key);
  double v = 0;
  const auto& s = it->second;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    throw BadRequest("query parameter " + key + " is not a number");
  }
  return v;
}

std::optional<std::uint64_t> if_match(const Request& req) {
  auto it = req.headers.find("if-match");
  if (it == req.headers.end()) return std::nullopt;
  std::string v = it->second;
  if (v.starts_with("W/")) v = v.substr(2);
  if (v.size() >= 2 && v.front() == '"' && v.back() == '"') v = v.substr(1, v.size() - 2);
  std::uint64_t n = 0;
  auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || end != v.data() + v.size()) throw BadRequest("If-Match must carry a revision number");
  return n;
}

std::string etag(std::uint64_t revision) { return "\"" + std::to_string(revision) + "\""; }

ojson change_set_json(const ChangeSet& cs) {
  return {{"created", cs.created}, {"deleted", cs.deleted}, {"modified", cs.modified}, {"diagnostics", cs.diagnostics}};
}

ojson optional_number(const std::optional<double>& v) { return v ? ojson(*v) : ojson(nullptr); }

ojson table_json(const CalcTable& t) {
  ojson rows = ojson::array();
  for (const auto& r : t.rows) {
    const auto cells = row_cells(t, r);
    rows.push_back({{"labels", r.labels},
                    {"h", optional_number(r.h)},
                    {"h0", optional_number(r.h0)},
                    {"hx", optional_number(r.hx)},
                    {"rx", optional_number(r.rx)},
                    {"L", optional_number(r.L)},
                    {"hc", optional_number(r.hc)},
                    {"rcx", optional_number(r.rcx)},
                    {"type", r.type_text},
                    {"is_double", r.is_double},
                    {"entry_ids", r.entry_ids},
                    {"cells", cells}});
  }
  ojson warnings = ojson::array();
  for (const auto& w : t.warnings) warnings.push_back({{"entry", w.entry}, {"message", w.message}});
  return {{"unit", to_string(t.settings.unit)},
          {"precision", t.settings.precision},
          {"columns", TableHeader::standard().symbols},
          {"rows", rows},
          {"warnings", warnings}};
}

}  // namespace

// ---------------------------------------------------------------------------

Service::Service(ServiceConfig config) : config_(std::move(config)) {
  if (config_.data_dir.empty()) return;
  fs::create_directories(config_.data_dir);
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(config_.data_dir)) {
    if (e.is_regular_file() && e.path().extension() == ".lpz") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    const auto id = f.stem().string();
    if (!valid_id(id)) continue;
    try {
      auto entry = std::make_shared<Entry>();
      entry->publish(load_file(f.string()), 0);
      projects_[id] = std::move(entry);
      if (id.size() > 1 && id[0] == 'p') {
        std::uint64_t n = 0;
        auto [end, ec] = std::from_chars(id.data() + 1, id.data() + id.size(), n);
        if (ec == std::errc() && end == id.data() + id.size()) next_number_ = std::max(next_number_, n + 1);
      }
    } catch (const std::exception& e) {
      startup_warnings_.push_back(f.string() + ": " + e.what());
    }
  }
}

Service::~Service() = default;

std::shared_ptr<Service::Entry> Service::find(const std::string& id) const {
  std::shared_lock lock(registry_mx_);
  auto it = projects_.find(id);
  if (it == projects_.end()) throw NotFound("no project " + id);
  return it->second;
}

void Service::persist(const std::string& id, const Project& p) const {
  if (config_.data_dir.empty()) return;
  save_file((fs::path(config_.data_dir) / (id + ".lpz")).string(), p);
}

std::string Service::create(Project p) {
  if (auto vs = validate(p); !vs.empty()) throw IntegrityError(std::move(vs));
  std::unique_lock lock(registry_mx_);
  std::string id;
  do {
    id = "p" + std::to_string(next_number_++);
  } while (projects_.count(id));
  persist(id, p);
  auto entry = std::make_shared<Entry>();
  entry->publish(std::move(p), 0);
  projects_[id] = std::move(entry);
  return id;
}

Response Service::handle(const Request& req) {
  try {
    const auto parts = split_path(req.path);
    if (parts.empty() || parts[0] != "v1") return error(404, "NotFound", "unknown route " + req.path);
    if (parts.size() == 2 && parts[1] == "health") return json_response(200, {{"status", "ok"}});
    if (parts.size() >= 2 && parts[1] == "projects") {
      if (parts.size() == 2) {
        if (req.method == "GET") return list_projects();
        if (req.method == "POST") return create_project(req);
        return error(405, "MethodNotAllowed", req.method + " " + req.path);
      }
      if (!valid_id(parts[2])) return error(404, "NotFound", "no project " + parts[2]);
      return project_route(req, parts[2], {parts.begin() + 3, parts.end()});
    }
    return error(404, "NotFound", "unknown route " + req.path);
  } catch (...) {
    return from_exception();
  }
}

Response Service::list_projects() const {
  std::vector<std::pair<std::string, std::shared_ptr<Entry>>> all;
  {
    std::shared_lock lock(registry_mx_);
    all.assign(projects_.begin(), projects_.end());
  }
  ojson out = ojson::array();
  for (const auto& [id, e] : all) out.push_back({{"id", id}, {"revision", e->current()->revision}});
  return json_response(200, out);
}

Response Service::create_project(const Request& req) {
  const bool blank = std::all_of(req.body.begin(), req.body.end(), [](unsigned char c) { return std::isspace(c); });
  const auto id = create(blank ? new_project() : load(req.body));
  auto r = json_response(201, {{"id", id}, {"revision", 0}});
  r.headers["Location"] = "/v1/projects/" + id;
  r.headers["ETag"] = etag(0);
  return r;
}

Response Service::project_route(const Request& req, const std::string& id, const std::vector<std::string>& rest) {
  auto entry = find(id);
  const auto method_is = [&](const char* m) { return req.method == m; };
  auto not_allowed = [&]() { return error(405, "MethodNotAllowed", req.method + " " + req.path); };

  // Writes.
  if (rest.empty() && method_is("PUT")) {
    Project p = load(req.body);
    std::lock_guard w(entry->writer);
    const auto cur = entry->current();
    if (auto want = if_match(req); want && *want != cur->revision) {
      return error(409, "Conflict", "revision is " + std::to_string(cur->revision), {{"revision", cur->revision}});
    }
    persist(id, p);
    entry->publish(std::move(p), cur->revision + 1);
    auto r = json_response(200, {{"revision", cur->revision + 1}});
    r.headers["ETag"] = etag(cur->revision + 1);
    return r;
  }
  if (rest.size() == 1 && rest[0] == "commands") {
    if (!method_is("POST")) return not_allowed();
    const Command c = decode_command(req.body);
    std::lock_guard w(entry->writer);
    const auto cur = entry->current();
    if (auto want = if_match(req); want && *want != cur->revision) {
      return error(409, "Conflict", "revision is " + std::to_string(cur->revision), {{"revision", cur->revision}});
    }
    auto [next, changes] = lpz::apply(cur->project, c);
    persist(id, next);
    entry->publish(std::move(next), cur->revision + 1);
    auto r = json_response(200, {{"revision", cur->revision + 1}, {"changes", change_set_json(changes)}});
    r.headers["ETag"] = etag(cur->revision + 1);
    return r;
  }

  // Reads: one snapshot for the whole request.
  if (!method_is("GET")) return not_allowed();
  const auto snap = entry->current();
  const Project& p = snap->project;
  Response r;
  if (rest.empty()) {
    r = {200, "application/json", {}, save(p)};
  } else if (rest.size() == 2 && rest[0] == "render" && rest[1] == "plan") {
    const bool index = req.query.count("index") && req.query.at("index") != "0";
    r = {200, "image/svg+xml", {}, index ? emit_svg(render_plan(p), {true}) : snap->plan_svg()};
  } else if (rest.size() == 3 && rest[0] == "render" && rest[1] == "section") {
    Id sid = 0;
    const auto& s = rest[2];
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), sid);
    if (ec != std::errc() || end != s.data() + s.size()) throw NotFound("no drawing section " + s);
    const bool index = req.query.count("index") && req.query.at("index") != "0";
    r = {200, "image/svg+xml", {}, emit_svg(render_section(p, sid), {index})};
  } else if (rest.size() == 2 && rest[0] == "query" && rest[1] == "height") {
    const double h = snap->field().height_at({query_number(req, "x"), query_number(req, "y")});
    r = json_response(200, {{"height_mm", h}});
  } else if (rest.size() == 2 && rest[0] == "query" && rest[1] == "section") {
    const auto& f = snap->field();
    const double h = f.height_at({query_number(req, "x"), query_number(req, "y")});
    const auto contours = h > 0 ? f.horizontal_section(h) : std::vector<Contour>{};
    r = json_response(200, {{"height_mm", h}, {"contours", contours_to_json(contours)}});
  } else if (rest.size() == 1 && rest[0] == "relief") {
    if (p.terminals.empty()) throw NoTerminals();
    ojson levels = ojson::array();
    for (const auto& lv : snap->field().relief()) {
      levels.push_back({{"level_mm", lv.level}, {"contours", contours_to_json(lv.contours)}});
    }
    r = json_response(200, levels);
  } else if (rest.size() == 1 && rest[0] == "table") {
    const auto table = build_table(p);
    auto accept = req.headers.find("accept");
    if (accept != req.headers.end() && accept->second.find("text/csv") != std::string::npos) {
      r = {200, "text/csv; charset=utf-8", {}, table_csv(table)};
    } else {
      r = json_response(200, table_json(table));
    }
  } else {
    return error(404, "NotFound", "unknown route " + req.path);
  }
  r.headers["ETag"] = etag(snap->revision);
  return r;
}

// ---------------------------------------------------------------------------
// cpp-httplib adapter

struct HttpServer::Impl {
  explicit Impl(Service& s) : service(s) {}
  Service& service;
  httplib::Server server;
};

HttpServer::HttpServer(Service& service) : impl_(std::make_unique<Impl>(service)) {
  auto handler = [this](const httplib::Request& hreq, httplib::Response& hres) {
    Request req;
    req.method = hreq.method;
    req.path = hreq.path;
    for (const auto& [k, v] : hreq.params) req.query.emplace(k, v);
    for (const auto& [k, v] : hreq.headers) {
      std::string key = k;
      std::transform(key.begin(), key.end(), key.begin(), [](unsigned char c) { return std::tolower(c); });
      req.headers.emplace(std::move(key), v);
    }
    req.body = hreq.body;
    auto res = impl_->service.handle(req);
    hres.status = res.status;
    for (const auto& [k, v] : res.headers) hres.set_header(k, v);
    hres.set_content(res.body, res.content_type);
  };
  auto& s = impl_->server;
  s.set_tcp_nodelay(true);
  s.Get(R"(/.*)", handler);
  s.Post(R"(/.*)", handler);
  s.Put(R"(/.*)", handler);
  s.Delete(R"(/.*)", handler);
  s.Patch(R"(/.*)", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) {
    const int p = impl_->server.bind_to_any_port(host);
    if (p < 0) throw Error("cannot bind " + host);
    return p;
  }
  if (!impl_->server.bind_to_port(host, port)) throw Error("cannot bind " + host + ":" + std::to_string(port));
  return port;
}

void HttpServer::listen() { impl_->server.listen_after_bind(); }

void HttpServer::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace lpz
