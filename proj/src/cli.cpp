#include "lpz/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <csignal>
#include <filesystem>
#include <fstream>
#include <optional>

#include "lpz/drafting.hpp"
#include "lpz/numfmt.hpp"
#include "lpz/service.hpp"
#include "lpz/store.hpp"
#include "lpz/tablegen.hpp"
#include "lpz/zonecalc.hpp"

namespace lpz {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

/// Input or output problem reported as exit status 1.
struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Failure("cannot write " + path);
  f << text;
  if (!f.flush()) throw Failure("cannot write " + path);
}

ojson error_json(const std::exception& e) {
  ojson j = {{"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    j["kind"] = "ParseError";
    j["line"] = pe->line();
    j["column"] = pe->column();
  } else if (dynamic_cast<const VersionError*>(&e)) {
    j["kind"] = "VersionError";
  } else if (const auto* ve = dynamic_cast<const ViolationError*>(&e)) {
    j["kind"] = "Invalid";
    ojson vs = ojson::array();
    for (const auto& v : ve->violations()) vs.push_back({{"path", v.path}, {"kind", v.kind}, {"message", v.message}});
    j["violations"] = vs;
  } else if (dynamic_cast<const NotFound*>(&e)) {
    j["kind"] = "NotFound";
  } else {
    j["kind"] = "Error";
  }
  return j;
}

int run_validate(const std::string& file, bool as_json, std::ostream& out) {
  std::vector<std::string> warnings;
  std::optional<ojson> failure;
  std::string text_failure;
  try {
    load_file(file, &warnings);
  } catch (const ParseError& e) {
    failure = error_json(e);
    text_failure = file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": error: " + e.what() + "\n";
  } catch (const ViolationError& e) {
    failure = error_json(e);
    for (const auto& v : e.violations()) text_failure += file + ": " + v.path + ": " + v.message + "\n";
  } catch (const Error& e) {
    failure = error_json(e);
    text_failure = file + ": error: " + std::string(e.what()) + "\n";
  }
  if (as_json) {
    ojson j = {{"file", file}, {"valid", !failure}, {"warnings", warnings}};
    if (failure) j["error"] = *failure;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& w : warnings) out << file << ": warning: " << w << "\n";
    out << (failure ? text_failure : file + ": valid\n");
  }
  return failure ? 1 : 0;
}

std::string render_view(const Project& p, const std::string& view, bool index) {
  if (view == "plan") return emit_svg(render_plan(p), {index});
  if (view.starts_with("section:")) {
    const auto digits = view.substr(8);
    Id sid = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), sid);
    if (!digits.empty() && ec == std::errc() && end == digits.data() + digits.size()) {
      return emit_svg(render_section(p, sid), {index});
    }
  }
  throw CLI::ValidationError("--view", "expected plan or section:<id>, got " + view);
}

std::string relief_svg(const Project& p, const ViewTransform& vt, const ReliefLevel& level, int precision) {
  DisplayList dl;
  const Style st{p.defaults.zone_section.color, p.defaults.zone_section.linetype};
  for (const auto& c : level.contours) dl.add(PathPrim{contour_to_paper(c, vt)}, st);
  const double dot = p.general.terminal_symbols.dot_diameter_plan;
  auto mark = [&](Point3 q) { dl.add(DotPrim{to_paper(vt, {q.x, q.y, 0}), dot}, {}); };
  for (const auto& t : p.terminals) {
    std::visit([&](const auto& c) {
      using T = std::decay_t<decltype(c)>;
      if constexpr (std::is_same_v<T, Rod>) {
        mark(c.apex);
      } else if constexpr (std::is_same_v<T, Mesh>) {
        for (const auto& q : c.ring) mark(q);
      } else {
        mark(c.support1);
        mark(c.support2);
      }
    }, t.construction);
  }
  const Point2 label_at = to_paper(vt, {0, 0, 0});
  dl.add(TextPrim{{label_at.x, label_at.y - 2 * p.general.plan_view.font.size},
                  "hx = " + format_fixed(level.level / 1000, precision),
                  p.general.plan_view.font},
         {});
  return emit_svg(dl);
}

int run_relief(const Project& p, const std::string& dir, std::ostream& out) {
  const auto levels = relief(p.terminals, p.general.zone_type);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Failure("cannot create " + dir + ": " + ec.message());
  const auto vt = plan_transform(p);
  const int precision = p.general.zone_text_style.precision;
  ojson index = ojson::array();
  for (std::size_t i = 0; i < levels.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "relief_%02zu.svg", i);
    write_output((fs::path(dir) / name).string(), relief_svg(p, vt, levels[i], precision), out);
    index.push_back({{"file", name}, {"level_mm", levels[i].level}, {"contours", levels[i].contours.size()}});
  }
  write_output((fs::path(dir) / "index.json").string(), index.dump(2) + "\n", out);
  return 0;
}

double from_mm(double mm, const std::string& unit) {
  if (unit == "cm") return mm / 10;
  if (unit == "m") return mm / 1000;
  return mm;
}

int run_query(const Project& p, Point2 at, bool section, const std::string& unit, bool as_json, std::ostream& out) {
  const ZoneField field(p.terminals, p.general.zone_type);
  const double h = field.height_at(at);
  std::vector<Contour> contours;
  if (section && h > 0) contours = field.horizontal_section(h);
  if (as_json) {
    ojson j = {{"x_mm", at.x}, {"y_mm", at.y}, {"height_mm", h}, {"height", from_mm(h, unit)}, {"unit", unit}};
    if (section) j["contours"] = contours_to_json(contours);
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "height: " << format_sig6(from_mm(h, unit)) << " " << unit << "\n";
  if (section) {
    out << "contours: " << contours.size() << "\n";
    for (const auto& c : contours) out << contour_path_text(c) << "\n";
  }
  return 0;
}

std::pair<std::string, int> split_addr(const std::string& addr) {
  const auto colon = addr.rfind(':');
  if (colon == std::string::npos) throw CLI::ValidationError("--addr", "expected host:port");
  int port = -1;
  const auto ps = addr.substr(colon + 1);
  auto [end, ec] = std::from_chars(ps.data(), ps.data() + ps.size(), port);
  if (ec != std::errc() || end != ps.data() + ps.size() || port < 0 || port > 65535) {
    throw CLI::ValidationError("--addr", "bad port " + ps);
  }
  return {addr.substr(0, colon), port};
}

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int run_serve(const std::string& addr, const std::string& data_dir, std::ostream& out, std::ostream& err) {
  const auto [host, port] = split_addr(addr);
  Service svc({data_dir});
  for (const auto& w : svc.startup_warnings()) err << "warning: " << w << "\n";
  HttpServer server(svc);
  int bound = 0;
  try {
    bound = server.bind(host, port);
  } catch (const Error& e) {
    throw Failure(e.what());
  }
  out << "listening on http://" << host << ":" << bound << std::endl;
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  server.listen();
  g_server = nullptr;
  return 0;
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lightning protection zone tool", "lpz"};
  app.require_subcommand(1);

  std::string file;
  std::string output = "-";
  bool as_json = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a project file");
  validate_cmd->add_option("file", file, "Project file")->required();
  validate_cmd->add_flag("--json", as_json, "Machine-readable report");

  std::string view = "plan";
  bool index = false;
  auto* render_cmd = app.add_subcommand("render", "Draw a view as SVG");
  render_cmd->add_option("file", file, "Project file")->required();
  render_cmd->add_option("--view", view, "plan or section:<id>");
  render_cmd->add_option("-o,--output", output, "Output file, - for stdout");
  render_cmd->add_flag("--index", index, "Tag elements with source object ids");

  std::string format = "csv";
  auto* table_cmd = app.add_subcommand("table", "Write the calculation table");
  table_cmd->add_option("file", file, "Project file")->required();
  table_cmd->add_option("--format", format, "csv or txt")->check(CLI::IsMember({"csv", "txt"}));
  table_cmd->add_option("-o,--output", output, "Output file, - for stdout");

  std::string out_dir;
  auto* relief_cmd = app.add_subcommand("relief", "Write the zone relief as SVG files");
  relief_cmd->add_option("file", file, "Project file")->required();
  relief_cmd->add_option("-o,--output", out_dir, "Output directory")->required();

  double x = 0, y = 0;
  bool section = false;
  std::string unit = "mm";
  auto* query_cmd = app.add_subcommand("query", "Zone height at a plan point");
  query_cmd->add_option("file", file, "Project file")->required();
  query_cmd->add_option("--x", x, "Plan x, mm")->required();
  query_cmd->add_option("--y", y, "Plan y, mm")->required();
  query_cmd->add_flag("--section", section, "Also print the horizontal section at that height");
  query_cmd->add_option("--unit", unit, "mm, cm or m")->check(CLI::IsMember({"mm", "cm", "m"}));
  query_cmd->add_flag("--json", as_json, "Machine-readable output");

  std::string addr = "127.0.0.1:8080";
  std::string data_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP API");
  serve_cmd->add_option("--addr", addr, "host:port, port 0 picks a free one");
  serve_cmd->add_option("--data-dir", data_dir, "Directory of persisted projects");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(file, as_json, out);
    if (serve_cmd->parsed()) return run_serve(addr, data_dir, out, err);

    const Project p = load_file(file);
    if (render_cmd->parsed()) {
      write_output(output, render_view(p, view, index), out);
    } else if (table_cmd->parsed()) {
      const auto t = build_table(p);
      write_output(output, format == "csv" ? table_csv(t) : table_text(t), out);
    } else if (relief_cmd->parsed()) {
      return run_relief(p, out_dir, out);
    } else if (query_cmd->parsed()) {
      return run_query(p, {x, y}, section, unit, as_json, out);
    }
    return 0;
  } catch (const CLI::Error& e) {
    err << "lpz: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "lpz: " << (file.empty() ? "" : file + ": ") << e.what() << "\n";
    return 1;
  }
}

}  // namespace lpz
