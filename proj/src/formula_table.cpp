#include "lpz/formula_table.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <set>

namespace lpz {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

struct RawEntry {
  double value = 0;
  int line = 0;
};

using Sections = std::map<std::string, std::map<std::string, RawEntry>>;

Sections parse_sections(std::string_view text) {
  Sections out;
  std::string current;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    auto hash = raw.find('#');
    std::string line = trim(hash == std::string_view::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']' || line.size() < 3) throw ParseError("malformed section header", line_no, 1);
      current = line.substr(1, line.size() - 2);
      if (out.count(current)) throw ParseError("duplicate section [" + current + "]", line_no, 1);
      out[current];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", line_no, 1);
    if (current.empty()) throw ParseError("key outside of a section", line_no, 1);
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string val = trim(std::string_view(line).substr(eq + 1));
    double v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw ParseError("value of '" + key + "' is not a number", line_no, static_cast<int>(eq) + 2);
    }
    auto& sec = out[current];
    if (sec.count(key)) throw ParseError("duplicate key '" + key + "'", line_no, 1);
    sec[key] = {v, line_no};
  }
  return out;
}

class SectionReader {
 public:
  SectionReader(Sections& all, const std::string& name) : name_(name) {
    auto it = all.find(name);
    if (it == all.end()) throw ParseError("missing section [" + name + "]", 0, 0);
    entries_ = &it->second;
    all_ = &all;
  }

  double get(const std::string& key) {
    auto it = entries_->find(key);
    if (it == entries_->end()) throw ParseError("missing key '" + key + "' in [" + name_ + "]", 0, 0);
    used_.insert(key);
    return it->second.value;
  }

  void finish() {
    for (const auto& [k, e] : *entries_) {
      if (!used_.count(k)) throw ParseError("unknown key '" + k + "' in [" + name_ + "]", e.line, 1);
    }
    all_->erase(name_);
  }

 private:
  std::string name_;
  std::map<std::string, RawEntry>* entries_ = nullptr;
  Sections* all_ = nullptr;
  std::set<std::string> used_;
};

const char* zone_key(ZoneType z) { return z == ZoneType::A ? "A" : "B"; }

}  // namespace

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
  std::string hex;
  hex.reserve(len * 2);
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::size_t FormulaTable::slot(ZoneType zone, TerminalKind kind) {
  return (zone == ZoneType::A ? 0 : 2) + (kind == TerminalKind::Rod ? 0 : 1);
}

const SingleCoeffs& FormulaTable::single(ZoneType zone, TerminalKind kind) const {
  return single_[slot(zone, kind)];
}

const std::vector<PairPiece>& FormulaTable::pair(ZoneType zone, TerminalKind kind) const {
  return pair_[slot(zone, kind)];
}

std::optional<double> FormulaTable::wire_sag(double span) const {
  for (const auto& r : sag_) {
    if (span <= r.span_max) return r.sag;
  }
  return std::nullopt;
}

FormulaTable FormulaTable::parse(std::string_view text) {
  Sections sections = parse_sections(text);
  FormulaTable t;

  {
    SectionReader r(sections, "table");
    t.version_ = static_cast<int>(r.get("version"));
    t.max_height_ = r.get("max_height_mm");
    r.finish();
  }
  if (t.version_ != 1) throw ParseError("unsupported formula table version", 0, 0);

  for (ZoneType z : {ZoneType::A, ZoneType::B}) {
    for (TerminalKind k : {TerminalKind::Rod, TerminalKind::Wire}) {
      const std::string base = k == TerminalKind::Rod ? "rod" : "wire";
      {
        SectionReader r(sections, base + "." + zone_key(z));
        auto& s = t.single_[slot(z, k)];
        s.h0_factor = r.get("h0_factor");
        s.r0_factor = r.get("r0_factor");
        s.r0_h_coeff = r.get("r0_h_coeff");
        r.finish();
      }
      auto& pieces = t.pair_[slot(z, k)];
      for (int i = 1;; ++i) {
        std::string name = base + "_pair." + zone_key(z) + ".piece" + std::to_string(i);
        if (!sections.count(name)) break;
        SectionReader r(sections, name);
        PairPiece pc;
        pc.l_max = r.get("l_max");
        pc.hc_k0 = r.get("hc_k0");
        pc.hc_k1 = r.get("hc_k1");
        pc.rc_k = r.get("rc_k");
        pc.rc_ref = r.get("rc_ref");
        r.finish();
        if (!pieces.empty() && pc.l_max <= pieces.back().l_max) {
          throw ParseError("piece boundaries of [" + name + "] are not increasing", 0, 0);
        }
        pieces.push_back(pc);
      }
      if (pieces.empty()) throw ParseError("no pair pieces for " + base + "." + zone_key(z), 0, 0);
    }
  }

  for (int i = 1;; ++i) {
    std::string name = "wire_sag." + std::to_string(i);
    if (!sections.count(name)) break;
    SectionReader r(sections, name);
    SagRule rule{r.get("span_max_mm"), r.get("sag_mm")};
    r.finish();
    if (!t.sag_.empty() && rule.span_max <= t.sag_.back().span_max) {
      throw ParseError("sag spans are not increasing", 0, 0);
    }
    t.sag_.push_back(rule);
  }
  if (t.sag_.empty()) throw ParseError("missing [wire_sag.1]", 0, 0);

  if (!sections.empty()) throw ParseError("unknown section [" + sections.begin()->first + "]", 0, 0);

  t.checksum_ = sha256_hex(text);
  return t;
}

const FormulaTable& FormulaTable::standard() {
  static const FormulaTable table = parse(standard_formula_text());
  return table;
}

}  // namespace lpz
