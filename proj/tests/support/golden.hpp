#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace lpz::testkit {

/// Compares `actual` with the golden file `name`; LPZ_UPDATE_GOLDEN=1
/// rewrites the file instead. Returns an empty string on match.
inline std::string check_golden(const std::string& dir, const std::string& name, const std::string& actual) {
  const std::string path = dir + "/" + name;
  if (const char* u = std::getenv("LPZ_UPDATE_GOLDEN"); u && std::string(u) == "1") {
    std::ofstream(path, std::ios::binary) << actual;
    return {};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return "missing golden file " + path;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (ss.str() != actual) return "output differs from " + path;
  return {};
}

}  // namespace lpz::testkit
