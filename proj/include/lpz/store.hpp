#pragma once

// Project files: the parametric representation as canonical JSON, without
// any derived geometry. The layout is documented in docs/project-format.md.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "lpz/editops.hpp"
#include "lpz/model.hpp"

namespace lpz {

inline constexpr int kFormatVersion = 1;

/// Canonical document: fixed key order, shortest round-trip numbers, two-space
/// indentation, trailing newline. Throws SaveRefused for an invalid project.
std::string save(const Project& p);

/// Inverse of save(). Throws ParseError (with line and column) for malformed
/// or schema-violating text, VersionError for another format_version and
/// IntegrityError when the decoded project does not validate. A formula-table
/// checksum that differs from the bundled table only adds a warning.
Project load(std::string_view text, std::vector<std::string>* warnings = nullptr);

/// The `project` member of a saved document.
nlohmann::ordered_json project_to_json(const Project& p);

/// Commands travel as {"kind": <name>, "payload": {...}}. Payload fields that
/// are omitted keep the payload's defaults.
nlohmann::ordered_json command_to_json(const Command& c);
std::string encode_command(const Command& c);
Command decode_command(std::string_view text);

nlohmann::ordered_json settings_to_json(const GeneralSettings& g);
nlohmann::ordered_json defaults_to_json(const DefaultSettings& d);

/// Writes through a temporary file and a rename so readers never see a
/// partial document.
void save_file(const std::string& path, const Project& p);
Project load_file(const std::string& path, std::vector<std::string>* warnings = nullptr);

}  // namespace lpz
