#pragma once

#include "lpz/model.hpp"

namespace lpz::testkit {

/// Hand-built project exercising every drawing element: freestanding and
/// mounted rods, a mesh, a wire, a double wire, one section with its marks,
/// all four dimension kinds, a four-rod grounding electrode and a table.
/// Zone B, plan cut at 7.973 m.
Project golden_project();

AirTerminal make_rod(Id id, const std::string& label, Point3 apex, std::optional<double> height = std::nullopt);

}  // namespace lpz::testkit
