#pragma once

// Ownership links between project objects. validate() reports broken links
// and editops resolves them, both from the same edge list and the same
// dependency findings, so the two can never disagree about what depends on
// what.

#include <string>
#include <vector>

#include "lpz/model.hpp"

namespace lpz {

enum class TargetKind { Terminal, DrawingSection, ZoneSection, SectionOrPlan };

enum class OnDelete {
  DeleteOwner,  ///< the owner cannot survive without its target
  Detach,       ///< the owner drops the reference from a list and survives
};

struct RefEdge {
  Id owner = 0;
  std::string path;
  Id target = 0;
  TargetKind kind = TargetKind::Terminal;
  OnDelete on_delete = OnDelete::DeleteOwner;
};

/// Every id reference held by an object of the project, in document order.
std::vector<RefEdge> reference_edges(const Project& p);

/// One validation finding. `owner` is the object that holds the broken
/// invariant. `dependent` marks findings that are resolved by removing the
/// owner (an annotation, table entry, or zone section whose anchor changed),
/// as opposed to malformed data that must be rejected.
struct Finding {
  Violation violation;
  Id owner = 0;
  bool dependent = false;
};

/// All findings in path order. validate() is this list stripped to its
/// violations.
std::vector<Finding> check(const Project& p);

/// Id of every object of the project, whatever its list.
std::vector<Id> all_object_ids(const Project& p);

/// True if `id` names an object of the project.
bool contains_object(const Project& p, Id id);

}  // namespace lpz
