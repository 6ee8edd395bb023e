#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gt/action.hpp"
#include "gt/group.hpp"

namespace gt {

// Group file layout, written byte-for-byte canonically (single spaces,
// trailing newline):
//
//   GROUPFILE 1
//   order 3
//   elems e a b
//   table
//   0 1 2
//   1 2 0
//   2 0 1
//
// The reader tolerates arbitrary whitespace between tokens and validates the
// full set of group invariants on load.
void write_group(std::ostream& os, const Group& g);
std::string group_to_string(const Group& g);
GroupPtr read_group(std::istream& is, bool force = false);
GroupPtr load_group_file(const std::string& path, bool force = false);
void save_group_file(const std::string& path, const Group& g);

// Action file: a group reference (an arbitrary token the caller interprets),
// the serialized domain, and |G| rows over domain indices:
//
//   ACTIONFILE 1
//   group z6.grp
//   domain {0,3} {1,4} {2,5}
//   0 1 2
//   ...
struct ParsedAction {
  std::string group_ref;
  std::vector<std::string> domain;
  std::vector<std::vector<u32>> rows;
};

void write_action(std::ostream& os, const GroupAction& a, const std::string& group_ref);
ParsedAction read_action(std::istream& is);
// Validates the parsed table against the group and builds the action.
GroupAction bind_action(const ParsedAction& parsed, GroupPtr g);

}  // namespace gt
