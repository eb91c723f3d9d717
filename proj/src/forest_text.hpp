#pragma once

// Forest parsing at a cursor position, for reuse inside the linear
// combination grammar.

#include "cursor.hpp"
#include "forest_hopf/forest.hpp"

namespace fhopf::detail {

/// True when the cursor (after whitespace) sits at the start of a tree.
bool at_tree_start(Cursor& cur);

/// Parses tree+ starting at the cursor. Stops before any character that
/// cannot begin a tree.
Forest parse_trees(Cursor& cur, const Alphabet& alphabet);

}  // namespace fhopf::detail
