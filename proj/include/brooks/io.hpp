#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

enum class Format { edge_list, dimacs };

Format parse_format(std::string_view name);

/// Lines "u v" with integer or symbolic names; '#' lines and blank lines are skipped.
/// Vertices are numbered by first appearance and keep their names as labels.
/// A "#vertices n0 n1 ..." line pre-declares vertices in that order, which lets
/// isolated vertices and the exact numbering survive a round trip.
Graph parse_edge_list(std::string_view text);

/// DIMACS .col ("c" comments, one "p edge n m" line, "e u v" 1-based edges).
/// An m that disagrees with the distinct edge count is accepted with a warning.
Graph parse_dimacs(std::string_view text, std::vector<std::string>& warnings);
Graph parse_dimacs(std::string_view text);

/// Same formats, each line read as an arc "tail head".
Orientation parse_orientation(std::string_view text, Format format);

Graph parse_graph(std::string_view text, Format format);

/// Edges are emitted sorted; the output re-parses to the same numbering.
std::string serialize(const Graph& g, Format format);

}  // namespace brooks
