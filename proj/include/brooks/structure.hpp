#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

struct BlockDecomposition {
    std::vector<VertexSet> blocks;  // sorted by smallest member
    VertexSet cut_vertices;
};

enum class BlockKind { complete, odd_cycle, other };

std::string to_string(BlockKind kind);

/// Biconnected components; bridges are two-vertex blocks and isolated
/// vertices are one-vertex blocks.
BlockDecomposition block_decomposition(const Graph& g);

/// Triangles classify as complete.
BlockKind classify_block(const Graph& g, VertexSet block);

/// Requires a connected graph (DomainError otherwise).
bool is_gallai_tree(const Graph& g);

/// An even cycle v_1..v_l (l >= 4) whose vertex set induces at most one chord.
struct CycleWitness {
    std::vector<int> cycle;  // canonical: smallest vertex first, smaller neighbor second
    std::optional<Edge> chord;

    VertexSet vertex_set() const;
    bool operator==(const CycleWitness&) const = default;
};

/// Checks the witness invariants against g directly; returns the violated
/// invariant, or an empty string when the witness is valid.
std::string witness_violation(const Graph& g, const CycleWitness& w);

/// Shortest "bad" cycle (inducing neither a complete graph nor a chordless odd
/// cycle) in the first block that is neither complete nor an odd cycle, ties
/// broken by canonical form. Enumeration is exponential in the block size.
/// Throws DomainError on disconnected graphs and Gallai trees, std::logic_error
/// if the cycle found violates the witness invariants.
CycleWitness find_witness_cycle(const Graph& g);

struct VertexOrdering {
    std::vector<int> order;
    int root = -1;
};

/// BFS levels of a spanning tree rooted at root, ascending ids within a level.
VertexOrdering spanning_ordering(const Graph& g, int root);

/// True iff order is a permutation starting at root in which every other
/// vertex has an earlier neighbor.
bool has_predecessor_property(const Graph& g, const VertexOrdering& ord);

}  // namespace brooks
