#pragma once

#include <cstdint>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

/// Position of the Mr. Paint / Mrs. Correct game: the vertices still in play
/// and the erasers each of them has left (zero for removed vertices).
struct GameState {
    Graph host;
    VertexSet remaining;
    std::vector<int> erasers;
};

struct PaintMove {
    VertexSet marked;
};

struct CorrectMove {
    VertexSet removed;
};

inline constexpr int kPaintVertexLimit = 10;

GameState initial_state(const Graph& g, const std::vector<int>& erasers);

/// Mr. Paint marks, Mrs. Correct removes an independent subset of the marks
/// and pays one eraser for each other marked vertex. Throws ValidationError
/// on an illegal move (including a charge against an empty eraser supply,
/// which is exactly how Mr. Paint wins).
GameState apply_round(const GameState& s, PaintMove paint, CorrectMove correct);

struct GameOptions {
    /// Let Mrs. Correct remove any independent subset of the marks, including
    /// the empty one, instead of only maximal independent subsets.
    bool audit = false;
};

struct GameResult {
    bool correct_wins = false;
    std::uint64_t states_solved = 0;
};

/// Exact minimax value with memoization on (remaining, eraser counts capped at
/// n). Throws CapacityError beyond kPaintVertexLimit remaining vertices.
GameResult solve_game(const GameState& s, GameOptions opts = {});
bool correct_wins(const GameState& s, GameOptions opts = {});

/// k erasers-minus-one convention: k-paintable means Mrs. Correct wins with k-1
/// erasers per vertex. Throws ValidationError when k <= 0.
bool is_k_paintable(const Graph& g, int k, GameOptions opts = {});

/// Erasers = degree - 1. Throws DomainError on a degree-0 vertex.
bool is_degree_paintable(const Graph& g, GameOptions opts = {});

}  // namespace brooks
