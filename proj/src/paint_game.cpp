#include "brooks/paint_game.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

#include "brooks/errors.hpp"

namespace brooks {

GameState initial_state(const Graph& g, const std::vector<int>& erasers) {
    if (static_cast<int>(erasers.size()) != g.vertex_count())
        throw ValidationError("eraser function does not cover every vertex");
    for (int e : erasers)
        if (e < 0) throw ValidationError("eraser counts must be nonnegative");
    return GameState{g, g.vertices(), erasers};
}

GameState apply_round(const GameState& s, PaintMove paint, CorrectMove correct) {
    if (paint.marked.empty()) throw ValidationError("Mr. Paint must mark a nonempty set");
    if (!paint.marked.subset_of(s.remaining)) throw ValidationError("Mr. Paint marked a removed vertex");
    if (!correct.removed.subset_of(paint.marked)) throw ValidationError("Mrs. Correct removed an unmarked vertex");
    if (!s.host.is_independent(correct.removed)) throw ValidationError("Mrs. Correct removed a dependent set");
    const VertexSet charged = paint.marked - correct.removed;
    for (int v : charged.members())
        if (s.erasers[v] == 0)
            throw ValidationError("vertex " + s.host.label(v) + " has no eraser left; Mr. Paint wins");
    GameState next = s;
    next.remaining = s.remaining - correct.removed;
    for (int v : charged.members()) --next.erasers[v];
    for (int v : correct.removed.members()) next.erasers[v] = 0;
    return next;
}

namespace {

class Solver {
public:
    Solver(const Graph& g, GameOptions opts) : n_(g.vertex_count()), audit_(opts.audit) {
        for (int v = 0; v < n_; ++v) adj_[v] = static_cast<std::uint32_t>(g.neighbors(v).bits());
    }

    bool wins(std::uint32_t remaining, std::array<int, kPaintVertexLimit> erasers) {
        if (remaining == 0) return true;
        std::uint64_t key = remaining;
        for (int v = 0; v < n_; ++v) {
            if (!((remaining >> v) & 1U)) erasers[v] = 0;
            erasers[v] = std::min(erasers[v], n_);
            key |= static_cast<std::uint64_t>(erasers[v]) << (kPaintVertexLimit + 4 * v);
        }
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        std::uint32_t empty_handed = 0;
        for (int v = 0; v < n_; ++v)
            if (((remaining >> v) & 1U) && erasers[v] == 0) empty_handed |= 1U << v;

        bool value = true;
        for (std::uint32_t marked = remaining; marked && value; marked = (marked - 1) & remaining) {
            if (!paint_move_answered(remaining, erasers, marked, empty_handed & marked)) value = false;
        }
        memo_.emplace(key, value);
        return value;
    }

    std::uint64_t states() const { return memo_.size(); }

private:
    bool independent(std::uint32_t s) const {
        for (std::uint32_t b = s; b; b &= b - 1)
            if (adj_[std::countr_zero(b)] & s) return false;
        return true;
    }

    std::uint32_t neighborhood(std::uint32_t s) const {
        std::uint32_t out = 0;
        for (std::uint32_t b = s; b; b &= b - 1) out |= adj_[std::countr_zero(b)];
        return out;
    }

    // Does Mrs. Correct have a winning reply to this paint move?
    bool paint_move_answered(std::uint32_t remaining, const std::array<int, kPaintVertexLimit>& erasers,
                             std::uint32_t marked, std::uint32_t forced) {
        if (!independent(forced)) return false;
        const std::uint32_t free = marked & ~forced & ~neighborhood(forced);
        // submasks of free, largest first
        for (std::uint32_t extra = free;; extra = (extra - 1) & free) {
            const std::uint32_t removed = forced | extra;
            if (independent(extra)) {
                bool maximal = (marked & ~removed & ~neighborhood(removed)) == 0;
                if (audit_ || maximal) {
                    auto next = erasers;
                    for (std::uint32_t b = marked & ~removed; b; b &= b - 1) --next[std::countr_zero(b)];
                    if (wins(remaining & ~removed, next)) return true;
                }
            }
            if (extra == 0) break;
        }
        return false;
    }

    int n_;
    bool audit_;
    std::array<std::uint32_t, kPaintVertexLimit> adj_{};
    std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

GameResult solve_game(const GameState& s, GameOptions opts) {
    if (s.remaining.size() > kPaintVertexLimit || s.host.vertex_count() > kPaintVertexLimit)
        throw CapacityError("game solver is limited to " + std::to_string(kPaintVertexLimit) + " vertices");
    if (static_cast<int>(s.erasers.size()) != s.host.vertex_count())
        throw ValidationError("eraser vector does not match the host graph");
    std::array<int, kPaintVertexLimit> erasers{};
    for (int v = 0; v < s.host.vertex_count(); ++v) {
        if (s.erasers[v] < 0) throw ValidationError("eraser counts must be nonnegative");
        erasers[v] = s.erasers[v];
    }
    Solver solver(s.host, opts);
    GameResult r;
    r.correct_wins = solver.wins(static_cast<std::uint32_t>(s.remaining.bits()), erasers);
    r.states_solved = solver.states();
    return r;
}

bool correct_wins(const GameState& s, GameOptions opts) { return solve_game(s, opts).correct_wins; }

bool is_k_paintable(const Graph& g, int k, GameOptions opts) {
    if (k <= 0) throw ValidationError("paintability number must be positive");
    return correct_wins(initial_state(g, std::vector<int>(g.vertex_count(), k - 1)), opts);
}

bool is_degree_paintable(const Graph& g, GameOptions opts) {
    std::vector<int> erasers(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 0) throw DomainError("vertex " + g.label(v) + " has degree 0");
        erasers[v] = g.degree(v) - 1;
    }
    return correct_wins(initial_state(g, erasers), opts);
}

}  // namespace brooks
