#include "brooks/structure.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "brooks/errors.hpp"

namespace brooks {

std::string to_string(BlockKind kind) {
    switch (kind) {
        case BlockKind::complete: return "complete";
        case BlockKind::odd_cycle: return "odd cycle";
        case BlockKind::other: return "other";
    }
    return "?";
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<Edge> stack;
    BlockDecomposition out;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = timer++;
        int children = 0;
        for (int w : g.neighbors(v).members()) {
            if (w == parent) continue;
            if (disc[w] < 0) {
                stack.emplace_back(v, w);
                ++children;
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent >= 0 || children > 1) out.cut_vertices.insert(v);
                    VertexSet block;
                    for (;;) {
                        Edge e = stack.back();
                        stack.pop_back();
                        block.insert(e.first);
                        block.insert(e.second);
                        if (e == Edge{v, w}) break;
                    }
                    out.blocks.push_back(block);
                }
            } else if (disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };

    for (int v = 0; v < n; ++v) {
        if (disc[v] >= 0) continue;
        if (g.degree(v) == 0) {
            disc[v] = timer++;
            out.blocks.push_back(VertexSet::of({v}));
            continue;
        }
        dfs(v, -1);
    }
    std::sort(out.blocks.begin(), out.blocks.end(), [](VertexSet a, VertexSet b) {
        if (a.min() != b.min()) return a.min() < b.min();
        return a.bits() < b.bits();
    });
    return out;
}

BlockKind classify_block(const Graph& g, VertexSet block) {
    const int k = block.size();
    const int m = g.edges_within(block);
    if (m == k * (k - 1) / 2) return BlockKind::complete;
    if (k >= 5 && k % 2 == 1 && m == k) {
        bool two_regular = true;
        for (int v : block.members()) two_regular &= (g.neighbors(v) & block).size() == 2;
        if (two_regular) return BlockKind::odd_cycle;
    }
    return BlockKind::other;
}

bool is_gallai_tree(const Graph& g) {
    if (!is_connected(g)) throw DomainError("Gallai-tree test requires a connected graph");
    for (VertexSet b : block_decomposition(g).blocks)
        if (classify_block(g, b) == BlockKind::other) return false;
    return true;
}

VertexSet CycleWitness::vertex_set() const {
    VertexSet s;
    for (int v : cycle) s.insert(v);
    return s;
}

std::string witness_violation(const Graph& g, const CycleWitness& w) {
    const int len = static_cast<int>(w.cycle.size());
    if (len < 4) return "cycle shorter than 4";
    if (len % 2 != 0) return "cycle length is odd";
    VertexSet vs = w.vertex_set();
    if (vs.size() != len || !vs.subset_of(g.vertices())) return "cycle vertices are not distinct vertices of the graph";
    for (int i = 0; i < len; ++i)
        if (!g.adjacent(w.cycle[i], w.cycle[(i + 1) % len])) return "consecutive cycle vertices are not adjacent";
    const int m = g.edges_within(vs);
    if (w.chord) {
        auto [a, b] = *w.chord;
        if (!vs.contains(a) || !vs.contains(b) || !g.adjacent(a, b)) return "chord is not an edge between cycle vertices";
        auto ia = std::find(w.cycle.begin(), w.cycle.end(), a) - w.cycle.begin();
        auto ib = std::find(w.cycle.begin(), w.cycle.end(), b) - w.cycle.begin();
        auto gap = std::abs(ia - ib);
        if (gap == 1 || gap == len - 1) return "chord joins consecutive cycle vertices";
        if (m != len + 1) return "induced subgraph has other chords";
    } else if (m != len) {
        return "induced subgraph has an unreported chord";
    }
    return {};
}

namespace {

bool is_bad_cycle(const Graph& g, VertexSet vs) {
    const int k = vs.size();
    const int m = g.edges_within(vs);
    if (m == k * (k - 1) / 2) return false;
    if (k % 2 == 1 && m == k) return false;
    return true;
}

// Canonical simple cycles of length len inside block, in lexicographic order.
std::optional<std::vector<int>> first_bad_cycle(const Graph& g, VertexSet block, int len) {
    std::vector<int> path;
    VertexSet on_path;
    std::function<bool(int, VertexSet)> extend = [&](int v, VertexSet allowed) -> bool {
        if (static_cast<int>(path.size()) == len) {
            return g.adjacent(v, path.front()) && path[1] < path.back() && is_bad_cycle(g, on_path);
        }
        for (int w : (g.neighbors(v) & allowed).members()) {
            path.push_back(w);
            on_path.insert(w);
            if (extend(w, allowed - VertexSet::of({w}))) return true;
            path.pop_back();
            on_path.erase(w);
        }
        return false;
    };
    for (int s : block.members()) {
        VertexSet allowed = block - VertexSet((std::uint64_t{2} << s) - 1);
        path = {s};
        on_path = VertexSet::of({s});
        if (extend(s, allowed)) return path;
    }
    return std::nullopt;
}

}  // namespace

CycleWitness find_witness_cycle(const Graph& g) {
    if (!is_connected(g)) throw DomainError("witness search requires a connected graph");
    std::optional<VertexSet> host;
    for (VertexSet b : block_decomposition(g).blocks) {
        if (classify_block(g, b) == BlockKind::other) {
            host = b;
            break;
        }
    }
    if (!host) throw DomainError("graph is a Gallai tree; no witness cycle exists");

    for (int len = 3; len <= host->size(); ++len) {
        auto cycle = first_bad_cycle(g, *host, len);
        if (!cycle) continue;
        CycleWitness w{*cycle, std::nullopt};
        const int n = len;
        for (int i = 0; i < n && !w.chord; ++i)
            for (int j = i + 2; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;
                if (g.adjacent(w.cycle[i], w.cycle[j])) {
                    w.chord = Edge{std::min(w.cycle[i], w.cycle[j]), std::max(w.cycle[i], w.cycle[j])};
                    break;
                }
            }
        if (auto why = witness_violation(g, w); !why.empty())
            throw std::logic_error("shortest bad cycle is not a valid witness: " + why);
        return w;
    }
    throw std::logic_error("block is neither complete nor an odd cycle but has no bad cycle");
}

VertexOrdering spanning_ordering(const Graph& g, int root) {
    if (root < 0 || root >= g.vertex_count()) throw ValidationError("root " + std::to_string(root) + " is not a vertex");
    if (!is_connected(g)) throw DomainError("spanning ordering requires a connected graph");
    VertexOrdering ord{{root}, root};
    VertexSet seen = VertexSet::of({root});
    VertexSet level = seen;
    while (!level.empty()) {
        VertexSet next;
        for (int v : level.members()) next = next | g.neighbors(v);
        next = next - seen;
        for (int v : next.members()) ord.order.push_back(v);
        seen = seen | next;
        level = next;
    }
    return ord;
}

bool has_predecessor_property(const Graph& g, const VertexOrdering& ord) {
    if (static_cast<int>(ord.order.size()) != g.vertex_count()) return false;
    if (g.vertex_count() == 0) return true;
    if (ord.order.front() != ord.root) return false;
    VertexSet seen;
    for (std::size_t i = 0; i < ord.order.size(); ++i) {
        int v = ord.order[i];
        if (v < 0 || v >= g.vertex_count() || seen.contains(v)) return false;
        if (i > 0 && (g.neighbors(v) & seen).empty()) return false;
        seen.insert(v);
    }
    return true;
}

}  // namespace brooks
