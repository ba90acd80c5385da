// Named graphs, exhaustive/random generators and brute-force oracles shared by
// the unit and acceptance suites. Nothing here calls into the algorithms it is
// used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "brooks/graph.hpp"

namespace zoo {

using brooks::Edge;
using brooks::Graph;

inline Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, e);
}

inline Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, e);
}

inline Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, e);
}

// cycle 0-1-2-3-0 with chord {1,3}
inline Graph k4_minus_edge() { return Graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}}); }

inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

inline Graph star(int leaves) {
    std::vector<Edge> e;
    for (int i = 0; i < leaves; ++i) e.emplace_back(leaves, i);
    return Graph(leaves + 1, e);
}

inline Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, e);
}

inline std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> p;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
    return p;
}

/// Every labeled simple graph on n vertices.
inline void for_each_graph(int n, const std::function<void(const Graph&)>& f) {
    auto pairs = all_pairs(n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
        std::vector<Edge> e;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if ((mask >> i) & 1U) e.push_back(pairs[i]);
        f(Graph(n, e));
    }
}

inline std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    for_each_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

inline bool connected_oracle(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
    for (auto [u, v] : g.edges()) comp[find(u)] = find(v);
    for (int v = 1; v < n; ++v)
        if (find(v) != find(0)) return false;
    return true;
}

inline std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    for_each_graph(n, [&](const Graph& g) {
        if (connected_oracle(g)) out.push_back(g);
    });
    return out;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> e;
    for (auto pr : all_pairs(n))
        if (coin(rng)) e.push_back(pr);
    return Graph(n, e);
}

inline Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    for (;;) {
        Graph g = random_graph(n, p, rng);
        if (connected_oracle(g)) return g;
    }
}

/// All simple cycles, each once, as vertex sequences (brute-force DFS from
/// every start, keeping the rotation that starts at its minimum).
inline std::vector<std::vector<int>> all_cycles(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> pathv;
    std::vector<bool> used(g.vertex_count(), false);
    std::function<void(int)> go = [&](int v) {
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (!g.adjacent(v, w)) continue;
            if (w == pathv[0] && pathv.size() >= 3 && pathv[1] < pathv.back()) out.push_back(pathv);
            if (used[w] || w < pathv[0]) continue;
            used[w] = true;
            pathv.push_back(w);
            go(w);
            pathv.pop_back();
            used[w] = false;
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        pathv = {s};
        used.assign(g.vertex_count(), false);
        used[s] = true;
        go(s);
    }
    return out;
}

/// Blocks via "two edges share a block iff they lie on a common cycle";
/// isolated vertices become singleton blocks.
inline std::vector<brooks::VertexSet> blocks_oracle(const Graph& g) {
    const int m = g.edge_count();
    std::vector<int> cls(m);
    std::iota(cls.begin(), cls.end(), 0);
    std::function<int(int)> find = [&](int x) { return cls[x] == x ? x : cls[x] = find(cls[x]); };
    for (const auto& c : all_cycles(g)) {
        int first = -1;
        for (std::size_t i = 0; i < c.size(); ++i) {
            int e = g.edge_index(c[i], c[(i + 1) % c.size()]);
            if (first < 0)
                first = e;
            else
                cls[find(e)] = find(first);
        }
    }
    std::vector<brooks::VertexSet> blocks(m);
    for (int e = 0; e < m; ++e) {
        blocks[find(e)].insert(g.edges()[e].first);
        blocks[find(e)].insert(g.edges()[e].second);
    }
    std::vector<brooks::VertexSet> out;
    for (int e = 0; e < m; ++e)
        if (find(e) == e) out.push_back(blocks[e]);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) out.push_back(brooks::VertexSet::of({v}));
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return a.bits() < b.bits(); });
    return out;
}

/// Gallai tree by direct block inspection: each block is K_k or a chordless odd cycle.
inline bool gallai_oracle(const Graph& g) {
    for (auto b : blocks_oracle(g)) {
        const int k = b.size();
        const int m = g.edges_within(b);
        bool complete = m == k * (k - 1) / 2;
        bool odd_cycle = k % 2 == 1 && m == k;
        if (!complete && !odd_cycle) return false;
    }
    return true;
}

/// Balanced edge subsets counted by direct in/out tallies.
struct CensusOracle {
    std::uint64_t even = 0, odd = 0;
};

inline CensusOracle census_oracle(const brooks::Orientation& d) {
    const int m = static_cast<int>(d.arcs().size());
    const int n = d.base().vertex_count();
    CensusOracle c;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        std::vector<int> in(n, 0), out(n, 0);
        int size = 0;
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1U) {
                ++out[d.arcs()[i].first];
                ++in[d.arcs()[i].second];
                ++size;
            }
        if (in == out) (size % 2 ? c.odd : c.even) += 1;
    }
    return c;
}

/// Naive full product over the lists.
inline bool colorable_oracle(const Graph& g, const std::vector<std::vector<int>>& lists) {
    const int n = g.vertex_count();
    std::vector<int> idx(n, 0);
    for (const auto& l : lists)
        if (l.empty()) return false;
    for (;;) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (lists[u][idx[u]] == lists[v][idx[v]]) ok = false;
        if (ok) return true;
        int i = 0;
        while (i < n && ++idx[i] == static_cast<int>(lists[i].size())) idx[i++] = 0;
        if (i == n) return false;
    }
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

}  // namespace zoo
