#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brooks {

inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

/// Subset of the vertices {0..63} of some graph, stored as a bitmask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet range(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    int min() const { return std::countr_zero(bits_); }

    void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool operator==(const VertexSet&) const = default;

    std::vector<int> members() const {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

private:
    std::uint64_t bits_ = 0;
};

/// Finite simple undirected graph on dense vertices 0..n-1 (n <= 64).
/// Labels are an I/O concern only and do not take part in equality.
class Graph {
public:
    Graph() = default;
    /// Throws ValidationError on loops or out-of-range endpoints; duplicate edges collapse.
    Graph(int vertex_count, const std::vector<Edge>& edges, std::vector<std::string> labels = {});

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges as (u, v) with u < v, sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int max_degree() const;
    int min_degree() const;
    VertexSet vertices() const { return VertexSet::range(n_); }

    /// Index of the edge {u, v} in edges(), or -1.
    int edge_index(int u, int v) const;
    /// Number of edges with both ends in the set.
    int edges_within(VertexSet s) const;
    bool is_independent(VertexSet s) const;

    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    /// Label of v, or its decimal index when the graph is unlabeled.
    std::string label(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
    std::vector<std::string> labels_;
};

/// A direction for every edge of a base graph; arcs()[i] orients base.edges()[i].
class Orientation {
public:
    Orientation() = default;
    /// Throws ValidationError unless arcs cover base's edge set exactly once.
    Orientation(Graph base, std::vector<Edge> arcs);
    /// Orients edge i from lower to higher endpoint when bit i of mask is 0, reversed otherwise.
    static Orientation from_mask(Graph base, std::uint64_t reverse_mask);

    const Graph& base() const { return base_; }
    /// (tail, head) per edge, aligned with base().edges().
    const std::vector<Edge>& arcs() const { return arcs_; }
    int in_degree(int v) const { return in_[v]; }
    int out_degree(int v) const { return base_.degree(v) - in_[v]; }
    const std::vector<int>& in_degrees() const { return in_; }
    int max_in_degree() const;
    int min_out_degree() const;

private:
    Graph base_;
    std::vector<Edge> arcs_;
    std::vector<int> in_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id -> old id
};

struct Contraction {
    Graph graph;
    int merged_vertex = -1;
    std::vector<int> mapping;  // old id -> new id
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs);

/// Simple-graph contraction: vertices outside the set keep their relative
/// order, the merged vertex is appended last.
Contraction contract_set(const Graph& g, VertexSet vs);

bool is_connected(const Graph& g);

/// Applies a vertex permutation: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

}  // namespace brooks
