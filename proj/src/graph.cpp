#include "brooks/graph.hpp"

#include <algorithm>

#include "brooks/errors.hpp"

namespace brooks {

Graph::Graph(int vertex_count, const std::vector<Edge>& edges, std::vector<std::string> labels)
    : n_(vertex_count), adj_(static_cast<std::size_t>(std::max(vertex_count, 0)), 0),
      labels_(std::move(labels)) {
    if (n_ < 0 || n_ > kMaxVertices)
        throw ValidationError("vertex count " + std::to_string(n_) + " outside 0.." +
                              std::to_string(kMaxVertices));
    if (!labels_.empty() && static_cast<int>(labels_.size()) != n_)
        throw ValidationError("label count does not match vertex count");
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw ValidationError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} has an endpoint outside 0.." + std::to_string(n_ - 1));
        if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(adj_[u]).members())
            if (u < v) edges_.emplace_back(u, v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = n_;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

int Graph::edges_within(VertexSet s) const {
    int twice = 0;
    for (int v : s.members()) twice += std::popcount(adj_[v] & s.bits());
    return twice / 2;
}

bool Graph::is_independent(VertexSet s) const {
    for (int v : s.members())
        if (adj_[v] & s.bits()) return false;
    return true;
}

std::string Graph::label(int v) const {
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

Orientation::Orientation(Graph base, std::vector<Edge> arcs)
    : base_(std::move(base)), arcs_(std::move(arcs)), in_(static_cast<std::size_t>(base_.vertex_count()), 0) {
    if (arcs_.size() != base_.edges().size())
        throw ValidationError("orientation must direct every edge exactly once");
    std::vector<Edge> aligned(arcs_.size(), Edge{-1, -1});
    for (auto [t, h] : arcs_) {
        int i = (t >= 0 && h >= 0 && t < base_.vertex_count() && h < base_.vertex_count())
                    ? base_.edge_index(t, h)
                    : -1;
        if (i < 0) throw ValidationError("arc (" + std::to_string(t) + "," + std::to_string(h) + ") is not an edge");
        if (aligned[static_cast<std::size_t>(i)].first >= 0)
            throw ValidationError("edge oriented twice");
        aligned[static_cast<std::size_t>(i)] = {t, h};
        ++in_[static_cast<std::size_t>(h)];
    }
    arcs_ = std::move(aligned);
}

Orientation Orientation::from_mask(Graph base, std::uint64_t reverse_mask) {
    std::vector<Edge> arcs;
    arcs.reserve(base.edges().size());
    for (std::size_t i = 0; i < base.edges().size(); ++i) {
        auto [u, v] = base.edges()[i];
        arcs.push_back(((reverse_mask >> i) & 1U) ? Edge{v, u} : Edge{u, v});
    }
    return Orientation(std::move(base), std::move(arcs));
}

int Orientation::max_in_degree() const {
    return in_.empty() ? 0 : *std::max_element(in_.begin(), in_.end());
}

int Orientation::min_out_degree() const {
    int d = base_.vertex_count() == 0 ? 0 : base_.vertex_count();
    for (int v = 0; v < base_.vertex_count(); ++v) d = std::min(d, out_degree(v));
    return d;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet vs) {
    if (!vs.subset_of(g.vertices())) throw ValidationError("vertex set has a member outside the graph");
    InducedSubgraph out;
    out.to_original = vs.members();
    std::vector<int> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < out.to_original.size(); ++i) to_new[static_cast<std::size_t>(out.to_original[i])] = static_cast<int>(i);
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (auto [u, v] : g.edges())
        if (vs.contains(u) && vs.contains(v)) edges.emplace_back(to_new[static_cast<std::size_t>(u)], to_new[static_cast<std::size_t>(v)]);
    if (g.has_labels())
        for (int v : out.to_original) labels.push_back(g.label(v));
    out.graph = Graph(vs.size(), edges, std::move(labels));
    return out;
}

Contraction contract_set(const Graph& g, VertexSet vs) {
    if (vs.empty()) throw ValidationError("cannot contract an empty vertex set");
    if (!vs.subset_of(g.vertices())) throw ValidationError("vertex set has a member outside the graph");
    Contraction out;
    out.mapping.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!vs.contains(v)) out.mapping[static_cast<std::size_t>(v)] = next++;
    out.merged_vertex = next;
    for (int v : vs.members()) out.mapping[static_cast<std::size_t>(v)] = next;
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        int a = out.mapping[static_cast<std::size_t>(u)], b = out.mapping[static_cast<std::size_t>(v)];
        if (a != b) edges.emplace_back(a, b);
    }
    out.graph = Graph(next + 1, edges);
    return out;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    VertexSet seen = VertexSet::of({0});
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier.members()) next = next | g.neighbors(v);
        frontier = next - seen;
        seen = seen | next;
    }
    return seen == g.vertices();
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return Graph(g.vertex_count(), edges);
}

}  // namespace brooks
