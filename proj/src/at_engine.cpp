#include "brooks/at_engine.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <stdexcept>

#include "brooks/errors.hpp"

namespace brooks {

namespace {

void check_census_capacity(const Orientation& d, int edge_limit) {
    if (d.base().edge_count() > edge_limit || d.base().edge_count() > 62)
        throw CapacityError("Eulerian census enumerates 2^m subsets; m = " + std::to_string(d.base().edge_count()) +
                            " exceeds the limit " + std::to_string(edge_limit));
}

EulerianCensus census_serial(const Orientation& d) {
    const auto& arcs = d.arcs();
    const int m = static_cast<int>(arcs.size());
    const int n = d.base().vertex_count();
    EulerianCensus c;
    std::vector<int> net(n);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
        std::fill(net.begin(), net.end(), 0);
        for (int i = 0; i < m; ++i)
            if ((s >> i) & 1U) {
                ++net[arcs[i].first];
                --net[arcs[i].second];
            }
        if (std::all_of(net.begin(), net.end(), [](int x) { return x == 0; })) {
            if (std::popcount(s) % 2 == 0)
                ++c.even_count;
            else
                ++c.odd_count;
        }
        ++c.edge_subsets_examined;
    }
    return c;
}

EulerianCensus census_parallel(const Orientation& d) {
    const auto& arcs = d.arcs();
    const int m = static_cast<int>(arcs.size());
    const int high = std::min(m, 8);
    const int low = m - high;
    const std::int64_t chunks = std::int64_t{1} << high;
    std::uint64_t even = 0, odd = 0;

#pragma omp parallel for schedule(dynamic) reduction(+ : even, odd)
    for (std::int64_t chunk = 0; chunk < chunks; ++chunk) {
        std::array<int, kMaxVertices> net{};
        int unbalanced = 0;
        auto flip = [&](int edge, int sign) {
            auto [t, h] = arcs[edge];
            unbalanced -= (net[t] != 0) + (net[h] != 0);
            net[t] += sign;
            net[h] -= sign;
            unbalanced += (net[t] != 0) + (net[h] != 0);
        };
        std::uint64_t subset = static_cast<std::uint64_t>(chunk) << low;
        for (int i = low; i < m; ++i)
            if ((subset >> i) & 1U) flip(i, +1);
        int parity = std::popcount(subset) & 1;
        const std::uint64_t steps = std::uint64_t{1} << low;
        for (std::uint64_t j = 0;; ++j) {
            if (unbalanced == 0) (parity ? odd : even) += 1;
            if (j + 1 == steps) break;
            int bit = std::countr_zero(j + 1);
            subset ^= std::uint64_t{1} << bit;
            flip(bit, ((subset >> bit) & 1U) ? +1 : -1);
            parity ^= 1;
        }
    }
    EulerianCensus c;
    c.even_count = even;
    c.odd_count = odd;
    c.edge_subsets_examined = std::uint64_t{1} << m;
    return c;
}

}  // namespace

EulerianCensus eulerian_census(const Orientation& d, Kernel kernel, int edge_limit) {
    check_census_capacity(d, edge_limit);
    EulerianCensus c = kernel == Kernel::serial ? census_serial(d) : census_parallel(d);
    c.difference = static_cast<std::int64_t>(c.even_count) - static_cast<std::int64_t>(c.odd_count);
    return c;
}

std::int64_t polynomial_coefficient(const Orientation& d, int edge_limit) {
    const int m = d.base().edge_count();
    if (m > edge_limit)
        throw CapacityError("polynomial expansion limited to " + std::to_string(edge_limit) + " edges, got " +
                            std::to_string(m));
    const int n = d.base().vertex_count();
    using Monomial = std::vector<int>;
    std::map<Monomial, std::int64_t> poly{{Monomial(n, 0), 1}};
    for (auto [t, h] : d.arcs()) {
        std::map<Monomial, std::int64_t> next;
        for (const auto& [mono, coef] : poly) {
            Monomial a = mono;
            ++a[t];
            next[a] += coef;
            Monomial b = mono;
            ++b[h];
            next[b] -= coef;
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        poly = std::move(next);
    }
    auto it = poly.find(d.in_degrees());
    return it == poly.end() ? 0 : it->second;
}

bool verify_at_condition(const Orientation& d, int edge_limit) {
    return eulerian_census(d, Kernel::parallel, edge_limit).difference != 0;
}

OrientationReport build_brooks_orientation(const Graph& g, int census_edge_limit) {
    if (!is_connected(g)) throw DomainError("orientation requires a connected graph");
    if (is_gallai_tree(g)) throw DomainError("graph is a Gallai tree; the construction does not apply");

    OrientationReport r;
    r.witness = find_witness_cycle(g);
    const VertexSet cycle_set = r.witness.vertex_set();
    const Contraction con = contract_set(g, cycle_set);
    const VertexOrdering contracted = spanning_ordering(con.graph, con.merged_vertex);

    std::vector<int> original_of(con.graph.vertex_count(), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!cycle_set.contains(v)) original_of[con.mapping[v]] = v;

    r.ordering.root = r.witness.cycle.front();
    for (int v : contracted.order) {
        if (v == con.merged_vertex)
            r.ordering.order.insert(r.ordering.order.end(), r.witness.cycle.begin(), r.witness.cycle.end());
        else
            r.ordering.order.push_back(original_of[v]);
    }

    std::vector<int> position(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) position[r.ordering.order[i]] = i;

    const auto& cyc = r.witness.cycle;
    const int len = static_cast<int>(cyc.size());
    std::vector<Edge> arcs;
    arcs.reserve(g.edges().size());
    for (int i = 0; i < len; ++i) arcs.emplace_back(cyc[i], cyc[(i + 1) % len]);
    for (auto [u, v] : g.edges()) {
        bool cycle_edge = false;
        for (int i = 0; i < len && !cycle_edge; ++i) {
            int a = cyc[i], b = cyc[(i + 1) % len];
            cycle_edge = (a == u && b == v) || (a == v && b == u);
        }
        if (cycle_edge) continue;
        arcs.push_back(position[u] > position[v] ? Edge{u, v} : Edge{v, u});
    }
    r.orientation = Orientation(g, std::move(arcs));
    r.in_degree_per_vertex = r.orientation.in_degrees();
    r.min_out_degree = r.orientation.min_out_degree();
    if (r.min_out_degree < 1) throw std::logic_error("constructed orientation has a vertex without out-going edges");
    r.census = eulerian_census(r.orientation, Kernel::parallel, census_edge_limit);
    if (r.census.difference == 0) throw std::logic_error("constructed orientation has equal even and odd Eulerian counts");
    return r;
}

}  // namespace brooks
