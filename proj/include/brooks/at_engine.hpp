#pragma once

#include <cstdint>
#include <vector>

#include "brooks/graph.hpp"
#include "brooks/structure.hpp"

namespace brooks {

/// Even/odd counts of Eulerian (balanced) spanning edge subsets of an orientation.
struct EulerianCensus {
    std::uint64_t even_count = 0;
    std::uint64_t odd_count = 0;
    std::int64_t difference = 0;
    std::uint64_t edge_subsets_examined = 0;

    bool operator==(const EulerianCensus&) const = default;
};

enum class Kernel { serial, parallel };

inline constexpr int kDefaultCensusEdgeLimit = 24;
inline constexpr int kDefaultCoefficientEdgeLimit = 14;

/// Enumerates all 2^m edge subsets. The parallel kernel walks a Gray code
/// inside each chunk of the high bits; the serial kernel recomputes every
/// subset from scratch and is kept as the reference. Both return identical
/// values. Throws CapacityError past edge_limit.
EulerianCensus eulerian_census(const Orientation& d, Kernel kernel = Kernel::parallel,
                               int edge_limit = kDefaultCensusEdgeLimit);

/// Coefficient of prod_v x_v^{indeg(v)} in prod_{(t,h)} (x_t - x_h), by full
/// expansion with exact integer arithmetic. Throws CapacityError past edge_limit.
std::int64_t polynomial_coefficient(const Orientation& d, int edge_limit = kDefaultCoefficientEdgeLimit);

/// Nonzero Eulerian difference.
bool verify_at_condition(const Orientation& d, int edge_limit = kDefaultCensusEdgeLimit);

struct OrientationReport {
    Orientation orientation;
    int min_out_degree = 0;
    std::vector<int> in_degree_per_vertex;
    EulerianCensus census;
    CycleWitness witness;
    VertexOrdering ordering;
};

/// Contract the witness cycle, order the contracted graph from the merged
/// vertex, expand the cycle in its canonical order, orient the cycle
/// cyclically and every other edge from the later vertex to the earlier one.
/// Throws DomainError on Gallai trees, std::logic_error if the result has a
/// sink or a zero Eulerian difference.
OrientationReport build_brooks_orientation(const Graph& g, int census_edge_limit = kDefaultCensusEdgeLimit);

}  // namespace brooks
