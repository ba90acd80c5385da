#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brooks/graph.hpp"

namespace brooks {

inline constexpr int kMaxPalette = 64;

/// One color list per vertex; colors are drawn from {0..palette_size-1}.
struct ListAssignment {
    int palette_size = 0;
    std::vector<std::uint64_t> lists;  // bit c set <=> color c in L(v)

    static ListAssignment from_vectors(const std::vector<std::vector<int>>& lists);
    std::vector<int> colors(int v) const;
};

using Coloring = std::vector<int>;

/// Per-vertex required list size f(v) >= 1.
using SizeFunction = std::vector<int>;

SizeFunction degree_sizes(const Graph& g);
SizeFunction constant_sizes(const Graph& g, int k);

/// Parses "v: c1,c2,..." lines (v by label or index); '#' and blank lines skipped.
ListAssignment parse_lists(std::string_view text, const Graph& g);

/// Proper and list-respecting.
bool is_valid_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c);

/// Complete backtracking search, most-constrained vertex first (ties by id).
/// Throws ValidationError if the lists do not cover every vertex.
std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists);

struct ChoosabilityOptions {
    /// Enumerate list assignments up to renaming of colors (each assignment is
    /// a multiset of color classes). When false, enumerate every assignment
    /// over the palette {0..sum f - 1} literally; only viable for tiny inputs.
    bool symmetry_reduction = true;
};

struct ChoosabilityResult {
    bool choosable = false;
    std::optional<ListAssignment> counterexample;
    std::uint64_t assignments_checked = 0;
};

inline constexpr int kChoosabilityVertexLimit = 6;
inline constexpr int kChoosabilitySizeLimit = 24;
inline constexpr int kLiteralSizeLimit = 16;

/// Decides whether g is colorable from every list assignment with |L(v)| = f(v).
/// A palette of sum f colors suffices since colorability is invariant under
/// injective renaming of colors. Throws CapacityError past the limits above.
ChoosabilityResult check_f_choosability(const Graph& g, const SizeFunction& f, ChoosabilityOptions opts = {});
bool is_f_choosable(const Graph& g, const SizeFunction& f, ChoosabilityOptions opts = {});

/// f = degree. Throws DomainError on a degree-0 vertex.
bool is_degree_choosable(const Graph& g, ChoosabilityOptions opts = {});

enum class ListSizeMode { degree, max_degree };

struct TrialReport {
    std::uint64_t seed = 0;
    int trials = 0;
    int palette_size = 0;
    ListSizeMode mode = ListSizeMode::degree;
    int failures = 0;
    std::vector<int> failing_trials;  // at most the first 16
    bool theorem_applies = false;     // connected and not excluded by hypothesis
    bool fatal = false;               // a failure where the theorem guarantees success
};

std::string to_string(ListSizeMode mode);

/// Uniformly random size-f(v) lists from the palette; trial i draws from its
/// own generator seeded by (seed, i), so the report does not depend on how
/// trials are scheduled across threads.
ListAssignment random_list_assignment(const Graph& g, const SizeFunction& f, int palette_size, std::uint64_t seed,
                                      std::uint64_t trial);
TrialReport random_degree_list_trial(const Graph& g, int palette_size, int trial_count, std::uint64_t seed,
                                     ListSizeMode mode = ListSizeMode::degree);

}  // namespace brooks
