#include "brooks/coloring.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>

#include "brooks/errors.hpp"
#include "brooks/structure.hpp"

namespace brooks {

ListAssignment ListAssignment::from_vectors(const std::vector<std::vector<int>>& lists) {
    ListAssignment a;
    for (const auto& l : lists) {
        std::uint64_t mask = 0;
        for (int c : l) {
            if (c < 0 || c >= kMaxPalette) throw ValidationError("color " + std::to_string(c) + " outside 0..63");
            mask |= std::uint64_t{1} << c;
            a.palette_size = std::max(a.palette_size, c + 1);
        }
        a.lists.push_back(mask);
    }
    return a;
}

std::vector<int> ListAssignment::colors(int v) const { return VertexSet(lists[v]).members(); }

SizeFunction degree_sizes(const Graph& g) {
    SizeFunction f(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) f[v] = g.degree(v);
    return f;
}

SizeFunction constant_sizes(const Graph& g, int k) { return SizeFunction(g.vertex_count(), k); }

ListAssignment parse_lists(std::string_view text, const Graph& g) {
    std::vector<std::vector<int>> lists(g.vertex_count());
    std::vector<bool> seen(g.vertex_count(), false);
    std::istringstream in{std::string(text)};
    int lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'v: c1,c2,...'", lineno);
        std::string name;
        std::istringstream(line.substr(0, colon)) >> name;
        int v = -1;
        for (int u = 0; u < g.vertex_count(); ++u)
            if (g.label(u) == name) v = u;
        if (v < 0) throw ParseError("unknown vertex '" + name + "'", lineno);
        if (seen[v]) throw ParseError("second list for vertex '" + name + "'", lineno);
        seen[v] = true;
        std::string rest = line.substr(colon + 1);
        std::replace(rest.begin(), rest.end(), ',', ' ');
        std::istringstream colors(rest);
        for (std::string tok; colors >> tok;) {
            int c = 0;
            try {
                std::size_t used = 0;
                c = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError("bad color '" + tok + "'", lineno);
            }
            if (c < 0 || c >= kMaxPalette) throw ParseError("color outside 0..63", lineno);
            lists[v].push_back(c);
        }
        if (lists[v].empty()) throw ParseError("empty list for vertex '" + name + "'", lineno);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!seen[v]) throw ValidationError("no list for vertex '" + g.label(v) + "'");
    return ListAssignment::from_vectors(lists);
}

bool is_valid_coloring(const Graph& g, const ListAssignment& lists, const Coloring& c) {
    if (static_cast<int>(c.size()) != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c[v] < 0 || c[v] >= kMaxPalette || !((lists.lists[v] >> c[v]) & 1U)) return false;
    for (auto [u, v] : g.edges())
        if (c[u] == c[v]) return false;
    return true;
}

namespace {

// avail[v] for uncolored v; returns true once every vertex is colored.
bool color_search(const Graph& g, std::uint64_t* avail, std::uint64_t uncolored, int* out) {
    if (uncolored == 0) return true;
    int pick = -1, best = kMaxPalette + 1;
    for (std::uint64_t b = uncolored; b; b &= b - 1) {
        const int v = std::countr_zero(b);
        const int k = std::popcount(avail[v]);
        if (k < best) {
            best = k;
            pick = v;
        }
    }
    if (best == 0) return false;
    uncolored &= ~(std::uint64_t{1} << pick);
    const std::uint64_t nbrs = g.neighbors(pick).bits() & uncolored;
    for (std::uint64_t opts = avail[pick]; opts; opts &= opts - 1) {
        const int c = std::countr_zero(opts);
        const std::uint64_t bit = std::uint64_t{1} << c;
        std::uint64_t touched = 0;
        bool dead = false;
        for (std::uint64_t b = nbrs; b; b &= b - 1) {
            const int w = std::countr_zero(b);
            if (avail[w] & bit) {
                avail[w] &= ~bit;
                touched |= std::uint64_t{1} << w;
                dead |= avail[w] == 0;
            }
        }
        if (!dead) {
            out[pick] = c;
            if (color_search(g, avail, uncolored, out)) return true;
        }
        for (std::uint64_t b = touched; b; b &= b - 1) avail[std::countr_zero(b)] |= bit;
    }
    return false;
}

bool colorable(const Graph& g, const std::uint64_t* lists) {
    std::array<std::uint64_t, kMaxVertices> avail;
    std::array<int, kMaxVertices> out;
    std::copy(lists, lists + g.vertex_count(), avail.begin());
    return color_search(g, avail.data(), g.vertices().bits(), out.data());
}

}  // namespace

std::optional<Coloring> find_list_coloring(const Graph& g, const ListAssignment& lists) {
    if (static_cast<int>(lists.lists.size()) != g.vertex_count())
        throw ValidationError("list assignment covers " + std::to_string(lists.lists.size()) + " vertices, graph has " +
                              std::to_string(g.vertex_count()));
    std::vector<std::uint64_t> avail = lists.lists;
    Coloring out(g.vertex_count(), -1);
    if (color_search(g, avail.data(), g.vertices().bits(), out.data())) return out;
    return std::nullopt;
}

namespace {

void check_sizes(const Graph& g, const SizeFunction& f, int size_limit) {
    if (static_cast<int>(f.size()) != g.vertex_count()) throw ValidationError("size function does not cover every vertex");
    for (int k : f)
        if (k < 1) throw DomainError("list sizes must be at least 1");
    const int total = std::accumulate(f.begin(), f.end(), 0);
    if (g.vertex_count() > kChoosabilityVertexLimit || total > size_limit)
        throw CapacityError("exhaustive choosability is limited to n <= " + std::to_string(kChoosabilityVertexLimit) +
                            " and sum f <= " + std::to_string(size_limit) + " (n = " +
                            std::to_string(g.vertex_count()) + ", sum f = " + std::to_string(total) + ")");
}

// Every assignment over the palette {0..P-1}, vertex by vertex.
ChoosabilityResult literal_search(const Graph& g, const SizeFunction& f) {
    const int n = g.vertex_count();
    const int palette = std::accumulate(f.begin(), f.end(), 0);
    ChoosabilityResult r;
    ListAssignment a{palette, std::vector<std::uint64_t>(n, 0)};

    std::function<bool(int)> assign = [&](int v) -> bool {
        if (v == n) {
            ++r.assignments_checked;
            return colorable(g, a.lists.data());
        }
        // lexicographic walk over f(v)-subsets of the palette
        std::vector<int> pick(f[v]);
        std::iota(pick.begin(), pick.end(), 0);
        for (;;) {
            std::uint64_t mask = 0;
            for (int c : pick) mask |= std::uint64_t{1} << c;
            a.lists[v] = mask;
            if (!assign(v + 1)) return false;
            int i = f[v] - 1;
            while (i >= 0 && pick[i] == palette - f[v] + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < f[v]; ++j) pick[j] = pick[j - 1] + 1;
        }
        return true;
    };
    r.choosable = assign(0);
    if (!r.choosable) r.counterexample = a;
    return r;
}

// Assignments up to color renaming: a nonincreasing sequence of color classes
// (vertex masks), vertex v covered exactly f(v) times. Adding colors to lists
// never destroys a coloring, so a colorable partial assignment settles its
// whole subtree.
ChoosabilityResult class_search(const Graph& g, const SizeFunction& f) {
    const int n = g.vertex_count();
    ChoosabilityResult r;
    std::array<int, kMaxVertices> demand{};
    std::copy(f.begin(), f.end(), demand.begin());
    std::array<std::uint64_t, kMaxVertices> lists{};
    int classes = 0;
    std::uint64_t open = 0;
    for (int v = 0; v < n; ++v) open |= std::uint64_t{1} << v;
    std::uint64_t covered = 0;  // vertices with a nonempty list
    const std::uint64_t everyone = open;

    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t prev) -> bool {
        if (open == 0 || covered == everyone) {
            ++r.assignments_checked;
            if (colorable(g, lists.data())) return true;
            if (open == 0) {
                r.counterexample = ListAssignment{classes, std::vector<std::uint64_t>(lists.begin(), lists.begin() + n)};
                return false;
            }
        }
        // every later class is <= prev, so the highest open vertex must be in the next one
        const int top = 63 - std::countl_zero(open);
        const std::uint64_t top_bit = std::uint64_t{1} << top;
        if (top_bit > prev) return true;
        const std::uint64_t saved_open = open, saved_covered = covered;
        for (std::uint64_t s = saved_open;; s = (s - 1) & saved_open) {
            if (!(s & top_bit)) break;
            if (s > prev) continue;
            const std::uint64_t color = std::uint64_t{1} << classes;
            for (std::uint64_t b = s; b; b &= b - 1) {
                const int v = std::countr_zero(b);
                lists[v] |= color;
                if (--demand[v] == 0) open &= ~(std::uint64_t{1} << v);
            }
            covered |= s;
            ++classes;
            const bool ok = extend(s);
            --classes;
            for (std::uint64_t b = s; b; b &= b - 1) {
                const int v = std::countr_zero(b);
                lists[v] &= ~color;
                ++demand[v];
            }
            open = saved_open;
            covered = saved_covered;
            if (!ok) return false;
        }
        return true;
    };
    r.choosable = extend(~std::uint64_t{0});
    return r;
}

}  // namespace

ChoosabilityResult check_f_choosability(const Graph& g, const SizeFunction& f, ChoosabilityOptions opts) {
    check_sizes(g, f, opts.symmetry_reduction ? kChoosabilitySizeLimit : kLiteralSizeLimit);
    return opts.symmetry_reduction ? class_search(g, f) : literal_search(g, f);
}

bool is_f_choosable(const Graph& g, const SizeFunction& f, ChoosabilityOptions opts) {
    return check_f_choosability(g, f, opts).choosable;
}

bool is_degree_choosable(const Graph& g, ChoosabilityOptions opts) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw DomainError("vertex " + g.label(v) + " has degree 0; a list of size 0 is meaningless");
    return is_f_choosable(g, degree_sizes(g), opts);
}

std::string to_string(ListSizeMode mode) { return mode == ListSizeMode::degree ? "degree" : "max_degree"; }

ListAssignment random_list_assignment(const Graph& g, const SizeFunction& f, int palette_size, std::uint64_t seed,
                                      std::uint64_t trial) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
    std::mt19937_64 rng(seq);
    std::vector<int> palette(palette_size);
    std::iota(palette.begin(), palette.end(), 0);
    ListAssignment a{palette_size, std::vector<std::uint64_t>(g.vertex_count(), 0)};
    std::vector<int> pick;
    for (int v = 0; v < g.vertex_count(); ++v) {
        pick.clear();
        std::sample(palette.begin(), palette.end(), std::back_inserter(pick), f[v], rng);
        for (int c : pick) a.lists[v] |= std::uint64_t{1} << c;
    }
    return a;
}

TrialReport random_degree_list_trial(const Graph& g, int palette_size, int trial_count, std::uint64_t seed,
                                     ListSizeMode mode) {
    SizeFunction f = mode == ListSizeMode::degree ? degree_sizes(g) : constant_sizes(g, g.max_degree());
    const int biggest = f.empty() ? 0 : *std::max_element(f.begin(), f.end());
    if (palette_size < biggest || palette_size > kMaxPalette)
        throw ValidationError("palette size must lie in " + std::to_string(biggest) + "..64");
    if (trial_count < 0) throw ValidationError("trial count must be nonnegative");

    TrialReport rep;
    rep.seed = seed;
    rep.trials = trial_count;
    rep.palette_size = palette_size;
    rep.mode = mode;
    if (is_connected(g) && g.vertex_count() > 0) {
        if (mode == ListSizeMode::degree) {
            rep.theorem_applies = !is_gallai_tree(g);
        } else {
            const int n = g.vertex_count();
            const bool complete = g.edge_count() == n * (n - 1) / 2;
            const bool odd_cycle = n % 2 == 1 && g.edge_count() == n && g.max_degree() == 2 && g.min_degree() == 2;
            rep.theorem_applies = !complete && !odd_cycle;
        }
    }

    std::vector<char> failed(trial_count, 0);
#pragma omp parallel for schedule(dynamic, 16)
    for (int i = 0; i < trial_count; ++i) {
        ListAssignment a = random_list_assignment(g, f, palette_size, seed, static_cast<std::uint64_t>(i));
        failed[i] = !find_list_coloring(g, a).has_value();
    }
    for (int i = 0; i < trial_count; ++i) {
        if (!failed[i]) continue;
        ++rep.failures;
        if (rep.failing_trials.size() < 16) rep.failing_trials.push_back(i);
    }
    rep.fatal = rep.theorem_applies && rep.failures > 0;
    return rep;
}

}  // namespace brooks
