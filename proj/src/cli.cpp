#include "brooks/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "brooks/at_engine.hpp"
#include "brooks/coloring.hpp"
#include "brooks/errors.hpp"
#include "brooks/io.hpp"
#include "brooks/paint_game.hpp"
#include "brooks/structure.hpp"

namespace brooks::cli {

using json = nlohmann::ordered_json;

std::string to_string(Status s) {
    switch (s) {
        case Status::ok: return "ok";
        case Status::property_failed: return "property_failed";
        case Status::input_error: return "input_error";
        case Status::capacity_error: return "capacity_error";
    }
    return "?";
}

int exit_code(Status s) {
    switch (s) {
        case Status::ok: return 0;
        case Status::property_failed: return 1;
        default: return 2;
    }
}

namespace {

// Pipeline degree-paintability runs only on graphs this small; the solver
// itself accepts up to kPaintVertexLimit vertices but slows down sharply.
constexpr int kPipelinePaintLimit = 8;
constexpr int kDefaultTrials = 1000;
constexpr std::uint64_t kTextModeSeed = 1;

struct Options {
    std::string command;
    std::string input;
    std::string format = "edgelist";
    bool json = false;
    std::optional<std::uint64_t> seed;
    std::string root;
    std::string lists;
    std::string sizes = "degree";
    std::optional<int> k;
    int trials = kDefaultTrials;
    std::optional<int> palette;
    bool audit = false;
    bool brooks_orientation = false;
};

// Thrown for command-line problems that are not graph-format problems.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_source(const Options& opt, std::istream& in) {
    if (opt.input.empty() || opt.input == "-") {
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    std::ifstream f(opt.input);
    if (!f) throw UsageError("cannot read '" + opt.input + "'");
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

// DIMACS vertices keep their 1-based names in reports.
Graph with_dimacs_names(const Graph& g) {
    std::vector<std::string> names;
    for (int v = 0; v < g.vertex_count(); ++v) names.push_back(std::to_string(v + 1));
    return Graph(g.vertex_count(), g.edges(), names);
}

Graph load_graph(const Options& opt, std::istream& in) {
    Format f = parse_format(opt.format);
    Graph g = parse_graph(read_source(opt, in), f);
    return f == Format::dimacs ? with_dimacs_names(g) : g;
}

Orientation load_orientation(const Options& opt, std::istream& in) {
    Format f = parse_format(opt.format);
    Orientation d = parse_orientation(read_source(opt, in), f);
    if (f == Format::dimacs) return Orientation(with_dimacs_names(d.base()), d.arcs());
    return d;
}

int vertex_by_name(const Graph& g, const std::string& name) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.label(v) == name) return v;
    throw UsageError("unknown vertex '" + name + "'");
}

json names(const Graph& g, const std::vector<int>& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(g.label(v));
    return a;
}

json graph_stats(const Graph& g) {
    return {{"vertices", g.vertex_count()},
            {"edges", g.edge_count()},
            {"max_degree", g.max_degree()},
            {"min_degree", g.min_degree()},
            {"connected", is_connected(g)}};
}

json blocks_json(const Graph& g, const BlockDecomposition& bd) {
    json a = json::array();
    for (VertexSet b : bd.blocks) a.push_back({{"vertices", names(g, b.members())}, {"kind", to_string(classify_block(g, b))}});
    return a;
}

json witness_json(const Graph& g, const CycleWitness& w) {
    json chord = nullptr;
    if (w.chord) chord = names(g, {w.chord->first, w.chord->second});
    return {{"cycle", names(g, w.cycle)}, {"length", w.cycle.size()}, {"chord", chord}};
}

json ordering_json(const Graph& g, const VertexOrdering& o) {
    return {{"root", g.label(o.root)}, {"order", names(g, o.order)}};
}

json census_json(const EulerianCensus& c) {
    return {{"even", c.even_count},
            {"odd", c.odd_count},
            {"difference", c.difference},
            {"subsets_examined", c.edge_subsets_examined}};
}

json orientation_json(const Orientation& d) {
    const Graph& g = d.base();
    json arcs = json::array();
    for (auto [t, h] : d.arcs()) arcs.push_back(json::array({g.label(t), g.label(h)}));
    std::vector<int> ids(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) ids[v] = v;
    return {{"arcs", arcs},
            {"vertices", names(g, ids)},
            {"in_degree", d.in_degrees()},
            {"min_out_degree", d.min_out_degree()},
            {"max_in_degree", d.max_in_degree()}};
}

json lists_json(const Graph& g, const ListAssignment& a) {
    json o = json::object();
    for (int v = 0; v < g.vertex_count(); ++v) o[g.label(v)] = a.colors(v);
    return o;
}

json trial_json(const TrialReport& r) {
    return {{"seed", r.seed},
            {"trials", r.trials},
            {"palette_size", r.palette_size},
            {"list_sizes", to_string(r.mode)},
            {"failures", r.failures},
            {"failing_trials", r.failing_trials},
            {"theorem_applies", r.theorem_applies},
            {"fatal", r.fatal}};
}

std::string gallai_summary(const Graph& g, const BlockDecomposition& bd, bool gallai) {
    if (!gallai) return "Gallai tree: no";
    if (bd.blocks.size() == 1) {
        auto kind = classify_block(g, bd.blocks.front());
        return std::string("Gallai tree: yes (single ") + (kind == BlockKind::odd_cycle ? "odd-cycle" : "complete") +
               " block)";
    }
    return "Gallai tree: yes (" + std::to_string(bd.blocks.size()) + " blocks, each complete or an odd cycle)";
}

std::vector<int> size_function(const Graph& g, const std::string& sizes) {
    if (sizes == "degree") {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.degree(v) == 0) throw DomainError("vertex " + g.label(v) + " has degree 0");
        return degree_sizes(g);
    }
    int k = 0;
    try {
        std::size_t used = 0;
        k = std::stoi(sizes, &used);
        if (used != sizes.size()) throw std::invalid_argument(sizes);
    } catch (const std::exception&) {
        throw UsageError("--sizes must be 'degree' or a positive integer");
    }
    if (k < 1) throw UsageError("--sizes must be 'degree' or a positive integer");
    return constant_sizes(g, k);
}

CommandResult cmd_classify(const Graph& g) {
    if (!is_connected(g)) throw DomainError("classification requires a connected graph");
    auto bd = block_decomposition(g);
    bool gallai = is_gallai_tree(g);
    json p = {{"summary", gallai_summary(g, bd, gallai)}, {"graph", graph_stats(g)}, {"gallai_tree", gallai},
              {"blocks", blocks_json(g, bd)}};
    return {Status::ok, p};
}

CommandResult cmd_blocks(const Graph& g) {
    auto bd = block_decomposition(g);
    json p = {{"summary", std::to_string(bd.blocks.size()) + " blocks, " + std::to_string(bd.cut_vertices.size()) +
                              " cut vertices"},
              {"graph", graph_stats(g)},
              {"blocks", blocks_json(g, bd)},
              {"cut_vertices", names(g, bd.cut_vertices.members())}};
    return {Status::ok, p};
}

CommandResult cmd_witness(const Graph& g) {
    auto w = find_witness_cycle(g);
    json p = {{"summary", "witness: even cycle of length " + std::to_string(w.cycle.size()) +
                              (w.chord ? " with one chord" : " without chords")},
              {"graph", graph_stats(g)},
              {"witness", witness_json(g, w)}};
    return {Status::ok, p};
}

CommandResult cmd_order(const Graph& g, const Options& opt) {
    int root = opt.root.empty() ? 0 : vertex_by_name(g, opt.root);
    if (g.vertex_count() == 0) throw DomainError("empty graph has no root");
    auto o = spanning_ordering(g, root);
    bool ok = has_predecessor_property(g, o);
    json p = {{"summary", std::string("ordering from ") + g.label(root) +
                              (ok ? ": every other vertex follows a neighbor" : ": predecessor property FAILED")},
              {"graph", graph_stats(g)},
              {"ordering", ordering_json(g, o)},
              {"predecessor_property", ok}};
    return {ok ? Status::ok : Status::property_failed, p};
}

CommandResult cmd_orient(const Graph& g) {
    auto r = build_brooks_orientation(g);
    json p = {{"summary", "orientation with min out-degree " + std::to_string(r.min_out_degree) +
                              ", Eulerian difference " + std::to_string(r.census.difference)},
              {"graph", graph_stats(g)},
              {"witness", witness_json(g, r.witness)},
              {"ordering", ordering_json(g, r.ordering)},
              {"orientation", orientation_json(r.orientation)},
              {"census", census_json(r.census)}};
    return {Status::ok, p};
}

Orientation census_input(const Options& opt, std::istream& in) {
    if (!opt.brooks_orientation) return load_orientation(opt, in);
    return build_brooks_orientation(load_graph(opt, in)).orientation;
}

CommandResult cmd_census(const Orientation& d) {
    auto c = eulerian_census(d);
    bool differ = c.difference != 0;
    json p = {{"summary", "even " + std::to_string(c.even_count) + ", odd " + std::to_string(c.odd_count) +
                              (differ ? ": counts differ" : ": counts equal")},
              {"graph", graph_stats(d.base())},
              {"orientation", orientation_json(d)},
              {"census", census_json(c)},
              {"counts_differ", differ}};
    return {differ ? Status::ok : Status::property_failed, p};
}

CommandResult cmd_coeff(const Orientation& d) {
    auto coef = polynomial_coefficient(d);
    json p = {{"summary", "coefficient of the in-degree monomial: " + std::to_string(coef)},
              {"graph", graph_stats(d.base())},
              {"orientation", orientation_json(d)},
              {"coefficient", coef},
              {"nonzero", coef != 0}};
    return {coef != 0 ? Status::ok : Status::property_failed, p};
}

CommandResult cmd_color(const Graph& g, const Options& opt) {
    if (opt.lists.empty()) throw UsageError("color requires --lists FILE");
    std::ifstream f(opt.lists);
    if (!f) throw UsageError("cannot read '" + opt.lists + "'");
    std::ostringstream text;
    text << f.rdbuf();
    ListAssignment a = parse_lists(text.str(), g);
    auto c = find_list_coloring(g, a);
    json coloring = nullptr;
    if (c) {
        coloring = json::object();
        for (int v = 0; v < g.vertex_count(); ++v) coloring[g.label(v)] = (*c)[v];
    }
    json p = {{"summary", c ? "proper coloring from the lists found" : "no proper coloring from these lists"},
              {"graph", graph_stats(g)},
              {"lists", lists_json(g, a)},
              {"coloring", coloring}};
    return {c ? Status::ok : Status::property_failed, p};
}

CommandResult cmd_choosable(const Graph& g, const Options& opt) {
    auto f = size_function(g, opt.sizes);
    auto r = check_f_choosability(g, f, ChoosabilityOptions{!opt.audit});
    json p = {{"summary", std::string(r.choosable ? "choosable" : "not choosable") + " with sizes " + opt.sizes},
              {"graph", graph_stats(g)},
              {"sizes", opt.sizes},
              {"choosable", r.choosable},
              {"assignments_checked", r.assignments_checked},
              {"counterexample", r.counterexample ? lists_json(g, *r.counterexample) : json(nullptr)}};
    return {r.choosable ? Status::ok : Status::property_failed, p};
}

CommandResult cmd_paint(const Graph& g, const Options& opt) {
    std::vector<int> erasers(g.vertex_count());
    std::string label;
    if (opt.k) {
        if (*opt.k < 1) throw UsageError("--k must be positive");
        erasers.assign(g.vertex_count(), *opt.k - 1);
        label = std::to_string(*opt.k) + "-paintable";
    } else {
        auto f = size_function(g, opt.sizes);
        for (int v = 0; v < g.vertex_count(); ++v) erasers[v] = f[v] - 1;
        label = opt.sizes == "degree" ? "degree paintable" : opt.sizes + "-paintable";
    }
    auto r = solve_game(initial_state(g, erasers), GameOptions{opt.audit});
    json p = {{"summary", (r.correct_wins ? "" : std::string("not ")) + label},
              {"graph", graph_stats(g)},
              {"erasers", erasers},
              {"audit", opt.audit},
              {"correct_wins", r.correct_wins},
              {"states_solved", r.states_solved}};
    return {r.correct_wins ? Status::ok : Status::property_failed, p};
}

CommandResult cmd_pipeline(const Graph& g, const Options& opt) {
    if (opt.json && !opt.seed) throw UsageError("pipeline --json requires --seed");
    if (!is_connected(g)) throw DomainError("input refused: graph is disconnected");
    if (g.vertex_count() == 0) throw DomainError("input refused: empty graph");
    auto bd = block_decomposition(g);
    if (is_gallai_tree(g))
        throw DomainError("input refused at classify: " + gallai_summary(g, bd, true) +
                          "; the orientation construction requires a non-Gallai graph");

    const std::uint64_t seed = opt.seed.value_or(kTextModeSeed);
    auto r = build_brooks_orientation(g);
    const int palette = opt.palette.value_or(g.max_degree() + 1);
    auto trials = random_degree_list_trial(g, palette, opt.trials, seed, ListSizeMode::degree);

    json assertions = json::array();
    bool all = true;
    auto check = [&](const std::string& name, bool passed) {
        assertions.push_back({{"name", name}, {"passed", passed}});
        all &= passed;
    };
    check("witness is an even cycle with at most one chord", witness_violation(g, r.witness).empty());
    check("ordering: every vertex but the first follows a neighbor", has_predecessor_property(g, r.ordering));
    check("every vertex has an out-going edge", r.min_out_degree >= 1);
    check("even and odd Eulerian counts differ", r.census.difference != 0);
    const auto& c = r.census;
    bool shape = (c.even_count == 2 && c.odd_count == 0 && !r.witness.chord) ||
                 (r.witness.chord && ((c.even_count == 3 && c.odd_count == 0) || (c.even_count == 2 && c.odd_count == 1)));
    check("Eulerian subgraphs come only from the witness cycle", shape);
    check("random degree-list trials all colorable", trials.failures == 0);

    json paint;
    if (g.vertex_count() <= kPipelinePaintLimit) {
        auto pr = solve_game(initial_state(g, [&] {
            std::vector<int> e(g.vertex_count());
            for (int v = 0; v < g.vertex_count(); ++v) e[v] = g.degree(v) - 1;
            return e;
        }()));
        paint = {{"ran", true}, {"correct_wins", pr.correct_wins}, {"states_solved", pr.states_solved}};
        check("degree paintable", pr.correct_wins);
    } else {
        paint = {{"ran", false},
                 {"reason", "more than " + std::to_string(kPipelinePaintLimit) + " vertices"}};
    }

    json p = {{"summary", all ? "all checks passed" : "some checks FAILED"},
              {"graph", graph_stats(g)},
              {"gallai_tree", false},
              {"blocks", blocks_json(g, bd)},
              {"witness", witness_json(g, r.witness)},
              {"ordering", ordering_json(g, r.ordering)},
              {"orientation", orientation_json(r.orientation)},
              {"census", census_json(r.census)},
              {"trials", trial_json(trials)},
              {"paint", paint},
              {"assertions", assertions}};
    return {all ? Status::ok : Status::property_failed, p};
}

CommandResult dispatch(const Options& opt, std::istream& in) {
    const std::string& c = opt.command;
    if (c == "census") return cmd_census(census_input(opt, in));
    if (c == "coeff") return cmd_coeff(census_input(opt, in));
    Graph g = load_graph(opt, in);
    if (c == "classify") return cmd_classify(g);
    if (c == "blocks") return cmd_blocks(g);
    if (c == "witness") return cmd_witness(g);
    if (c == "order") return cmd_order(g, opt);
    if (c == "orient") return cmd_orient(g);
    if (c == "color") return cmd_color(g, opt);
    if (c == "choosable") return cmd_choosable(g, opt);
    if (c == "paint") return cmd_paint(g, opt);
    if (c == "pipeline") return cmd_pipeline(g, opt);
    throw UsageError("unknown subcommand '" + c + "'");
}

void flatten(const json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
    if (j.is_object() && !j.empty()) {
        for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
        return;
    }
    if (j.is_array() && !j.empty() && j.front().is_object()) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
        return;
    }
    if (j.is_string()) {
        rows.emplace_back(prefix, j.get<std::string>());
        return;
    }
    rows.emplace_back(prefix, j.dump());
}

}  // namespace

std::string render_text(const json& payload) {
    std::vector<std::pair<std::string, std::string>> rows;
    flatten(payload, "", rows);
    std::size_t width = 0;
    for (const auto& r : rows)
        if (r.first != "summary") width = std::max(width, r.first.size());
    std::ostringstream out;
    for (const auto& [k, v] : rows)
        if (k == "summary") out << v << '\n';
    for (const auto& [k, v] : rows)
        if (k != "summary") out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
    return out.str();
}

CommandResult run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Brooks' theorem via Alon-Tarsi orientations: classify, orient, count, color, paint"};
    app.name("brooks");
    app.require_subcommand(1);
    app.add_option("--input", opt.input, "graph file (default: stdin)");
    app.add_option("--format", opt.format, "edgelist or dimacs")->check(CLI::IsMember({"edgelist", "dimacs"}));
    app.add_flag("--json", opt.json, "emit a single JSON document");
    app.add_option("--seed", opt.seed, "random seed");
    app.add_option("--root", opt.root, "root vertex for order");
    app.add_option("--lists", opt.lists, "lists file for color (lines 'v: c1,c2,...')");
    app.add_option("--sizes", opt.sizes, "list sizes: degree or an integer K");
    app.add_option("--k", opt.k, "paintability number (erasers = k - 1)");
    app.add_option("--trials", opt.trials, "random list trials for pipeline")->check(CLI::NonNegativeNumber);
    app.add_option("--palette", opt.palette, "palette size for pipeline trials (default max degree + 1)");
    app.add_flag("--audit", opt.audit, "unrestricted game moves / literal list enumeration");
    app.add_flag("--brooks", opt.brooks_orientation, "census/coeff: use the constructed orientation of an undirected input");

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"classify", "Gallai-tree test with block report"},
        {"blocks", "block decomposition"},
        {"witness", "even cycle with at most one chord"},
        {"order", "spanning-tree level ordering"},
        {"orient", "build the orientation and its Eulerian census"},
        {"census", "even/odd Eulerian subgraph counts of an oriented input"},
        {"coeff", "graph-polynomial coefficient of an oriented input"},
        {"color", "color from the lists in --lists"},
        {"choosable", "exhaustive f-choosability"},
        {"paint", "solve the paint/correct game"},
        {"pipeline", "full chain with every assertion reported"}};
    for (const auto& [name, desc] : commands)
        app.add_subcommand(name, desc)->fallthrough()->callback([&opt, n = name] { opt.command = n; });

    CommandResult result;
    auto fail = [&](Status s, const std::string& msg) {
        result.status = s;
        result.payload = {{"command", opt.command}, {"status", to_string(s)}, {"error", msg}};
        if (opt.json)
            out << result.payload.dump(2) << '\n';
        else
            err << "brooks: " << msg << '\n';
        return result;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return result;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return result;
    } catch (const CLI::ParseError& e) {
        return fail(Status::input_error, e.what());
    }

    try {
        result = dispatch(opt, in);
    } catch (const CapacityError& e) {
        return fail(Status::capacity_error, e.what());
    } catch (const ParseError& e) {
        return fail(Status::input_error, e.what());
    } catch (const ValidationError& e) {
        return fail(Status::input_error, e.what());
    } catch (const DomainError& e) {
        return fail(Status::input_error, e.what());
    } catch (const UsageError& e) {
        return fail(Status::input_error, e.what());
    } catch (const std::logic_error& e) {
        return fail(Status::property_failed, std::string("internal check failed: ") + e.what());
    }

    json doc = {{"command", opt.command}, {"status", to_string(result.status)}};
    for (const auto& [k, v] : result.payload.items()) doc[k] = v;
    result.payload = std::move(doc);
    if (opt.json)
        out << result.payload.dump(2) << '\n';
    else
        out << render_text(result.payload);
    return result;
}

}  // namespace brooks::cli
