#include "brooks/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "brooks/errors.hpp"

namespace brooks {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream in{std::string(line)};
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    int lineno = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        f(line, ++lineno);
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
}

long parse_int(const std::string& tok, int lineno) {
    long v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) throw ParseError("expected an integer, got '" + tok + "'", lineno);
    return v;
}

}  // namespace

Format parse_format(std::string_view name) {
    if (name == "edgelist" || name == "edge_list") return Format::edge_list;
    if (name == "dimacs" || name == "col") return Format::dimacs;
    throw ValidationError("unknown graph format '" + std::string(name) + "'");
}

namespace {

std::pair<Graph, std::vector<Edge>> edge_list_arcs(std::string_view text) {
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<Edge> edges;
    auto id_of = [&](const std::string& name, int lineno) {
        auto [it, fresh] = ids.emplace(name, static_cast<int>(names.size()));
        if (fresh) {
            if (names.size() == kMaxVertices) throw ParseError("more than 64 vertices", lineno);
            names.push_back(name);
        }
        return it->second;
    };
    for_each_line(text, [&](std::string_view line, int lineno) {
        auto toks = tokenize(line);
        if (toks.empty()) return;
        if (toks[0] == "#vertices") {
            for (std::size_t i = 1; i < toks.size(); ++i) id_of(toks[i], lineno);
            return;
        }
        if (toks[0][0] == '#') return;
        if (toks.size() != 2) throw ParseError("expected exactly two vertex names", lineno);
        int u = id_of(toks[0], lineno), v = id_of(toks[1], lineno);
        if (u == v) throw ValidationError("line " + std::to_string(lineno) + ": loop at vertex '" + toks[0] + "'");
        edges.emplace_back(u, v);
    });
    int n = static_cast<int>(names.size());
    return {Graph(n, edges, std::move(names)), edges};
}

std::pair<Graph, std::vector<Edge>> dimacs_arcs(std::string_view text, std::vector<std::string>& warnings) {
    long n = -1, m = 0;
    std::vector<Edge> edges;
    for_each_line(text, [&](std::string_view line, int lineno) {
        auto toks = tokenize(line);
        if (toks.empty() || toks[0] == "c") return;
        if (toks[0] == "p") {
            if (n >= 0) throw ParseError("second 'p' line", lineno);
            if (toks.size() != 4 || (toks[1] != "edge" && toks[1] != "col"))
                throw ParseError("expected 'p edge <n> <m>'", lineno);
            n = parse_int(toks[2], lineno);
            m = parse_int(toks[3], lineno);
            if (n < 0 || n > kMaxVertices) throw ParseError("vertex count outside 0..64", lineno);
            if (m < 0) throw ParseError("negative edge count", lineno);
            return;
        }
        if (toks[0] == "e") {
            if (n < 0) throw ParseError("edge line before the 'p' line", lineno);
            if (toks.size() != 3) throw ParseError("expected 'e <u> <v>'", lineno);
            long u = parse_int(toks[1], lineno), v = parse_int(toks[2], lineno);
            if (u < 1 || u > n || v < 1 || v > n)
                throw ValidationError("line " + std::to_string(lineno) + ": vertex outside 1.." + std::to_string(n));
            if (u == v) throw ValidationError("line " + std::to_string(lineno) + ": loop at vertex " + toks[1]);
            edges.emplace_back(static_cast<int>(u - 1), static_cast<int>(v - 1));
            return;
        }
        throw ParseError("unrecognized line type '" + toks[0] + "'", lineno);
    });
    if (n < 0) throw ParseError("missing 'p edge' line", 0);
    Graph g(static_cast<int>(n), edges);
    if (g.edge_count() != m)
        warnings.push_back("header declares " + std::to_string(m) + " edges, found " +
                           std::to_string(g.edge_count()) + " distinct");
    return {g, edges};
}

}  // namespace

Graph parse_edge_list(std::string_view text) { return edge_list_arcs(text).first; }

Graph parse_dimacs(std::string_view text, std::vector<std::string>& warnings) {
    return dimacs_arcs(text, warnings).first;
}

Graph parse_dimacs(std::string_view text) {
    std::vector<std::string> ignored;
    return parse_dimacs(text, ignored);
}

Graph parse_graph(std::string_view text, Format format) {
    return format == Format::dimacs ? parse_dimacs(text) : parse_edge_list(text);
}

Orientation parse_orientation(std::string_view text, Format format) {
    std::vector<std::string> warnings;
    auto [g, arcs] = format == Format::dimacs ? dimacs_arcs(text, warnings) : edge_list_arcs(text);
    std::vector<Edge> unique;
    for (auto a : arcs) {
        if (std::find(unique.begin(), unique.end(), Edge{a.second, a.first}) != unique.end())
            throw ValidationError("edge {" + g.label(a.first) + "," + g.label(a.second) + "} given in both directions");
        if (std::find(unique.begin(), unique.end(), a) == unique.end()) unique.push_back(a);
    }
    return Orientation(std::move(g), std::move(unique));
}

std::string serialize(const Graph& g, Format format) {
    std::ostringstream out;
    if (format == Format::dimacs) {
        out << "p edge " << g.vertex_count() << ' ' << g.edge_count();
        for (auto [u, v] : g.edges()) out << "\ne " << u + 1 << ' ' << v + 1;
        return out.str();
    }
    out << "#vertices";
    for (int v = 0; v < g.vertex_count(); ++v) out << ' ' << g.label(v);
    for (auto [u, v] : g.edges()) out << '\n' << g.label(u) << ' ' << g.label(v);
    return out.str();
}

}  // namespace brooks
