#include "topstruct/io.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace topstruct {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream ss(line);
    std::vector<std::string> out;
    for (std::string t; ss >> t;) out.push_back(t);
    return out;
}

long long parse_int(const std::string& s, int line)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
    return v;
}

Vertex parse_vertex(const std::string& s, int n, int line)
{
    const long long v = parse_int(s, line);
    if (v < 1 || v > n) throw ParseError(line, "vertex " + s + " outside 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
}

std::map<NodeId, NodeId> renumbering(const TreeDecomposition& td)
{
    std::map<NodeId, NodeId> out;
    NodeId next = 1;
    for (NodeId t : td.nodes()) out[t] = next++;
    return out;
}

json vertices_json(const VertexSet& s)
{
    json a = json::array();
    for (Vertex v : s) a.push_back(v + 1);
    return a;
}

json td_json(const TreeDecomposition& td, const std::map<NodeId, Color>& colors, const Graph* g = nullptr)
{
    json out;
    out["nodes"] = td.node_count();
    out["adhesion"] = adhesion(td);
    int width = 0;
    json bags = json::array();
    for (const auto& [t, bag] : td.bags()) {
        width = std::max(width, bag.size());
        json b;
        b["id"] = t;
        b["size"] = bag.size();
        b["vertices"] = vertices_json(bag);
        if (auto it = colors.find(t); it != colors.end()) b["color"] = to_string(it->second);
        bags.push_back(b);
    }
    out["max_bag"] = width;
    out["bags"] = bags;
    json edges = json::array();
    for (auto [s, t] : td.edges()) {
        json e = {{"s", s}, {"t", t}, {"order", edge_order(td, s, t)}};
        if (g) e["tight"] = is_tight(*g, induced_separation(td, s, t));
        edges.push_back(e);
    }
    out["edges"] = edges;
    return out;
}

json verification_object(const TheoremReport& rep)
{
    json v;
    v["mode"] = rep.generalized ? "generalized" : "theorem";
    v["status"] = rep.status() == VerifyStatus::Pass        ? "pass"
                  : rep.status() == VerifyStatus::Violation ? "violation"
                                                            : "unverified";
    v["valid"] = rep.valid;
    v["adhesion"] = rep.adhesion;
    v["adhesion_bound"] = rep.adhesion_bound;
    v["degree_threshold"] = rep.degree_threshold;
    v["degree_count_bound"] = rep.degree_count_bound;
    v["minor_size"] = rep.minor_size;
    json torsos = json::array();
    for (const auto& t : rep.torsos)
        torsos.push_back({{"node", t.node},
                          {"color", t.color},
                          {"vertices", t.vertices},
                          {"high_degree", t.high_degree},
                          {"status", to_string(t.status)}});
    v["torsos"] = torsos;
    v["problems"] = rep.problems;
    return v;
}

}  // namespace

Graph read_graph(std::istream& in)
{
    std::string line;
    int lineno = 0;
    int n = -1;
    long long declared = -1;
    Graph g;
    long long found = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty() || t[0] == "c") continue;
        if (t[0] == "p") {
            if (n >= 0) throw ParseError(lineno, "second header line");
            if (t.size() != 4 || t[1] != "tw") throw ParseError(lineno, "header must be 'p tw <n> <m>'");
            const long long nv = parse_int(t[2], lineno);
            declared = parse_int(t[3], lineno);
            if (nv < 0 || declared < 0) throw ParseError(lineno, "negative count in header");
            if (nv > 1'000'000) throw ParseError(lineno, "vertex count too large");
            n = static_cast<int>(nv);
            g = Graph(n);
            continue;
        }
        if (n < 0) throw ParseError(lineno, "edge before header");
        if (t.size() != 2) throw ParseError(lineno, "edge line must have two vertices");
        const Vertex u = parse_vertex(t[0], n, lineno);
        const Vertex v = parse_vertex(t[1], n, lineno);
        if (u == v) throw ParseError(lineno, "loop at vertex " + t[0]);
        if (!g.add_edge(u, v)) throw ParseError(lineno, "parallel edge " + t[0] + " " + t[1]);
        ++found;
    }
    if (n < 0) throw ParseError(lineno + 1, "missing header");
    if (found != declared)
        throw ParseError(lineno, "header declares " + std::to_string(declared) + " edges, found " +
                                     std::to_string(found));
    return g;
}

void write_graph(std::ostream& out, const Graph& g)
{
    out << "p tw " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u + 1 << ' ' << v + 1 << '\n';
}

ColoredDecomposition read_td(std::istream& in)
{
    ColoredDecomposition out;
    std::string line;
    int lineno = 0;
    long long bags = -1, n = -1;
    std::vector<std::pair<int, TreeEdge>> edges;
    std::vector<std::pair<int, std::pair<NodeId, Color>>> colors;
    std::vector<std::pair<NodeId, std::vector<std::string>>> raw_bags;
    std::vector<int> bag_lines;
    while (std::getline(in, line)) {
        ++lineno;
        const auto t = tokens(line);
        if (t.empty()) continue;
        if (t[0] == "c") {
            if (t.size() >= 2 && t[1] == "color") {
                if (t.size() != 4 || (t[3] != "red" && t[3] != "blue"))
                    throw ParseError(lineno, "colour line must be 'c color <id> red|blue'");
                colors.push_back({lineno, {static_cast<NodeId>(parse_int(t[2], lineno)),
                                           t[3] == "red" ? Color::Red : Color::Blue}});
            }
            continue;
        }
        if (t[0] == "s") {
            if (bags >= 0) throw ParseError(lineno, "second header line");
            if (t.size() != 5 || t[1] != "td") throw ParseError(lineno, "header must be 's td <bags> <max bag> <n>'");
            bags = parse_int(t[2], lineno);
            parse_int(t[3], lineno);
            n = parse_int(t[4], lineno);
            if (bags < 0 || n < 0 || n > 1'000'000) throw ParseError(lineno, "bad header counts");
            continue;
        }
        if (bags < 0) throw ParseError(lineno, "content before header");
        if (t[0] == "b") {
            if (t.size() < 2) throw ParseError(lineno, "bag line needs an id");
            const long long id = parse_int(t[1], lineno);
            if (id < 1 || id > bags) throw ParseError(lineno, "bag id outside 1.." + std::to_string(bags));
            raw_bags.push_back({static_cast<NodeId>(id), {t.begin() + 2, t.end()}});
            bag_lines.push_back(lineno);
            continue;
        }
        if (t.size() != 2) throw ParseError(lineno, "tree edge line must have two bag ids");
        edges.push_back({lineno, {static_cast<NodeId>(parse_int(t[0], lineno)),
                                  static_cast<NodeId>(parse_int(t[1], lineno))}});
    }
    if (bags < 0) throw ParseError(lineno + 1, "missing header");
    const int nv = static_cast<int>(n);
    out.vertex_count = nv;
    for (std::size_t i = 0; i < raw_bags.size(); ++i) {
        const auto& [id, vs] = raw_bags[i];
        if (out.td.has_node(id)) throw ParseError(bag_lines[i], "bag " + std::to_string(id) + " listed twice");
        VertexSet bag(nv);
        for (const auto& s : vs) bag.insert(parse_vertex(s, nv, bag_lines[i]));
        out.td.add_node(id, bag);
    }
    if (out.td.node_count() != bags)
        throw ParseError(lineno, "header declares " + std::to_string(bags) + " bags, found " +
                                     std::to_string(out.td.node_count()));
    for (const auto& [ln, e] : edges) {
        if (!out.td.has_node(e.first) || !out.td.has_node(e.second) || e.first == e.second)
            throw ParseError(ln, "tree edge between unknown or equal bags");
        if (out.td.has_edge(e.first, e.second)) throw ParseError(ln, "repeated tree edge");
        out.td.add_edge(e.first, e.second);
    }
    for (const auto& [ln, c] : colors) {
        if (!out.td.has_node(c.first)) throw ParseError(ln, "colour for unknown bag " + std::to_string(c.first));
        out.colors[c.first] = c.second;
    }
    return out;
}

void write_td(std::ostream& out, const TreeDecomposition& td, int n, const std::map<NodeId, Color>& colors)
{
    const auto id = renumbering(td);
    int width = 0;
    for (const auto& [t, bag] : td.bags()) width = std::max(width, bag.size());
    out << "s td " << td.node_count() << ' ' << width << ' ' << n << '\n';
    for (const auto& [t, bag] : td.bags()) {
        if (auto it = colors.find(t); it != colors.end())
            out << "c color " << id.at(t) << ' ' << to_string(it->second) << '\n';
    }
    for (const auto& [t, bag] : td.bags()) {
        out << "b " << id.at(t);
        for (Vertex v : bag) out << ' ' << v + 1;
        out << '\n';
    }
    for (auto [s, t] : td.edges()) out << id.at(s) << ' ' << id.at(t) << '\n';
}

void write_dot(std::ostream& out, const TreeDecomposition& td, const std::map<NodeId, Color>& colors)
{
    const auto id = renumbering(td);
    out << "graph td {\n  node [shape=box];\n";
    for (const auto& [t, bag] : td.bags()) {
        out << "  n" << id.at(t) << " [label=\"" << id.at(t) << ": " << bag.to_string() << "\"";
        if (auto it = colors.find(t); it != colors.end())
            out << ", color=" << to_string(it->second) << ", fontcolor=" << to_string(it->second);
        out << "];\n";
    }
    for (auto [s, t] : td.edges())
        out << "  n" << id.at(s) << " -- n" << id.at(t) << " [label=\"" << edge_order(td, s, t) << "\"];\n";
    out << "}\n";
}

void write_model(std::ostream& out, const Model& x)
{
    for (std::size_t i = 0; i < x.branch_sets.size(); ++i) {
        out << "x " << i + 1 << ':';
        for (Vertex v : x.branch_sets[i]) out << ' ' << v + 1;
        out << '\n';
    }
}

void write_subdivision(std::ostream& out, const SubdivisionEmbedding& s)
{
    out << "bv";
    for (Vertex v : s.branch_vertices) out << ' ' << v + 1;
    out << '\n';
    for (const auto& [key, path] : s.paths) {
        out << "path " << key.first + 1 << ' ' << key.second + 1 << ':';
        for (Vertex v : path) out << ' ' << v + 1;
        out << '\n';
    }
}

void write_blocks(std::ostream& out, const std::vector<Block>& blocks)
{
    for (const auto& b : blocks) {
        out << "block:";
        for (Vertex v : b.vertices) out << ' ' << v + 1;
        out << '\n';
    }
}

std::string report_json(const Graph& g, const Parameters& params, const StructureResult& result,
                        const TheoremReport* verification)
{
    json r;
    r["graph"] = {{"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
    r["parameters"] = {{"r", params.r}, {"k", params.k}, {"m", params.m}, {"generalized", params.generalized}};
    if (const auto* sub = std::get_if<SubdivisionResult>(&result)) {
        r["variant"] = "subdivision";
        r["block"] = vertices_json(sub->block.vertices);
        json model = json::array();
        for (const auto& s : sub->model.branch_sets) model.push_back(vertices_json(s));
        r["model"] = model;
        json bv = json::array();
        for (Vertex v : sub->embedding.branch_vertices) bv.push_back(v + 1);
        r["branch_vertices"] = bv;
        json paths = json::array();
        for (const auto& [key, path] : sub->embedding.paths) {
            json p = json::array();
            for (Vertex v : path) p.push_back(v + 1);
            paths.push_back(p);
        }
        r["paths"] = paths;
    } else {
        const auto& dec = std::get<DecompositionResult>(result);
        r["variant"] = "decomposition";
        r["atomic_fallback"] = dec.atomic_fallback;
        r["lean"] = td_json(dec.lean, dec.coloring.color, &g);
        json blocks = json::array();
        for (std::size_t i = 0; i < dec.blocks.size(); ++i)
            blocks.push_back({{"vertices", vertices_json(dec.blocks[i].vertices)}, {"home", dec.block_homes[i]}});
        r["blocks"] = blocks;
        json models = json::array();
        for (std::size_t i = 0; i < dec.models.size(); ++i) {
            json sets = json::array();
            for (const auto& s : dec.models[i].branch_sets) sets.push_back(vertices_json(s));
            models.push_back({{"branch_sets", sets}, {"home", dec.model_homes[i]}});
        }
        r["models"] = models;
        json pairs = json::array();
        for (const auto& p : dec.pairs) {
            json eff = json::array();
            for (auto [s, t] : p.efficient_edges) eff.push_back({s, t});
            pairs.push_back({{"block", p.block}, {"model", p.model}, {"order", p.order}, {"efficient_edges", eff}});
        }
        r["pairs"] = pairs;
        json f = json::array();
        for (auto [s, t] : dec.coloring.f_edges) f.push_back({{"s", s}, {"t", t}, {"order", edge_order(dec.lean, s, t)}});
        r["f_edges"] = f;
        r["contracted"] = td_json(dec.contracted, dec.colors);
        r["notes"] = dec.notes;
    }
    if (verification) r["verification"] = verification_object(*verification);
    return r.dump(2) + "\n";
}

std::string verification_json(const TheoremReport& rep) { return verification_object(rep).dump(2) + "\n"; }

}  // namespace topstruct
