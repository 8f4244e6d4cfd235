#include "topstruct/pipeline.hpp"

#include <algorithm>
#include <string>

#include "topstruct/lean.hpp"

namespace topstruct {

Parameters Parameters::from_r(int r)
{
    if (r < 2) throw PreconditionFailed("r must be at least 2");
    const int k = r * (r - 1);
    return Parameters{r, k, 2 * k, false};
}

Parameters Parameters::from_km(int k, int m)
{
    if (k < 1) throw PreconditionFailed("k must be at least 1");
    if (m < 2 * k - 1) throw PreconditionFailed("m must be at least 2k-1");
    int r = 1;
    while ((r + 1) * r <= k) ++r;
    return Parameters{r, k, m, true};
}

const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

int distinguishing_order(const Graph& g, const Orientation& o1, const Orientation& o2, Budget& budget)
{
    const auto d = min_distinguishing_order(g, o1, o2, budget);
    if (!d) throw Indistinguishable(o1.label() + " and " + o2.label());
    return *d;
}

int distinguishing_order(const Graph& g, const Orientation& o1, const Orientation& o2)
{
    Budget budget;
    return distinguishing_order(g, o1, o2, budget);
}

std::set<TreeEdge> select_f(const Graph& g, const TreeDecomposition& td, const std::vector<Orientation>& blocks,
                            const std::vector<Orientation>& models, Budget& budget, bool exact,
                            std::vector<PairRecord>* records)
{
    std::vector<std::set<TreeEdge>> efficient;
    std::set<TreeEdge> candidates;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (std::size_t j = 0; j < models.size(); ++j) {
            int best = -1;
            std::vector<std::pair<int, TreeEdge>> hits;
            for (auto e : td.edges()) {
                const Separation sep = induced_separation(td, e.first, e.second);
                if (sep.order() >= std::min(blocks[i].k(), models[j].k())) continue;
                if (!distinguishes(blocks[i], models[j], sep)) continue;
                hits.emplace_back(sep.order(), e);
                if (best < 0 || sep.order() < best) best = sep.order();
            }
            if (best < 0)
                throw CoverageImpossible("no tree edge distinguishes " + blocks[i].label() + " from " +
                                         models[j].label());
            const int d = exact ? distinguishing_order(g, blocks[i], models[j], budget) : best;
            if (d != best)
                throw CoverageImpossible("cheapest tree edge between " + blocks[i].label() + " and " +
                                         models[j].label() + " has order " + std::to_string(best) +
                                         ", distinguishing order is " + std::to_string(d));
            std::set<TreeEdge> eff;
            for (const auto& [order, e] : hits)
                if (order == d) eff.insert(e);
            candidates.insert(eff.begin(), eff.end());
            if (records)
                records->push_back(PairRecord{static_cast<int>(i), static_cast<int>(j), d, {eff.begin(), eff.end()}});
            efficient.push_back(std::move(eff));
        }

    std::vector<TreeEdge> order(candidates.begin(), candidates.end());
    std::sort(order.begin(), order.end(), [&](const TreeEdge& a, const TreeEdge& b) {
        const int oa = edge_order(td, a.first, a.second), ob = edge_order(td, b.first, b.second);
        if (oa != ob) return oa > ob;
        return a > b;
    });
    std::set<TreeEdge> f = candidates;
    for (const auto& e : order) {
        f.erase(e);
        const bool covered = std::all_of(efficient.begin(), efficient.end(), [&](const std::set<TreeEdge>& eff) {
            return std::any_of(eff.begin(), eff.end(), [&](const TreeEdge& x) { return f.count(x) != 0; });
        });
        if (!covered) f.insert(e);
    }
    return f;
}

Coloring color_nodes(const TreeDecomposition& td, const std::set<TreeEdge>& f,
                     const std::vector<NodeId>& block_homes, const std::vector<NodeId>& model_homes)
{
    for (const auto& [s, t] : f)
        if (!td.has_edge(s, t)) throw NotAnEdge(std::to_string(s) + "-" + std::to_string(t));
    const auto cut = [&](NodeId a, NodeId b) { return f.count({std::min(a, b), std::max(a, b)}) != 0; };
    const std::set<NodeId> bh(block_homes.begin(), block_homes.end());
    const std::set<NodeId> mh(model_homes.begin(), model_homes.end());

    Coloring out;
    out.f_edges = f;
    for (NodeId root : td.nodes()) {
        if (out.color.count(root)) continue;
        std::vector<NodeId> comp{root};
        std::set<NodeId> seen{root};
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (NodeId u : td.neighbors(comp[i]))
                if (!cut(comp[i], u) && seen.insert(u).second) comp.push_back(u);
        const bool blue = std::any_of(comp.begin(), comp.end(), [&](NodeId u) { return bh.count(u) != 0; });
        const bool red = std::any_of(comp.begin(), comp.end(), [&](NodeId u) { return mh.count(u) != 0; });
        if (blue && red)
            throw BichromaticComponent("component of node " + std::to_string(root) +
                                       " holds block and model home nodes");
        if (!blue && !red && !block_homes.empty() && !model_homes.empty())
            throw UncoloredComponent("component of node " + std::to_string(root) + " holds no home node");
        for (NodeId u : comp) {
            out.color[u] = red ? Color::Red : Color::Blue;
            if (!blue && !red) out.defaulted.insert(u);
        }
    }
    return out;
}

std::pair<TreeDecomposition, std::map<NodeId, Color>> contract_blue(const TreeDecomposition& td, const Coloring& c)
{
    TreeDecomposition out = td;
    std::map<NodeId, Color> colors = c.color;
    while (true) {
        const auto edges = out.edges();
        const auto it = std::find_if(edges.begin(), edges.end(), [&](const TreeEdge& e) {
            return colors.at(e.first) == Color::Blue && colors.at(e.second) == Color::Blue;
        });
        if (it == edges.end()) break;
        const NodeId merged = out.next_id();
        out = contract_edge(out, it->first, it->second);
        colors.erase(it->first);
        colors.erase(it->second);
        colors[merged] = Color::Blue;
    }
    return {out, colors};
}

bool check_join_lemma(const Graph& g, const TreeDecomposition& td, NodeId s, NodeId t, Budget& budget)
{
    if (!td.has_edge(s, t)) throw NotAnEdge(std::to_string(s) + "-" + std::to_string(t));
    const VertexSet w = subtree_vertices(td, td.side(s, t));
    const InducedSubgraph sub = induced_subgraph(g, w);
    const VertexSet z = sub.project(td.bag(s) & td.bag(t));
    return find_z_based_model(sub.graph, z, budget).has_value();
}

namespace {

int high_degree_count(const Graph& g, long long threshold)
{
    int c = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= threshold) ++c;
    return c;
}

StructureResult run_on(const Graph& g, const Parameters& p, const TreeDecomposition& td, Budget& budget,
                       const RunOptions& options, DecompositionResult& out)
{
    const bool oracle = g.vertex_count() <= options.oracle_limit;
    out.lean = td;

    out.blocks = find_k_blocks(g, p.k, budget);
    std::vector<Orientation> block_or;
    for (const auto& b : out.blocks) {
        block_or.push_back(block_orientation(g, p.k, b));
        out.block_homes.push_back(home_node(td, block_or.back()));
    }

    // A node is a model node when some K_m model has every branch set
    // meeting its bag; such a model points every tree edge at it.
    std::vector<Orientation> model_or;
    for (NodeId t : td.nodes()) {
        auto x = find_anchored_model(g, p.m, td.bag(t), budget);
        if (!x) continue;
        model_or.push_back(model_orientation(g, p.k, *x));
        const NodeId home = home_node(td, model_or.back());
        if (home != t)
            throw InternalInvariant("model anchored at node " + std::to_string(t) + " points to node " +
                                    std::to_string(home));
        out.models.push_back(std::move(*x));
        out.model_homes.push_back(t);
    }

    for (std::size_t i = 0; i < out.blocks.size(); ++i)
        for (std::size_t j = 0; j < out.models.size(); ++j) {
            const bool same = out.block_homes[i] == out.model_homes[j];
            if (oracle && same == min_distinguishing_order(g, block_or[i], model_or[j], budget).has_value())
                throw InternalInvariant("home nodes and enumeration disagree on " + block_or[i].label() + " vs " +
                                        model_or[j].label());
            if (!same) continue;
            const auto members = out.blocks[i].vertices.to_vector();
            const std::vector<Vertex> b0(members.begin(), members.begin() + p.r);
            SubdivisionResult sub;
            sub.embedding = extract_subdivision(g, p.k, p.m, out.blocks[i], out.models[j], b0, budget);
            sub.block = out.blocks[i];
            sub.model = out.models[j];
            sub.prescribed = b0;
            return sub;
        }

    const auto f = select_f(g, td, block_or, model_or, budget, oracle, &out.pairs);
    out.coloring = color_nodes(td, f, out.block_homes, out.model_homes);
    if (!out.coloring.defaulted.empty())
        out.notes.push_back(std::to_string(out.coloring.defaulted.size()) +
                            " node(s) without a home node in their component coloured blue");
    std::tie(out.contracted, out.colors) = contract_blue(td, out.coloring);
    return out;
}

}  // namespace

StructureResult run_structure(const Graph& g, const Parameters& params, Budget& budget, const RunOptions& options)
{
    DecompositionResult first;
    StructureResult result = run_on(g, params, build_k_lean(g, params.k, budget, LeanOptions{0, options.trace}), budget, options, first);
    auto* dec = std::get_if<DecompositionResult>(&result);
    if (!dec) return result;

    const long long threshold = 2LL * params.k * params.k;
    bool degree_ok = true;
    for (const auto& [t, c] : dec->colors)
        if (c == Color::Red &&
            high_degree_count(torso_at_node(g, dec->contracted, t).graph, threshold) >= params.k)
            degree_ok = false;
    if (degree_ok || g.vertex_count() > options.atomic_limit) return result;

    DecompositionResult second;
    StructureResult retry = run_on(g, params, build_k_atomic_exact(g, params.k, budget), budget, options, second);
    if (auto* d = std::get_if<DecompositionResult>(&retry)) {
        d->atomic_fallback = true;
        d->notes.push_back("red torso over the degree bound; rebuilt from the exact k-atomic decomposition");
    }
    return retry;
}

StructureResult run_structure(const Graph& g, const Parameters& params)
{
    Budget budget;
    return run_structure(g, params, budget);
}

}  // namespace topstruct
