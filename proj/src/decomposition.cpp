#include "topstruct/decomposition.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace topstruct {

TreeDecomposition TreeDecomposition::trivial(const Graph& g)
{
    TreeDecomposition td;
    td.add_node(g.all());
    return td;
}

NodeId TreeDecomposition::add_node(VertexSet bag) { return add_node(next_id_, std::move(bag)); }

NodeId TreeDecomposition::add_node(NodeId id, VertexSet bag)
{
    if (bags_.count(id)) throw PreconditionFailed("duplicate node id " + std::to_string(id));
    bags_.emplace(id, std::move(bag));
    adj_[id];
    next_id_ = std::max(next_id_, id + 1);
    return id;
}

void TreeDecomposition::add_edge(NodeId s, NodeId t)
{
    if (!has_node(s) || !has_node(t) || s == t)
        throw PreconditionFailed("bad tree edge " + std::to_string(s) + "-" + std::to_string(t));
    adj_[s].insert(t);
    adj_[t].insert(s);
}

void TreeDecomposition::remove_edge(NodeId s, NodeId t)
{
    if (!has_edge(s, t)) throw NotAnEdge(std::to_string(s) + "-" + std::to_string(t));
    adj_[s].erase(t);
    adj_[t].erase(s);
}

void TreeDecomposition::remove_node(NodeId t)
{
    for (NodeId u : adj_.at(t)) adj_[u].erase(t);
    adj_.erase(t);
    bags_.erase(t);
}

int TreeDecomposition::edge_count() const
{
    std::size_t c = 0;
    for (const auto& [t, nb] : adj_) c += nb.size();
    return static_cast<int>(c / 2);
}

bool TreeDecomposition::has_edge(NodeId s, NodeId t) const
{
    auto it = adj_.find(s);
    return it != adj_.end() && it->second.count(t) != 0;
}

std::vector<NodeId> TreeDecomposition::nodes() const
{
    std::vector<NodeId> out;
    for (const auto& [t, bag] : bags_) out.push_back(t);
    return out;
}

std::vector<TreeEdge> TreeDecomposition::edges() const
{
    std::vector<TreeEdge> out;
    for (const auto& [s, nb] : adj_)
        for (NodeId t : nb)
            if (s < t) out.emplace_back(s, t);
    return out;
}

std::vector<NodeId> TreeDecomposition::path(NodeId s, NodeId t) const
{
    std::map<NodeId, NodeId> parent{{s, s}};
    std::vector<NodeId> stack{s};
    while (!stack.empty() && !parent.count(t)) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : adj_.at(x))
            if (!parent.count(y)) {
                parent[y] = x;
                stack.push_back(y);
            }
    }
    if (!parent.count(t)) throw PreconditionFailed("nodes not connected in tree");
    std::vector<NodeId> out{t};
    while (out.back() != s) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
}

std::set<NodeId> TreeDecomposition::side(NodeId s, NodeId t) const
{
    if (!has_edge(s, t)) throw NotAnEdge(std::to_string(s) + "-" + std::to_string(t));
    std::set<NodeId> seen{t};
    std::vector<NodeId> stack{t};
    while (!stack.empty()) {
        NodeId x = stack.back();
        stack.pop_back();
        for (NodeId y : adj_.at(x))
            if (y != s && seen.insert(y).second) stack.push_back(y);
    }
    return seen;
}

TreeDecomposition TreeDecomposition::normalized() const
{
    std::map<NodeId, NodeId> relabel;
    NodeId next = 1;
    for (const auto& [t, bag] : bags_) relabel[t] = next++;
    TreeDecomposition out;
    for (const auto& [t, bag] : bags_) out.add_node(relabel[t], bag);
    for (auto [s, t] : edges()) out.add_edge(relabel[s], relabel[t]);
    return out;
}

bool TreeDecomposition::structurally_equal(const TreeDecomposition& other) const
{
    const auto a = normalized();
    const auto b = other.normalized();
    return a.bags_ == b.bags_ && a.edges() == b.edges();
}

bool validate_decomposition(const Graph& g, const TreeDecomposition& td)
{
    const int n = g.vertex_count();
    if (td.node_count() == 0) return false;
    for (const auto& [t, bag] : td.bags())
        if (bag.universe() != n) return false;
    // Tree: connected with |E| = |V| - 1.
    if (td.edge_count() != td.node_count() - 1) return false;
    {
        const auto nodes = td.nodes();
        std::set<NodeId> seen{nodes.front()};
        std::vector<NodeId> stack{nodes.front()};
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : td.neighbors(x))
                if (seen.insert(y).second) stack.push_back(y);
        }
        if (static_cast<int>(seen.size()) != td.node_count()) return false;
    }
    for (Vertex v = 0; v < n; ++v) {
        std::set<NodeId> holding;
        for (const auto& [t, bag] : td.bags())
            if (bag.contains(v)) holding.insert(t);
        if (holding.empty()) return false;
        // Edges of T inside `holding` must number |holding| - 1.
        int inner = 0;
        for (NodeId t : holding)
            for (NodeId u : td.neighbors(t))
                if (u > t && holding.count(u)) ++inner;
        if (inner != static_cast<int>(holding.size()) - 1) return false;
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& [t, bag] : td.bags())
            if (bag.contains(u) && bag.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

VertexSet subtree_vertices(const TreeDecomposition& td, const std::set<NodeId>& nodes)
{
    VertexSet out(td.bag(*nodes.begin()).universe());
    for (NodeId t : nodes) out |= td.bag(t);
    return out;
}

Separation induced_separation(const TreeDecomposition& td, NodeId s, NodeId t)
{
    if (!td.has_edge(s, t)) throw NotAnEdge(std::to_string(s) + "-" + std::to_string(t));
    return {subtree_vertices(td, td.side(t, s)), subtree_vertices(td, td.side(s, t))};
}

int edge_order(const TreeDecomposition& td, NodeId s, NodeId t)
{
    if (!td.has_edge(s, t)) throw NotAnEdge(std::to_string(s) + "-" + std::to_string(t));
    return td.bag(s).intersection_size(td.bag(t));
}

int adhesion(const TreeDecomposition& td)
{
    int best = 0;
    for (auto [s, t] : td.edges()) best = std::max(best, edge_order(td, s, t));
    return best;
}

InducedSubgraph torso_at_subtree(const Graph& g, const TreeDecomposition& td, const std::set<NodeId>& nodes)
{
    if (nodes.empty()) throw NotASubtree("empty node set");
    for (NodeId t : nodes)
        if (!td.has_node(t)) throw NotASubtree("unknown node " + std::to_string(t));
    {
        std::set<NodeId> seen{*nodes.begin()};
        std::vector<NodeId> stack{*nodes.begin()};
        while (!stack.empty()) {
            NodeId x = stack.back();
            stack.pop_back();
            for (NodeId y : td.neighbors(x))
                if (nodes.count(y) && seen.insert(y).second) stack.push_back(y);
        }
        if (seen.size() != nodes.size()) throw NotASubtree("node set is not connected in the tree");
    }
    const VertexSet covered = subtree_vertices(td, nodes);
    Graph overlaid = g;
    for (NodeId s : nodes)
        for (NodeId t : td.neighbors(s))
            if (!nodes.count(t)) overlaid = overlay_clique(overlaid, td.bag(s) & td.bag(t));
    return induced_subgraph(overlaid, covered);
}

InducedSubgraph torso_at_node(const Graph& g, const TreeDecomposition& td, NodeId t)
{
    return torso_at_subtree(g, td, {t});
}

TreeDecomposition contract_edge(const TreeDecomposition& td, NodeId s, NodeId t)
{
    if (!td.has_edge(s, t)) throw NotAnEdge(std::to_string(s) + "-" + std::to_string(t));
    TreeDecomposition out = td;
    std::set<NodeId> around;
    for (NodeId u : td.neighbors(s))
        if (u != t) around.insert(u);
    for (NodeId u : td.neighbors(t))
        if (u != s) around.insert(u);
    const NodeId merged = out.add_node(td.bag(s) | td.bag(t));
    out.remove_node(s);
    out.remove_node(t);
    for (NodeId u : around) out.add_edge(merged, u);
    out.record_provenance(merged, s, t);
    return out;
}

Fatness fatness_of(const TreeDecomposition& td, int n)
{
    Fatness f{std::vector<int>(n + 1, 0)};
    for (const auto& [t, bag] : td.bags()) ++f.counts[n - bag.size()];
    return f;
}

int min_path_order(const TreeDecomposition& td, NodeId s, NodeId t, int fallback)
{
    if (s == t) return fallback;
    const auto p = td.path(s, t);
    int best = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i + 1 < p.size(); ++i) best = std::min(best, edge_order(td, p[i], p[i + 1]));
    return best;
}

namespace {

struct ComponentWeights {
    int in_s;
    int in_t;
};

// Chooses a set of components for side A so that A holds >= p vertices of
// bag_s and B holds >= p vertices of bag_t. Returns the chosen indices.
std::optional<std::vector<int>> split_components(const std::vector<ComponentWeights>& comps, int base_s,
                                                 int base_t, int p)
{
    const int need_a = std::max(0, p - base_s);
    int total_t = 0;
    for (const auto& c : comps) total_t += c.in_t;
    // Side B keeps total_t - (t-weight sent to A); it needs base_t + that >= p.
    const int allow_t = total_t + base_t - p;
    if (allow_t < 0) return std::nullopt;
    constexpr int kUnreached = std::numeric_limits<int>::max();
    const int c = static_cast<int>(comps.size());
    // cost[i][x]: least t-weight moved to A using components < i reaching
    // min(need_a, s-weight) = x.
    std::vector<std::vector<int>> cost(c + 1, std::vector<int>(need_a + 1, kUnreached));
    cost[0][0] = 0;
    for (int i = 0; i < c; ++i)
        for (int x = 0; x <= need_a; ++x) {
            if (cost[i][x] == kUnreached) continue;
            cost[i + 1][x] = std::min(cost[i + 1][x], cost[i][x]);
            const int y = std::min(need_a, x + comps[i].in_s);
            cost[i + 1][y] = std::min(cost[i + 1][y], cost[i][x] + comps[i].in_t);
        }
    if (cost[c][need_a] > allow_t) return std::nullopt;
    // Walk back preferring to leave components on side B.
    std::vector<int> chosen;
    int x = need_a;
    for (int i = c; i > 0; --i) {
        const int target = cost[i][x];
        if (cost[i - 1][x] == target) continue;
        // Component i-1 went to A from some predecessor state.
        for (int prev = 0; prev <= need_a; ++prev) {
            if (cost[i - 1][prev] == kUnreached) continue;
            if (std::min(need_a, prev + comps[i - 1].in_s) == x && cost[i - 1][prev] + comps[i - 1].in_t == target) {
                chosen.push_back(i - 1);
                x = prev;
                break;
            }
        }
    }
    std::reverse(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

std::optional<LeannessViolation> check_k_lean(const Graph& g, const TreeDecomposition& td, int k, Budget& budget)
{
    if (adhesion(td) >= k)
        throw PreconditionFailed("adhesion " + std::to_string(adhesion(td)) + " is not below k=" + std::to_string(k));
    const int n = g.vertex_count();
    const auto nodes = td.nodes();
    const std::vector<Vertex> pool = g.all().to_vector();
    const VertexSet all = g.all();
    for (int p = 1; p <= k; ++p) {
        std::vector<TreeEdge> pairs;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (td.bag(nodes[i]).size() < p) continue;
            for (std::size_t j = i; j < nodes.size(); ++j) {
                if (td.bag(nodes[j]).size() < p) continue;
                if (min_path_order(td, nodes[i], nodes[j], k) < p) continue;
                pairs.emplace_back(nodes[i], nodes[j]);
            }
        }
        if (pairs.empty()) continue;
        std::optional<LeannessViolation> best;
        std::size_t best_index = pairs.size();
        for (int size = 0; size < p && size <= n && best_index > 0; ++size) {
            for_each_subset(pool, size, n, [&](const VertexSet& sep) {
                budget.spend(1, "check_k_lean");
                const auto comps = g.components(all - sep);
                for (std::size_t idx = 0; idx < best_index; ++idx) {
                    const auto [s, t] = pairs[idx];
                    const VertexSet& bs = td.bag(s);
                    const VertexSet& bt = td.bag(t);
                    std::vector<ComponentWeights> weights;
                    weights.reserve(comps.size());
                    for (const auto& c : comps) weights.push_back({c.intersection_size(bs), c.intersection_size(bt)});
                    budget.spend(comps.size() + 1, "check_k_lean");
                    auto chosen = split_components(weights, sep.intersection_size(bs), sep.intersection_size(bt), p);
                    if (!chosen) continue;
                    Separation w{sep, sep};
                    std::vector<bool> to_a(comps.size(), false);
                    for (int c : *chosen) to_a[c] = true;
                    for (std::size_t c = 0; c < comps.size(); ++c) (to_a[c] ? w.side_a : w.side_b) |= comps[c];
                    best = LeannessViolation{s, t, p, w};
                    best_index = idx;
                    break;
                }
                return best_index > 0;
            });
        }
        if (best) return best;
    }
    return std::nullopt;
}

std::optional<LeannessViolation> check_k_lean(const Graph& g, const TreeDecomposition& td, int k)
{
    Budget budget;
    return check_k_lean(g, td, k, budget);
}

bool is_leanness_violation(const Graph& g, const TreeDecomposition& td, int k, const LeannessViolation& viol)
{
    if (!td.has_node(viol.s) || !td.has_node(viol.t)) return false;
    if (viol.p < 1 || viol.p > k) return false;
    if (min_path_order(td, viol.s, viol.t, k) < viol.p) return false;
    const auto& w = viol.witness;
    if (w.side_a.universe() != g.vertex_count() || w.side_b.universe() != g.vertex_count()) return false;
    if (!is_separation(g, w)) return false;
    if (w.order() >= viol.p) return false;
    return w.side_a.intersection_size(td.bag(viol.s)) >= viol.p &&
           w.side_b.intersection_size(td.bag(viol.t)) >= viol.p;
}

NodeId home_node(const TreeDecomposition& td, const Orientation& o)
{
    std::map<NodeId, int> outgoing;
    for (NodeId t : td.nodes()) outgoing[t] = 0;
    for (auto [s, t] : td.edges()) {
        if (o.contains(induced_separation(td, s, t)))
            ++outgoing[s];
        else
            ++outgoing[t];
    }
    std::vector<NodeId> sinks;
    for (auto [t, c] : outgoing)
        if (c == 0) sinks.push_back(t);
    if (sinks.size() != 1)
        throw InconsistentOrientation(o.label() + ": " + std::to_string(sinks.size()) + " sinks in tree");
    return sinks.front();
}

}  // namespace topstruct
