#include "topstruct/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <string>

namespace topstruct {

Graph::Graph(int n) : n_(n), adj_(n, VertexSet(n))
{
    if (n < 0) throw PreconditionFailed("negative vertex count");
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n)
{
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw PreconditionFailed("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
        if (u == v) throw PreconditionFailed("loop at vertex " + std::to_string(u + 1));
        if (!add_edge(u, v))
            throw PreconditionFailed("parallel edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
    }
}

bool Graph::add_edge(Vertex u, Vertex v)
{
    if (u == v) throw PreconditionFailed("loop at vertex " + std::to_string(u + 1));
    if (adj_[u].contains(v)) return false;
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++m_;
    return true;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::neighborhood(const VertexSet& s) const
{
    VertexSet out(n_);
    for (Vertex v : s) out |= adj_[v];
    return out - s;
}

VertexSet Graph::reach(const VertexSet& from, const VertexSet& allowed) const
{
    VertexSet seen = from & allowed;
    std::vector<Vertex> stack = seen.to_vector();
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        VertexSet fresh = (adj_[v] & allowed) - seen;
        for (Vertex w : fresh) {
            seen.insert(w);
            stack.push_back(w);
        }
    }
    return seen;
}

std::vector<VertexSet> Graph::components(const VertexSet& within) const
{
    std::vector<VertexSet> out;
    VertexSet left = within;
    while (!left.empty()) {
        VertexSet seed(n_);
        seed.insert(left.first());
        VertexSet comp = reach(seed, left);
        left -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

bool Graph::is_connected(const VertexSet& within) const
{
    if (within.empty()) return true;
    VertexSet seed(n_);
    seed.insert(within.first());
    return reach(seed, within) == within;
}

VertexSet InducedSubgraph::lift(const VertexSet& local, int parent_universe) const
{
    VertexSet out(parent_universe);
    for (Vertex v : local) out.insert(to_parent[v]);
    return out;
}

VertexSet InducedSubgraph::project(const VertexSet& parent) const
{
    VertexSet out(graph.vertex_count());
    for (Vertex v : parent)
        if (to_local[v] >= 0) out.insert(to_local[v]);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s)
{
    InducedSubgraph sub;
    sub.to_parent = s.to_vector();
    sub.to_local.assign(g.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i) sub.to_local[sub.to_parent[i]] = i;
    sub.graph = Graph(static_cast<int>(sub.to_parent.size()));
    for (int i = 0; i < static_cast<int>(sub.to_parent.size()); ++i)
        for (Vertex w : g.neighbors(sub.to_parent[i]) & s)
            if (sub.to_local[w] > i) sub.graph.add_edge(i, sub.to_local[w]);
    return sub;
}

Separation Separation::canonical() const
{
    const Vertex ea = (side_a - side_b).first();
    const Vertex eb = (side_b - side_a).first();
    const auto key = [](Vertex v) { return v < 0 ? std::numeric_limits<Vertex>::max() : v; };
    if (key(eb) < key(ea)) return inverse();
    return *this;
}

bool is_separation(const Graph& g, const VertexSet& a, const VertexSet& b)
{
    if (!((a | b) == g.all())) return false;
    const VertexSet only_a = a - b;
    const VertexSet only_b = b - a;
    for (Vertex v : only_a)
        if (g.neighbors(v).intersects(only_b)) return false;
    return true;
}

bool is_tight(const Graph& g, const Separation& s, bool strict)
{
    const VertexSet sep = s.separator();
    const VertexSet only_a = s.side_a - s.side_b;
    const VertexSet only_b = s.side_b - s.side_a;
    if (strict) {
        for (Vertex x : sep)
            if (!g.neighbors(x).intersects(only_a) || !g.neighbors(x).intersects(only_b)) return false;
    }
    const auto linked = [&](Vertex x, Vertex y, const VertexSet& interior) {
        if (g.adjacent(x, y)) return true;
        VertexSet start(g.vertex_count());
        start.insert(x);
        VertexSet allowed = interior;
        allowed.insert(x);
        return g.reach(start, allowed).intersects(g.neighbors(y));
    };
    for (Vertex x : sep)
        for (Vertex y = sep.next(x); y >= 0; y = sep.next(y))
            if (!linked(x, y, only_a) || !linked(x, y, only_b)) return false;
    return true;
}

namespace {

// Unit-capacity vertex-split flow network: vertex v becomes in(v)=2v and
// out(v)=2v+1; the source and sink are the two trailing nodes.
class SplitFlow {
public:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    explicit SplitFlow(int nodes) : head_(nodes, -1) {}

    void add_arc(int from, int to, int cap)
    {
        arcs_.push_back({to, cap, head_[from]});
        head_[from] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, 0, head_[to]});
        head_[to] = static_cast<int>(arcs_.size()) - 1;
    }

    int max_flow(int s, int t)
    {
        int flow = 0;
        std::vector<int> via(head_.size());
        while (true) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> q;
            q.push(s);
            via[s] = -2;
            while (!q.empty() && via[t] == -1) {
                int x = q.front();
                q.pop();
                for (int a = head_[x]; a >= 0; a = arcs_[a].next)
                    if (arcs_[a].cap > 0 && via[arcs_[a].to] == -1) {
                        via[arcs_[a].to] = a;
                        q.push(arcs_[a].to);
                    }
            }
            if (via[t] == -1) return flow;
            int push = kInf;
            for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) push = std::min(push, arcs_[via[x]].cap);
            for (int x = t; x != s; x = arcs_[via[x] ^ 1].to) {
                arcs_[via[x]].cap -= push;
                arcs_[via[x] ^ 1].cap += push;
            }
            flow += push;
        }
    }

    std::vector<bool> residual_reach(int s) const
    {
        std::vector<bool> seen(head_.size(), false);
        std::vector<int> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int a = head_[x]; a >= 0; a = arcs_[a].next)
                if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
                    seen[arcs_[a].to] = true;
                    stack.push_back(arcs_[a].to);
                }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int cap;
        int next;
    };
    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

SplitFlow build_split_network(const Graph& g, const std::vector<int>& vertex_cap)
{
    const int n = g.vertex_count();
    SplitFlow net(2 * n + 2);
    for (Vertex v = 0; v < n; ++v) net.add_arc(2 * v, 2 * v + 1, vertex_cap[v]);
    for (auto [u, v] : g.edges()) {
        net.add_arc(2 * u + 1, 2 * v, SplitFlow::kInf);
        net.add_arc(2 * v + 1, 2 * u, SplitFlow::kInf);
    }
    return net;
}

}  // namespace

int min_vertex_cut(const Graph& g, Vertex u, Vertex v)
{
    if (u == v || g.adjacent(u, v))
        throw AdjacentPair("vertices " + std::to_string(u + 1) + " and " + std::to_string(v + 1));
    const int n = g.vertex_count();
    std::vector<int> cap(n, 1);
    cap[u] = cap[v] = SplitFlow::kInf;
    SplitFlow net = build_split_network(g, cap);
    return net.max_flow(2 * u + 1, 2 * v);
}

VertexSet min_vertex_separator(const Graph& g, const VertexSet& from, const VertexSet& to)
{
    const int n = g.vertex_count();
    SplitFlow net = build_split_network(g, std::vector<int>(n, 1));
    const int source = 2 * n, sink = 2 * n + 1;
    for (Vertex v : from) net.add_arc(source, 2 * v, SplitFlow::kInf);
    for (Vertex v : to) net.add_arc(2 * v + 1, sink, SplitFlow::kInf);
    net.max_flow(source, sink);
    const auto seen = net.residual_reach(source);
    VertexSet cut(n);
    for (Vertex v = 0; v < n; ++v)
        if (seen[2 * v] && !seen[2 * v + 1]) cut.insert(v);
    return cut;
}

Graph overlay_clique(const Graph& g, const VertexSet& z)
{
    Graph out = g;
    for (Vertex u : z)
        for (Vertex v = z.next(u); v >= 0; v = z.next(v)) out.add_edge(u, v);
    return out;
}

bool for_each_separation(const Graph& g, int max_order, Budget& budget,
                         const std::function<bool(const Separation&)>& f)
{
    const int n = g.vertex_count();
    const std::vector<Vertex> pool = g.all().to_vector();
    const VertexSet all = g.all();
    for (int size = 0; size < max_order && size <= n; ++size) {
        const bool finished = for_each_subset(pool, size, n, [&](const VertexSet& sep) {
            budget.spend(1, "enumerate_separations");
            const auto comps = g.components(all - sep);
            if (comps.empty()) return f(Separation{sep, sep});
            const int c = static_cast<int>(comps.size());
            if (c > 40) throw BudgetExceeded("enumerate_separations: too many components");
            // Component 0 always goes to side A; the rest follow the mask.
            const std::uint64_t limit = std::uint64_t{1} << (c - 1);
            for (std::uint64_t mask = 0; mask < limit; ++mask) {
                budget.spend(1, "enumerate_separations");
                VertexSet a = sep | comps[0];
                VertexSet b = sep;
                for (int i = 1; i < c; ++i) ((mask >> (i - 1)) & 1u ? a : b) |= comps[i];
                if (!f(Separation{a, b}.canonical())) return false;
            }
            return true;
        });
        if (!finished) return false;
    }
    return true;
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order, Budget& budget)
{
    std::vector<Separation> out;
    for_each_separation(g, max_order, budget, [&](const Separation& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Separation> enumerate_separations(const Graph& g, int max_order)
{
    Budget budget;
    return enumerate_separations(g, max_order, budget);
}

}  // namespace topstruct
