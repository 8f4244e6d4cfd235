#pragma once

// Graph fixtures, random corpora and brute-force oracles shared by the unit
// tests and the acceptance binary. The oracles deliberately avoid the
// library's search code and work from the definitions.

#include <algorithm>
#include <functional>
#include <initializer_list>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "topstruct/decomposition.hpp"
#include "topstruct/obstructions.hpp"

namespace support {

using namespace topstruct;

/// Graph on 1..n from a 1-based edge list.
inline Graph make(int n, std::initializer_list<std::pair<int, int>> edges)
{
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
}

inline VertexSet set_of(int n, std::initializer_list<int> one_based)
{
    VertexSet s(n);
    for (int v : one_based) s.insert(v - 1);
    return s;
}

inline Graph path(int n)
{
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph cycle(int n)
{
    Graph g = path(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph complete_bipartite(int a, int b)
{
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline Graph petersen()
{
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
    }
    return g;
}

inline Graph grid(int rows, int cols)
{
    Graph g(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i + 1 < rows) g.add_edge(i * cols + j, (i + 1) * cols + j);
            if (j + 1 < cols) g.add_edge(i * cols + j, i * cols + j + 1);
        }
    return g;
}

/// Two copies of K_a sharing `shared` vertices (the first `shared` of each).
inline Graph glued_cliques(int a, int shared)
{
    const int n = 2 * a - shared;
    Graph g(n);
    std::vector<int> left, right;
    for (int i = 0; i < a; ++i) left.push_back(i);
    for (int i = 0; i < shared; ++i) right.push_back(i);
    for (int i = a; i < n; ++i) right.push_back(i);
    for (const auto* side : {&left, &right})
        for (std::size_t i = 0; i < side->size(); ++i)
            for (std::size_t j = i + 1; j < side->size(); ++j) g.add_edge((*side)[i], (*side)[j]);
    return g;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

/// `count` graphs with 1 <= n <= max_n, edge probability cycling through
/// 0.2, 0.4, 0.7.
inline std::vector<Graph> corpus(int count, int max_n, std::uint64_t seed, int min_n = 1)
{
    std::mt19937_64 rng(seed);
    const double probs[] = {0.2, 0.4, 0.7};
    std::vector<Graph> out;
    for (int i = 0; i < count; ++i) {
        const int n = min_n + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - min_n + 1));
        out.push_back(random_graph(n, probs[i % 3], rng));
    }
    return out;
}

/// Tree-decomposition from a random elimination ordering: eliminating v
/// creates the bag {v} ∪ later neighbours, linked to the bag of the first
/// later neighbour eliminated.
inline TreeDecomposition elimination_decomposition(const Graph& g0, std::mt19937_64& rng)
{
    Graph g = g0;
    const int n = g.vertex_count();
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    TreeDecomposition td;
    std::vector<NodeId> node(n);
    std::vector<VertexSet> later(n, VertexSet(n));
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        for (int w : g.neighbors(v))
            if (pos[w] > i) later[i].insert(w);
        for (int a : later[i])
            for (int b : later[i])
                if (a < b) g.add_edge(a, b);
        VertexSet bag = later[i];
        bag.insert(v);
        node[v] = td.add_node(bag);
    }
    for (int i = 0; i + 1 < n; ++i) {
        int next = -1;
        for (int w : later[i])
            if (next < 0 || pos[w] < pos[next]) next = w;
        td.add_edge(node[order[i]], node[next >= 0 ? next : order[i + 1]]);
    }
    return td;
}

// ---------------------------------------------------------------- oracles

/// Tree-decomposition axioms checked directly.
inline bool brute_valid(const Graph& g, const TreeDecomposition& td)
{
    const auto nodes = td.nodes();
    if (nodes.empty()) return g.vertex_count() == 0;
    if (td.edge_count() != static_cast<int>(nodes.size()) - 1) return false;
    std::set<NodeId> seen{nodes.front()};
    std::vector<NodeId> stack{nodes.front()};
    while (!stack.empty()) {
        NodeId t = stack.back();
        stack.pop_back();
        for (NodeId u : td.neighbors(t))
            if (seen.insert(u).second) stack.push_back(u);
    }
    if (seen.size() != nodes.size()) return false;
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (NodeId t : nodes) covered = covered || (td.bag(t).contains(u) && td.bag(t).contains(v));
        if (!covered) return false;
    }
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::vector<NodeId> holding;
        for (NodeId t : nodes)
            if (td.bag(t).contains(v)) holding.push_back(t);
        if (holding.empty()) return false;
        // Connected iff the holding nodes span |holding| - 1 tree edges.
        int inside = 0;
        for (auto [s, t] : td.edges())
            if (td.bag(s).contains(v) && td.bag(t).contains(v)) ++inside;
        if (inside != static_cast<int>(holding.size()) - 1) return false;
    }
    return true;
}

/// Smallest vertex set avoiding u and v whose removal disconnects them.
inline int brute_min_cut(const Graph& g, Vertex u, Vertex v)
{
    std::vector<Vertex> others;
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        if (x != u && x != v) others.push_back(x);
    for (int size = 0; size <= static_cast<int>(others.size()); ++size) {
        bool hit = false;
        for_each_subset(others, size, g.vertex_count(), [&](const VertexSet& s) {
            VertexSet from(g.vertex_count());
            from.insert(u);
            if (!g.reach(from, g.all() - s).contains(v)) {
                hit = true;
                return false;
            }
            return true;
        });
        if (hit) return size;
    }
    return static_cast<int>(others.size());
}

/// All separations of order < k in both orientations, from raw subset pairs.
inline std::vector<Separation> brute_separations(const Graph& g, int k)
{
    const int n = g.vertex_count();
    std::vector<Separation> out;
    // Each vertex is in A only, B only, or both: 3^n labellings.
    std::vector<int> lab(n, 0);
    while (true) {
        VertexSet a(n), b(n);
        for (int v = 0; v < n; ++v) {
            if (lab[v] != 1) a.insert(v);
            if (lab[v] != 0) b.insert(v);
        }
        if (a.intersection_size(b) < k && is_separation(g, a, b)) out.push_back({a, b});
        int i = 0;
        while (i < n && lab[i] == 2) lab[i++] = 0;
        if (i == n) break;
        ++lab[i];
    }
    return out;
}

/// k-lean from the definition: for all p <= k, nodes s, t (s = t allowed)
/// and separations (A, B) of order < p with |A ∩ V_s| >= p and
/// |B ∩ V_t| >= p, some edge on the s-t path has order < p.
inline bool brute_is_lean(const Graph& g, const TreeDecomposition& td, int k)
{
    const auto seps = brute_separations(g, k);
    const auto nodes = td.nodes();
    for (int p = 1; p <= k; ++p)
        for (NodeId s : nodes)
            for (NodeId t : nodes) {
                if (td.bag(s).size() < p || td.bag(t).size() < p) continue;
                const auto route = td.path(s, t);
                bool cheap = false;
                for (std::size_t i = 0; i + 1 < route.size(); ++i)
                    cheap = cheap || edge_order(td, route[i], route[i + 1]) < p;
                if (cheap) continue;
                for (const auto& sep : seps)
                    if (sep.order() < p && sep.side_a.intersection_size(td.bag(s)) >= p &&
                        sep.side_b.intersection_size(td.bag(t)) >= p)
                        return false;
            }
    return true;
}

/// k-blocks from the definition: maximal sets of >= k vertices that no
/// separation of order < k splits.
inline std::vector<VertexSet> brute_blocks(const Graph& g, int k)
{
    const int n = g.vertex_count();
    const auto seps = brute_separations(g, k);
    std::vector<VertexSet> good;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1u) s.insert(v);
        if (s.size() < k) continue;
        bool split = false;
        for (const auto& sep : seps)
            if (s.intersects(sep.side_a - sep.side_b) && s.intersects(sep.side_b - sep.side_a)) {
                split = true;
                break;
            }
        if (!split) good.push_back(s);
    }
    std::vector<VertexSet> out;
    for (const auto& s : good) {
        bool maximal = true;
        for (const auto& t : good)
            if (!(s == t) && s.is_subset_of(t)) maximal = false;
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// K_m minor by labelling every vertex with a branch set or "unused".
/// Tiny graphs only: (m + 1)^n labellings.
inline bool brute_has_minor(const Graph& g, int m)
{
    const int n = g.vertex_count();
    if (m == 0) return true;
    if (n < m) return false;
    std::vector<int> lab(n, 0);
    while (true) {
        // Canonical: labels 1..m first appear in increasing order.
        int top = 0;
        bool canon = true;
        for (int v = 0; v < n && canon; ++v) {
            if (lab[v] > top + 1) canon = false;
            if (lab[v] == top + 1) ++top;
        }
        if (canon && top == m) {
            Model x;
            x.branch_sets.assign(m, VertexSet(n));
            for (int v = 0; v < n; ++v)
                if (lab[v] > 0) x.branch_sets[lab[v] - 1].insert(v);
            if (is_model(g, x)) return true;
        }
        int i = 0;
        while (i < n && lab[i] == m) lab[i++] = 0;
        if (i == n) return false;
        ++lab[i];
    }
}

/// Smallest order of a separation on which o1 and o2 disagree, scanning
/// raw labellings; -1 when they agree everywhere below min(k1, k2). `seps`
/// must hold brute_separations(g, k) for some k >= min(k1, k2).
inline int brute_distinguishing_order(const std::vector<Separation>& seps, const Orientation& o1,
                                      const Orientation& o2)
{
    const int k = std::min(o1.k(), o2.k());
    int best = -1;
    for (const auto& sep : seps)
        if (sep.order() < k && o1.contains(sep) != o2.contains(sep) && (best < 0 || sep.order() < best))
            best = sep.order();
    return best;
}

inline int brute_distinguishing_order(const Graph& g, const Orientation& o1, const Orientation& o2)
{
    return brute_distinguishing_order(brute_separations(g, std::min(o1.k(), o2.k())), o1, o2);
}

/// Branch vertices plus paths from the definition of a K_r subdivision.
inline bool brute_is_subdivision(const Graph& g, int r, const SubdivisionEmbedding& s)
{
    if (static_cast<int>(s.branch_vertices.size()) != r) return false;
    std::set<Vertex> used(s.branch_vertices.begin(), s.branch_vertices.end());
    if (static_cast<int>(used.size()) != r) return false;
    int pairs = 0;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            Vertex u = s.branch_vertices[i], w = s.branch_vertices[j];
            if (u > w) std::swap(u, w);
            const auto it = s.paths.find({u, w});
            if (it == s.paths.end()) return false;
            const auto& p = it->second;
            if (p.size() < 2 || p.front() != u || p.back() != w) return false;
            for (std::size_t x = 0; x + 1 < p.size(); ++x)
                if (!g.adjacent(p[x], p[x + 1])) return false;
            for (std::size_t x = 1; x + 1 < p.size(); ++x)
                if (!used.insert(p[x]).second) return false;
            ++pairs;
        }
    return static_cast<int>(s.paths.size()) == pairs;
}

}  // namespace support
