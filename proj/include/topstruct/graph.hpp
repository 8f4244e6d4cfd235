#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "topstruct/errors.hpp"
#include "topstruct/vertex_set.hpp"

namespace topstruct {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on the dense vertex range 0..n-1.
///
/// Loops and parallel edges are rejected at construction. External files use
/// 1-based labels; conversion happens in io.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    /// Throws PreconditionFailed on loops or out-of-range endpoints; duplicate
    /// edges are rejected the same way.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }
    const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return adj_[v].size(); }

    /// Adds uv unless present. Returns true when the edge is new.
    bool add_edge(Vertex u, Vertex v);

    VertexSet all() const { return VertexSet::full(n_); }
    VertexSet empty_set() const { return VertexSet(n_); }

    /// Edges with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Union of neighborhoods of s, minus s.
    VertexSet neighborhood(const VertexSet& s) const;

    /// Vertices reachable from `from` inside `allowed` (from is intersected
    /// with allowed first).
    VertexSet reach(const VertexSet& from, const VertexSet& allowed) const;

    /// Connected components of G[within], ordered by smallest vertex.
    std::vector<VertexSet> components(const VertexSet& within) const;

    bool is_connected(const VertexSet& within) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

/// G[s] relabelled onto 0..|s|-1 in increasing order of s.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;   // local -> parent
    std::vector<Vertex> to_local;    // parent -> local, -1 when absent
    VertexSet lift(const VertexSet& local, int parent_universe) const;
    VertexSet project(const VertexSet& parent) const;
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

/// A pair (A, B) of vertex sets. Validity is checked by is_separation.
struct Separation {
    VertexSet side_a;
    VertexSet side_b;

    VertexSet separator() const { return side_a & side_b; }
    int order() const { return side_a.intersection_size(side_b); }
    Separation inverse() const { return {side_b, side_a}; }

    /// Orientation of the unordered pair whose smaller exclusive vertex sits
    /// in side_a. An empty exclusive part counts as larger than any vertex.
    Separation canonical() const;

    friend bool operator==(const Separation& x, const Separation& y)
    {
        return x.side_a == y.side_a && x.side_b == y.side_b;
    }
    friend bool operator<(const Separation& x, const Separation& y)
    {
        if (!(x.side_a == y.side_a)) return x.side_a < y.side_a;
        return x.side_b < y.side_b;
    }
};

bool is_separation(const Graph& g, const VertexSet& a, const VertexSet& b);
inline bool is_separation(const Graph& g, const Separation& s) { return is_separation(g, s.side_a, s.side_b); }

inline int separation_order(const Separation& s) { return s.order(); }

/// Tightness: every two distinct separator vertices are linked inside G[A]
/// and inside G[B] by paths with no interior vertex in the separator. The
/// strict reading additionally requires every separator vertex to have a
/// neighbour in A\B and in B\A.
bool is_tight(const Graph& g, const Separation& s, bool strict = false);

/// Minimum number of vertices separating nonadjacent u and v (Menger).
/// Throws AdjacentPair if uv is an edge or u == v.
int min_vertex_cut(const Graph& g, Vertex u, Vertex v);

/// Minimum vertex set meeting every from-to path; terminals may be chosen.
/// Returns the set; its size equals the maximum number of disjoint paths.
VertexSet min_vertex_separator(const Graph& g, const VertexSet& from, const VertexSet& to);

/// G^Z: g with z made into a clique.
Graph overlay_clique(const Graph& g, const VertexSet& z);

/// Every separation of order < max_order, one per unordered pair, in
/// canonical orientation. Separators are visited by size then
/// lexicographically; within a separator the component 2-colourings are
/// visited in binary counting order.
std::vector<Separation> enumerate_separations(const Graph& g, int max_order, Budget& budget);
/// Streaming form of enumerate_separations; stops when f returns false.
/// Returns false if stopped early.
bool for_each_separation(const Graph& g, int max_order, Budget& budget,
                         const std::function<bool(const Separation&)>& f);
std::vector<Separation> enumerate_separations(const Graph& g, int max_order);

/// Calls f(subset) for every subset of `pool` with exactly `size` members in
/// lexicographic order. Stops early when f returns false.
template <typename F>
bool for_each_subset(const std::vector<Vertex>& pool, int size, int universe, F&& f)
{
    const int n = static_cast<int>(pool.size());
    if (size > n || size < 0) return true;
    std::vector<int> idx(size);
    for (int i = 0; i < size; ++i) idx[i] = i;
    while (true) {
        VertexSet s(universe);
        for (int i : idx) s.insert(pool[i]);
        if (!f(s)) return false;
        int i = size - 1;
        while (i >= 0 && idx[i] == n - size + i) --i;
        if (i < 0) return true;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace topstruct
