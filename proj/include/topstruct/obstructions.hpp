#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "topstruct/graph.hpp"
#include "topstruct/orientation.hpp"

namespace topstruct {

/// A k-block: an inclusion-maximal set of at least k vertices that no
/// separation of order < k splits.
struct Block {
    VertexSet vertices;
    int k = 0;
    friend bool operator==(const Block&, const Block&) = default;
};

/// A model of K_m: disjoint connected branch sets, pairwise joined by an edge.
struct Model {
    std::vector<VertexSet> branch_sets;
    int target() const { return static_cast<int>(branch_sets.size()); }
};

/// A subdivision of K_r: branch vertices and one path per pair of them.
/// Paths are keyed by (u, w) with u < w and run from u to w.
struct SubdivisionEmbedding {
    std::vector<Vertex> branch_vertices;
    std::map<std::pair<Vertex, Vertex>, std::vector<Vertex>> paths;
};

/// All k-blocks, ordered by their sorted member lists. Computed as the
/// maximal cliques (size >= k) of the relation "adjacent, or at least k
/// internally disjoint paths".
std::vector<Block> find_k_blocks(const Graph& g, int k, Budget& budget);
std::vector<Block> find_k_blocks(const Graph& g, int k);

/// Structural check of the model invariants in g.
bool is_model(const Graph& g, const Model& x);

/// Some model of K_m, or nothing. Exact.
std::optional<Model> find_clique_model(const Graph& g, int m, Budget& budget);
std::optional<Model> find_clique_model(const Graph& g, int m);

/// Some model of K_m whose every branch set meets `anchor`, or nothing.
std::optional<Model> find_anchored_model(const Graph& g, int m, const VertexSet& anchor, Budget& budget);

/// Some model of K_{|z|} whose i-th branch set contains z[i] and no other
/// vertex of z, or nothing.
std::optional<Model> find_z_based_model(const Graph& g, const std::vector<Vertex>& z, Budget& budget);
std::optional<Model> find_z_based_model(const Graph& g, const VertexSet& z, Budget& budget);
std::optional<Model> find_z_based_model(const Graph& g, const VertexSet& z);

/// Some subdivision of K_r, or nothing. Exact.
std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, int r, Budget& budget);
std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, int r);

/// O_B = {(U, W) : B ⊆ W} on S_k.
Orientation block_orientation(const Graph& g, int k, const Block& b);

/// O_X = {(U, W) : some branch set lies in W \ U} on S_k. Requires at least
/// k branch sets.
Orientation model_orientation(const Graph& g, int k, const Model& x);

/// {(U, W) : z ⊆ W} on S_k; decisive when z is a clique with |z| >= k.
Orientation set_orientation(int k, const VertexSet& z);

/// True iff x (a model of K_q
/// in G^Z, q >= 2|z| - 1) and z orient S_{|z|}(G^Z) identically. Throws
/// PreconditionFailed when q is too small or x is not a model of G^Z.
bool check_rs_lemma(const Graph& g, const VertexSet& z, const Model& x, Budget& budget);
bool check_rs_lemma(const Graph& g, const VertexSet& z, const Model& x);

/// Builds a subdivision of K_r with branch vertices exactly b0 from a k-block
/// and a K_m model that orient S_k identically (r = |b0|, r(r-1) <= k,
/// m >= 2r(r-1) - 1). Each b in b0 is replaced by r-1 twins, a model based
/// on the twins is found, and each twin pair's joining path is mapped back.
/// Throws OrientationMismatch when the orientations differ.
SubdivisionEmbedding extract_subdivision(const Graph& g, int k, int m, const Block& b, const Model& x,
                                         const std::vector<Vertex>& b0, Budget& budget);
SubdivisionEmbedding extract_subdivision(const Graph& g, int k, int m, const Block& b, const Model& x,
                                         const std::vector<Vertex>& b0);

}  // namespace topstruct
