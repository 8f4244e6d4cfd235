#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "topstruct/graph.hpp"
#include "topstruct/orientation.hpp"

namespace topstruct {

using NodeId = int;
using TreeEdge = std::pair<NodeId, NodeId>;

/// A tree T with a bag V_t for every node t.
///
/// Node ids are stable: contraction allocates a fresh id for the merged node
/// and records the pair it came from in `provenance()`. Iteration order over
/// nodes and edges is ascending by id, which keeps every derived report
/// reproducible.
class TreeDecomposition {
public:
    TreeDecomposition() = default;
    /// The trivial decomposition: one node (id 1) holding all of g.
    static TreeDecomposition trivial(const Graph& g);

    NodeId add_node(VertexSet bag);
    NodeId add_node(NodeId id, VertexSet bag);
    void add_edge(NodeId s, NodeId t);
    void remove_edge(NodeId s, NodeId t);
    void remove_node(NodeId t);

    int node_count() const { return static_cast<int>(bags_.size()); }
    int edge_count() const;
    bool has_node(NodeId t) const { return bags_.count(t) != 0; }
    bool has_edge(NodeId s, NodeId t) const;

    const VertexSet& bag(NodeId t) const { return bags_.at(t); }
    VertexSet& bag(NodeId t) { return bags_.at(t); }
    const std::map<NodeId, VertexSet>& bags() const { return bags_; }
    const std::set<NodeId>& neighbors(NodeId t) const { return adj_.at(t); }
    std::vector<NodeId> nodes() const;
    /// Edges (s, t) with s < t, ascending.
    std::vector<TreeEdge> edges() const;

    NodeId next_id() const { return next_id_; }
    const std::map<NodeId, std::pair<NodeId, NodeId>>& provenance() const { return provenance_; }
    void record_provenance(NodeId merged, NodeId s, NodeId t) { provenance_[merged] = {s, t}; }

    /// Nodes on the unique s-t path, inclusive, in order from s.
    std::vector<NodeId> path(NodeId s, NodeId t) const;

    /// Nodes on t's side after removing edge st (t included).
    std::set<NodeId> side(NodeId s, NodeId t) const;

    /// Relabels nodes to 1..N in ascending id order; drops provenance.
    TreeDecomposition normalized() const;

    /// Same bags on the same tree shape, ignoring ids.
    bool structurally_equal(const TreeDecomposition& other) const;

private:
    std::map<NodeId, VertexSet> bags_;
    std::map<NodeId, std::set<NodeId>> adj_;
    std::map<NodeId, std::pair<NodeId, NodeId>> provenance_;
    NodeId next_id_ = 1;
};

/// Bag-size histogram: counts[i] = number of bags with n - i vertices.
struct Fatness {
    std::vector<int> counts;
    friend bool operator==(const Fatness&, const Fatness&) = default;
    friend auto operator<=>(const Fatness& a, const Fatness& b) { return a.counts <=> b.counts; }
};

/// Witness that a decomposition is not k-lean.
struct LeannessViolation {
    NodeId s;
    NodeId t;
    int p;
    Separation witness;
};

bool validate_decomposition(const Graph& g, const TreeDecomposition& td);

/// (U_s, W_t) for the tree edge st. Throws NotAnEdge.
Separation induced_separation(const TreeDecomposition& td, NodeId s, NodeId t);

/// Order of the separation induced by st; equals |V_s ∩ V_t|.
int edge_order(const TreeDecomposition& td, NodeId s, NodeId t);

int adhesion(const TreeDecomposition& td);

/// G[∪ V_u for u in nodes] plus a clique on V_s ∩ V_t for every tree edge
/// leaving the node set, relabelled onto 0..|U|-1. Throws NotASubtree
/// unless nodes is non-empty and connected in T.
InducedSubgraph torso_at_subtree(const Graph& g, const TreeDecomposition& td, const std::set<NodeId>& nodes);
InducedSubgraph torso_at_node(const Graph& g, const TreeDecomposition& td, NodeId t);

/// Union of the bags of nodes.
VertexSet subtree_vertices(const TreeDecomposition& td, const std::set<NodeId>& nodes);

/// Merges s and t into a fresh node carrying V_s ∪ V_t. Throws NotAnEdge.
TreeDecomposition contract_edge(const TreeDecomposition& td, NodeId s, NodeId t);

Fatness fatness_of(const TreeDecomposition& td, int n);

/// Smallest violation of k-leanness (smallest p, then lexicographic (s,t),
/// then the first separator in size-then-lexicographic order), or nothing.
/// Pairs are taken with s <= t; the witness has p vertices of V_s in side_a
/// and p vertices of V_t in side_b. Throws PreconditionFailed if the
/// adhesion is not below k.
std::optional<LeannessViolation> check_k_lean(const Graph& g, const TreeDecomposition& td, int k,
                                              Budget& budget);
std::optional<LeannessViolation> check_k_lean(const Graph& g, const TreeDecomposition& td, int k);

/// True when viol satisfies every clause of the leanness-violation
/// definition with respect to td and k.
bool is_leanness_violation(const Graph& g, const TreeDecomposition& td, int k, const LeannessViolation& viol);

/// Sink of the edge orientation induced by o: st points to t when
/// (U_s, W_t) is in o. Throws InconsistentOrientation unless exactly one
/// sink exists.
NodeId home_node(const TreeDecomposition& td, const Orientation& o);

/// Minimum order of a tree edge on the s-t path; `fallback` when s == t.
int min_path_order(const TreeDecomposition& td, NodeId s, NodeId t, int fallback);

}  // namespace topstruct
