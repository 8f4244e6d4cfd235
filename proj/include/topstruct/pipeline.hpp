#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "topstruct/decomposition.hpp"
#include "topstruct/obstructions.hpp"

namespace topstruct {

/// Clique size r with block order k and model size m.
///
/// from_r derives k = r(r-1), m = 2k. from_km takes k and m as
/// given (m >= 2k-1) and sets r to the largest value with r(r-1) <= k, which
/// is the subdivision size the extraction step can still guarantee.
struct Parameters {
    int r = 0;
    int k = 0;
    int m = 0;
    bool generalized = false;

    static Parameters from_r(int r);
    static Parameters from_km(int k, int m);
};

enum class Color { Red, Blue };
const char* to_string(Color c);

struct Coloring {
    std::map<NodeId, Color> color;
    std::set<TreeEdge> f_edges;
    /// Nodes whose component had no home node and took the blue default.
    std::set<NodeId> defaulted;
};

/// One (block, model) pair and how the tree separates it.
struct PairRecord {
    int block = 0;
    int model = 0;
    int order = 0;
    std::vector<TreeEdge> efficient_edges;
};

struct DecompositionResult {
    TreeDecomposition lean;              // before contraction
    Coloring coloring;                   // on `lean`
    TreeDecomposition contracted;
    std::map<NodeId, Color> colors;      // on `contracted`
    std::vector<Block> blocks;
    std::vector<NodeId> block_homes;
    std::vector<Model> models;
    std::vector<NodeId> model_homes;
    std::vector<PairRecord> pairs;
    bool atomic_fallback = false;
    std::vector<std::string> notes;
};

struct SubdivisionResult {
    SubdivisionEmbedding embedding;
    Block block;
    Model model;
    std::vector<Vertex> prescribed;
};

using StructureResult = std::variant<SubdivisionResult, DecompositionResult>;

/// Minimum order of a separation in exactly one of o1, o2, by enumeration.
/// Throws Indistinguishable when they agree on every separation.
int distinguishing_order(const Graph& g, const Orientation& o1, const Orientation& o2, Budget& budget);
int distinguishing_order(const Graph& g, const Orientation& o1, const Orientation& o2);

/// Inclusion-minimal F covering every (block, model) pair with an edge that
/// distinguishes them at their distinguishing order. Candidates are dropped
/// greedily in descending (order, s, t). Throws CoverageImpossible when a
/// pair has no such edge. Tree edges of order >= k are ignored. When `exact` is set the distinguishing order comes
/// from enumeration, otherwise from the cheapest distinguishing tree edge.
std::set<TreeEdge> select_f(const Graph& g, const TreeDecomposition& td, const std::vector<Orientation>& blocks,
                            const std::vector<Orientation>& models, Budget& budget, bool exact = true,
                            std::vector<PairRecord>* records = nullptr);

/// Colours every component of T - F: blue for a block home node, red for a
/// model home node. A component with neither is blue when one of the lists
/// is empty and an UncoloredComponent error otherwise.
Coloring color_nodes(const TreeDecomposition& td, const std::set<TreeEdge>& f,
                     const std::vector<NodeId>& block_homes, const std::vector<NodeId>& model_homes);

/// Contracts every maximal blue subtree into one node. Returns the new
/// decomposition with colours carried over.
std::pair<TreeDecomposition, std::map<NodeId, Color>> contract_blue(const TreeDecomposition& td,
                                                                    const Coloring& c);

/// Whether G[W_t] has a (V_s ∩ V_t)-based model for the tree edge s -> t.
bool check_join_lemma(const Graph& g, const TreeDecomposition& td, NodeId s, NodeId t, Budget& budget);

struct RunOptions {
    /// Graphs up to this size get exhaustive same-orientation and
    /// distinguishing-order checks; larger ones rely on home nodes.
    int oracle_limit = 12;
    /// Largest graph for which the exact k-atomic builder may replace the
    /// lean one when a red torso fails the degree bound.
    int atomic_limit = 9;
    /// Receives one line per leanness improvement step when set.
    std::ostream* trace = nullptr;
};

StructureResult run_structure(const Graph& g, const Parameters& params, Budget& budget, const RunOptions& options = {});
StructureResult run_structure(const Graph& g, const Parameters& params);

}  // namespace topstruct
