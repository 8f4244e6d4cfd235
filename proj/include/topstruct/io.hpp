#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "topstruct/pipeline.hpp"
#include "topstruct/verifier.hpp"

namespace topstruct {

/// `p tw <n> <m>` then one `<u> <v>` line per edge, 1-based; `c` lines are
/// comments. Throws ParseError with the offending line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

struct ColoredDecomposition {
    int vertex_count = 0;
    TreeDecomposition td;
    std::map<NodeId, Color> colors;
};

/// `s td <bags> <max bag> <n>`, `b <id> <v...>` lines, `<id> <id>` tree
/// edges, and `c color <id> red|blue` comments.
ColoredDecomposition read_td(std::istream& in);
/// Writes bags renumbered 1..N in ascending id order, colours following.
void write_td(std::ostream& out, const TreeDecomposition& td, int n, const std::map<NodeId, Color>& colors = {});
void write_dot(std::ostream& out, const TreeDecomposition& td, const std::map<NodeId, Color>& colors = {});

/// `x <i>: <v...>` per branch set.
void write_model(std::ostream& out, const Model& x);
/// `bv <v...>` then `path <u> <w>: <v...>` per pair.
void write_subdivision(std::ostream& out, const SubdivisionEmbedding& s);
/// One `block: <v...>` line per block.
void write_blocks(std::ostream& out, const std::vector<Block>& blocks);

/// Run report as indented JSON.
std::string report_json(const Graph& g, const Parameters& params, const StructureResult& result,
                        const TheoremReport* verification = nullptr);
std::string verification_json(const TheoremReport& rep);

}  // namespace topstruct
