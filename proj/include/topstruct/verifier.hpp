#pragma once

#include <string>
#include <vector>

#include "topstruct/pipeline.hpp"

namespace topstruct {

/// K_m minor test by edge deletion and contraction, independent of the
/// branch-set search in obstructions. Limited to 64 vertices.
bool minor_oracle(const Graph& g, int m, Budget& budget);
bool minor_oracle(const Graph& g, int m);

/// True iff s is a subdivision of K_r in g: r distinct branch vertices, one
/// path per pair keyed (u, w) with u < w running from u to w along edges of
/// g, interiors avoiding branch vertices and each other.
bool verify_subdivision(const Graph& g, int r, const SubdivisionEmbedding& s);

/// Model of K_r read off a subdivision: each branch vertex together with
/// the half of every incident path nearest to it.
Model subdivision_to_model(const SubdivisionEmbedding& s, int n);

enum class TorsoStatus { DegreeBound, MinorFree, Violated, Unverified };
const char* to_string(TorsoStatus s);

struct TorsoCheck {
    NodeId node = 0;
    std::string color;           // "red", "blue" or "" when uncoloured
    int vertices = 0;
    int high_degree = 0;         // torso vertices at or above the threshold
    TorsoStatus status = TorsoStatus::Violated;
};

enum class VerifyStatus { Pass = 0, Violation = 1, Unverified = 2 };

struct TheoremReport {
    bool generalized = false;
    int adhesion_bound = 0;      // adhesion must stay below this
    int degree_threshold = 0;
    int degree_count_bound = 0;  // fewer than this many high-degree vertices
    int minor_size = 0;
    bool valid = false;
    int adhesion = 0;
    std::vector<TorsoCheck> torsos;
    std::vector<std::string> problems;

    VerifyStatus status() const;
};

/// Certifies a decomposition against the structure bounds.
///
/// Default mode (generalized = false): adhesion < r^2 and every torso has
/// fewer than r^2 vertices of degree >= 2r^4 or no K_{2r^2} minor.
/// Generalized mode: adhesion < k, red torsos have fewer than k vertices of
/// degree >= 2k^2, blue torsos have no K_m minor; uncoloured torsos may
/// satisfy either. Degrees are measured in the torso. A minor check that
/// runs out of budget marks its torso Unverified.
TheoremReport verify_theorem(const Graph& g, const TreeDecomposition& td, const std::map<NodeId, Color>& colors,
                             const Parameters& params, Budget& budget);
TheoremReport verify_theorem(const Graph& g, const DecompositionResult& result, const Parameters& params,
                             Budget& budget);

}  // namespace topstruct
