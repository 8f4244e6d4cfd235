#include "topstruct/verifier.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

namespace topstruct {

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

// Works on a live-vertex mask over at most 64 vertices. Reductions that
// cannot destroy a K_m minor run first:
//   degree <= 1 vertices are deleted (m >= 3),
//   degree 2 vertices are suppressed (m >= 4),
//   simplicial vertices of degree < m - 1 are deleted.
// Then the graph is split on one edge into deletion and contraction.
class MinorOracle {
public:
    MinorOracle(int m, Budget& budget) : m_(m), budget_(budget) {}

    bool solve(std::vector<Mask> adj, Mask alive)
    {
        budget_.spend(1, "minor_oracle");
        reduce(adj, alive);
        const int n = std::popcount(alive);
        long long e = 0;
        for (int v = 0; v < 64; ++v)
            if (alive & bit(v)) e += std::popcount(adj[v]);
        e /= 2;
        if (m_ <= 1) return n >= m_;
        if (m_ == 2) return e >= 1;
        if (n < m_ || e < static_cast<long long>(m_) * (m_ - 1) / 2) return false;
        if (has_clique(adj, alive, m_)) return true;

        const std::string key = canonical_key(adj, alive);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        int v = -1;
        for (int x = 0; x < 64; ++x)
            if ((alive & bit(x)) && (v < 0 || std::popcount(adj[x]) < std::popcount(adj[v]))) v = x;
        int u = -1;
        for (int x = 0; x < 64; ++x)
            if ((adj[v] & bit(x)) && (u < 0 || std::popcount(adj[x]) < std::popcount(adj[u]))) u = x;

        bool found;
        {
            std::vector<Mask> c = adj;
            const Mask merged = (c[u] | c[v]) & ~(bit(u) | bit(v));
            for (int x = 0; x < 64; ++x)
                if (merged & bit(x)) c[x] = (c[x] & ~bit(u)) | bit(v);
            c[v] = merged;
            c[u] = 0;
            found = solve(std::move(c), alive & ~bit(u));
        }
        if (!found) {
            adj[u] &= ~bit(v);
            adj[v] &= ~bit(u);
            found = solve(std::move(adj), alive);
        }
        memo_.emplace(key, found);
        return found;
    }

private:
    void reduce(std::vector<Mask>& adj, Mask& alive) const
    {
        const auto remove = [&](int v) {
            for (int x = 0; x < 64; ++x)
                if (adj[v] & bit(x)) adj[x] &= ~bit(v);
            adj[v] = 0;
            alive &= ~bit(v);
        };
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < 64; ++v) {
                if (!(alive & bit(v))) continue;
                const int d = std::popcount(adj[v]);
                if (m_ >= 3 && d <= 1) {
                    remove(v);
                    changed = true;
                } else if (m_ >= 4 && d == 2) {
                    const int a = std::countr_zero(adj[v]);
                    const int b = 63 - std::countl_zero(adj[v]);
                    remove(v);
                    adj[a] |= bit(b);
                    adj[b] |= bit(a);
                    changed = true;
                } else if (d < m_ - 1 && is_clique(adj, adj[v])) {
                    remove(v);
                    changed = true;
                }
            }
        }
    }

    static bool is_clique(const std::vector<Mask>& adj, Mask s)
    {
        for (Mask rest = s; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            if ((s & ~bit(v) & ~adj[v]) != 0) return false;
        }
        return true;
    }

    static bool has_clique(const std::vector<Mask>& adj, Mask cand, int size)
    {
        if (size == 0) return true;
        if (std::popcount(cand) < size) return false;
        for (Mask rest = cand; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            // Only higher-numbered vertices extend the clique.
            const Mask higher = ~((bit(v) << 1) - 1);
            if (has_clique(adj, adj[v] & cand & higher, size - 1)) return true;
            if (std::popcount(rest) <= size) break;
        }
        return false;
    }

    // Adjacency rows under a degree-refined vertex order. Isomorphic graphs
    // may still get different keys; equal keys always mean isomorphic graphs.
    static std::string canonical_key(const std::vector<Mask>& adj, Mask alive)
    {
        std::vector<int> vs;
        for (int v = 0; v < 64; ++v)
            if (alive & bit(v)) vs.push_back(v);
        std::vector<std::vector<int>> sig(64);
        for (int v : vs) {
            sig[v].push_back(std::popcount(adj[v]));
            std::vector<int> nd;
            for (Mask rest = adj[v]; rest; rest &= rest - 1) nd.push_back(std::popcount(adj[std::countr_zero(rest)]));
            std::sort(nd.begin(), nd.end());
            sig[v].insert(sig[v].end(), nd.begin(), nd.end());
        }
        std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) { return sig[a] < sig[b]; });
        std::vector<int> pos(64, -1);
        for (std::size_t i = 0; i < vs.size(); ++i) pos[vs[i]] = static_cast<int>(i);
        std::string key;
        key.reserve(vs.size() * 8);
        for (int v : vs) {
            Mask row = 0;
            for (Mask rest = adj[v]; rest; rest &= rest - 1) row |= bit(pos[std::countr_zero(rest)]);
            key.append(reinterpret_cast<const char*>(&row), sizeof row);
        }
        return key;
    }

    int m_;
    Budget& budget_;
    std::unordered_map<std::string, bool> memo_;
};

}  // namespace

bool minor_oracle(const Graph& g, int m, Budget& budget)
{
    const int n = g.vertex_count();
    if (n > 64) throw PreconditionFailed("minor_oracle handles at most 64 vertices");
    std::vector<Mask> adj(64, 0);
    Mask alive = 0;
    for (Vertex v = 0; v < n; ++v) {
        alive |= bit(v);
        for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
    }
    MinorOracle oracle(m, budget);
    return oracle.solve(std::move(adj), alive);
}

bool minor_oracle(const Graph& g, int m)
{
    Budget budget;
    return minor_oracle(g, m, budget);
}

bool verify_subdivision(const Graph& g, int r, const SubdivisionEmbedding& s)
{
    const int n = g.vertex_count();
    if (static_cast<int>(s.branch_vertices.size()) != r) return false;
    VertexSet branch(n);
    for (Vertex v : s.branch_vertices) {
        if (v < 0 || v >= n || branch.contains(v)) return false;
        branch.insert(v);
    }
    if (static_cast<long long>(s.paths.size()) != static_cast<long long>(r) * (r - 1) / 2) return false;
    VertexSet interior_used(n);
    for (const auto& [key, path] : s.paths) {
        const auto [u, w] = key;
        if (u >= w || !branch.contains(u) || !branch.contains(w)) return false;
        if (path.size() < 2 || path.front() != u || path.back() != w) return false;
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            const Vertex a = path[i], b = path[i + 1];
            if (a < 0 || a >= n || b < 0 || b >= n || !g.adjacent(a, b)) return false;
        }
        for (std::size_t i = 1; i + 1 < path.size(); ++i) {
            const Vertex x = path[i];
            if (branch.contains(x) || interior_used.contains(x)) return false;
            interior_used.insert(x);
        }
    }
    return true;
}

Model subdivision_to_model(const SubdivisionEmbedding& s, int n)
{
    Model x;
    std::map<Vertex, int> index;
    for (Vertex b : s.branch_vertices) {
        index[b] = static_cast<int>(x.branch_sets.size());
        x.branch_sets.push_back(VertexSet(n, {b}));
    }
    for (const auto& [key, path] : s.paths) {
        const std::size_t interior = path.size() - 2;
        const std::size_t half = interior / 2;
        for (std::size_t i = 1; i + 1 < path.size(); ++i)
            x.branch_sets[index.at(i <= half ? key.first : key.second)].insert(path[i]);
    }
    return x;
}

const char* to_string(TorsoStatus s)
{
    switch (s) {
    case TorsoStatus::DegreeBound: return "degree-bound";
    case TorsoStatus::MinorFree: return "minor-free";
    case TorsoStatus::Violated: return "violated";
    case TorsoStatus::Unverified: return "unverified";
    }
    return "?";
}

VerifyStatus TheoremReport::status() const
{
    if (!valid || adhesion >= adhesion_bound || !problems.empty()) return VerifyStatus::Violation;
    bool unverified = false;
    for (const auto& t : torsos) {
        if (t.status == TorsoStatus::Violated) return VerifyStatus::Violation;
        if (t.status == TorsoStatus::Unverified) unverified = true;
    }
    return unverified ? VerifyStatus::Unverified : VerifyStatus::Pass;
}

TheoremReport verify_theorem(const Graph& g, const TreeDecomposition& td, const std::map<NodeId, Color>& colors,
                             const Parameters& params, Budget& budget)
{
    TheoremReport rep;
    rep.generalized = params.generalized;
    if (params.generalized) {
        rep.adhesion_bound = params.k;
        rep.degree_threshold = 2 * params.k * params.k;
        rep.degree_count_bound = params.k;
        rep.minor_size = params.m;
    } else {
        const int r2 = params.r * params.r;
        rep.adhesion_bound = r2;
        rep.degree_threshold = 2 * r2 * r2;
        rep.degree_count_bound = r2;
        rep.minor_size = 2 * r2;
    }
    rep.valid = validate_decomposition(g, td);
    if (!rep.valid) rep.problems.push_back("not a tree-decomposition of the graph");
    rep.adhesion = adhesion(td);
    if (rep.adhesion >= rep.adhesion_bound)
        rep.problems.push_back("adhesion " + std::to_string(rep.adhesion) + " not below " +
                               std::to_string(rep.adhesion_bound));
    for (const auto& [t, c] : colors)
        if (!td.has_node(t)) rep.problems.push_back("colour given for unknown node " + std::to_string(t));

    for (NodeId t : td.nodes()) {
        const Graph torso = torso_at_node(g, td, t).graph;
        TorsoCheck check;
        check.node = t;
        check.vertices = torso.vertex_count();
        for (Vertex v = 0; v < torso.vertex_count(); ++v)
            if (torso.degree(v) >= rep.degree_threshold) ++check.high_degree;
        const auto it = colors.find(t);
        if (it != colors.end()) check.color = to_string(it->second);
        const bool degree_ok = check.high_degree < rep.degree_count_bound;
        const bool may_use_degree = !params.generalized || check.color != "blue";
        const bool may_use_minor = !params.generalized || check.color != "red";
        if (may_use_degree && degree_ok) {
            check.status = TorsoStatus::DegreeBound;
        } else if (!may_use_minor) {
            check.status = TorsoStatus::Violated;
        } else {
            Budget local(budget.limit());
            try {
                check.status =
                    minor_oracle(torso, rep.minor_size, local) ? TorsoStatus::Violated : TorsoStatus::MinorFree;
            } catch (const BudgetExceeded&) {
                check.status = TorsoStatus::Unverified;
            }
        }
        rep.torsos.push_back(check);
    }
    return rep;
}

TheoremReport verify_theorem(const Graph& g, const DecompositionResult& result, const Parameters& params,
                             Budget& budget)
{
    return verify_theorem(g, result.contracted, result.colors, params, budget);
}

}  // namespace topstruct
