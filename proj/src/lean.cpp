#include "topstruct/lean.hpp"

#include <map>
#include <memory>
#include <string>

namespace topstruct {

namespace {

VertexSet first_members(const VertexSet& s, int count)
{
    VertexSet out(s.universe());
    for (Vertex v = s.first(); v >= 0 && count > 0; v = s.next(v), --count) out.insert(v);
    return out;
}

// Nodes strictly outside the subtree holding x that lie on the tree path from
// that subtree to `target`.
std::set<NodeId> path_to_holder(const TreeDecomposition& td, Vertex x, NodeId target)
{
    NodeId holder = -1;
    for (const auto& [t, bag] : td.bags())
        if (bag.contains(x)) {
            holder = t;
            break;
        }
    std::set<NodeId> out;
    for (NodeId u : td.path(target, holder)) {
        if (td.bag(u).contains(x)) break;
        out.insert(u);
    }
    return out;
}

}  // namespace

TreeDecomposition prune_redundant_bags(TreeDecomposition td)
{
    bool changed = true;
    while (changed && td.node_count() > 1) {
        changed = false;
        for (auto [s, t] : td.edges()) {
            NodeId keep = -1, drop = -1;
            if (td.bag(s).is_subset_of(td.bag(t))) {
                keep = t;
                drop = s;
            } else if (td.bag(t).is_subset_of(td.bag(s))) {
                keep = s;
                drop = t;
            } else {
                continue;
            }
            const std::set<NodeId> around = td.neighbors(drop);
            td.remove_node(drop);
            for (NodeId u : around)
                if (u != keep) td.add_edge(keep, u);
            changed = true;
            break;
        }
    }
    return td;
}

TreeDecomposition improvement_step(const Graph& g, const TreeDecomposition& td, int k, const LeannessViolation& viol)
{
    if (!is_leanness_violation(g, td, k, viol))
        throw NotAViolation("nodes " + std::to_string(viol.s) + "," + std::to_string(viol.t) +
                            " p=" + std::to_string(viol.p));
    const int n = g.vertex_count();
    const VertexSet from = first_members(viol.witness.side_a & td.bag(viol.s), viol.p);
    const VertexSet to = first_members(viol.witness.side_b & td.bag(viol.t), viol.p);
    const VertexSet cut = min_vertex_separator(g, from, to);
    if (cut.size() > viol.witness.order())
        throw InternalInvariant("minimum separator larger than the witness separator");

    const VertexSet all = g.all();
    const VertexSet side_a = g.reach(from - cut, all - cut) | cut;
    const VertexSet side_b = (all - side_a) | cut;

    // Copy A reaches the separator vertices toward t, copy B toward s; the
    // two copies are joined by the edge t(A) - s(B), whose adhesion set is
    // exactly the separator.
    std::map<NodeId, VertexSet> extra_a, extra_b;
    for (NodeId u : td.nodes()) {
        extra_a.emplace(u, VertexSet(n));
        extra_b.emplace(u, VertexSet(n));
    }
    for (Vertex x : cut) {
        for (NodeId u : path_to_holder(td, x, viol.t)) extra_a.at(u).insert(x);
        for (NodeId u : path_to_holder(td, x, viol.s)) extra_b.at(u).insert(x);
    }

    TreeDecomposition out;
    std::map<NodeId, NodeId> copy_a, copy_b;
    NodeId next = td.next_id();
    for (NodeId u : td.nodes()) copy_a[u] = out.add_node(next++, (td.bag(u) & side_a) | extra_a.at(u));
    for (NodeId u : td.nodes()) copy_b[u] = out.add_node(next++, (td.bag(u) & side_b) | extra_b.at(u));
    for (auto [s, t] : td.edges()) {
        out.add_edge(copy_a[s], copy_a[t]);
        out.add_edge(copy_b[s], copy_b[t]);
    }
    out.add_edge(copy_a[viol.t], copy_b[viol.s]);
    out = prune_redundant_bags(std::move(out));

    if (adhesion(out) >= k) throw InternalInvariant("exchange raised the adhesion to " + std::to_string(adhesion(out)));
    if (!(fatness_of(out, n) < fatness_of(td, n))) throw InternalInvariant("exchange did not decrease fatness");
    return out;
}

TreeDecomposition build_k_lean(const Graph& g, int k, Budget& budget, const LeanOptions& options)
{
    if (k < 1) throw PreconditionFailed("k must be positive");
    const int n = g.vertex_count();
    const std::uint64_t limit =
        options.max_steps ? options.max_steps : 10 * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) + 1;
    TreeDecomposition td = TreeDecomposition::trivial(g);
    for (std::uint64_t step = 0;; ++step) {
        auto viol = check_k_lean(g, td, k, budget);
        if (!viol) return td.normalized();
        if (step >= limit) throw BudgetExceeded("build_k_lean exceeded " + std::to_string(limit) + " improvement steps");
        if (options.trace)
            *options.trace << "step " << step + 1 << " p=" << viol->p << " nodes=" << viol->s << "," << viol->t
                           << " separator=" << viol->witness.separator().to_string() << '\n';
        td = improvement_step(g, td, k, *viol);
    }
}

TreeDecomposition build_k_lean(const Graph& g, int k)
{
    Budget budget;
    return build_k_lean(g, k, budget);
}

namespace {

// Exhaustive search for a fatness-minimal decomposition. A state is a vertex
// set together with the graph on it (original edges plus cliques on the
// separators above it). Every decomposition of adhesion < k without
// redundant bags is either one bag or two decompositions of G[A]^X and
// G[B]^X glued along X for a proper separation (A, B) with separator X.
class AtomicSearch {
public:
    AtomicSearch(int n, int k, Budget& budget) : n_(n), k_(k), budget_(budget) {}

    struct Plan {
        std::vector<int> counts;  // counts[i]: bags of size n - i
        bool leaf = true;
        VertexSet part_a, part_b, sep;
        Graph graph_a, graph_b;
    };

    const Plan& solve(const Graph& h, const VertexSet& verts)
    {
        auto key = make_key(h, verts);
        if (auto it = memo_.find(key); it != memo_.end()) return *it->second;

        auto plan = std::make_unique<Plan>();
        plan->counts.assign(n_ + 1, 0);
        plan->counts[n_ - verts.size()] = 1;

        const std::vector<Vertex> pool = verts.to_vector();
        for (int size = 0; size < k_ && size < static_cast<int>(pool.size()); ++size) {
            for_each_subset(pool, size, n_, [&](const VertexSet& sep) {
                budget_.spend(1, "build_k_atomic_exact");
                const auto comps = h.components(verts - sep);
                const int c = static_cast<int>(comps.size());
                if (c < 2) return true;
                // Component 0 on side A; at least one component on side B.
                const std::uint64_t limit = (std::uint64_t{1} << (c - 1)) - 1;
                for (std::uint64_t mask = 0; mask < limit; ++mask) {
                    VertexSet a = sep | comps[0];
                    VertexSet b = sep;
                    for (int i = 1; i < c; ++i) ((mask >> (i - 1)) & 1u ? a : b) |= comps[i];
                    Graph ha = overlay_clique(restrict_to(h, a), sep);
                    Graph hb = overlay_clique(restrict_to(h, b), sep);
                    const auto& pa = solve(ha, a);
                    const auto& pb = solve(hb, b);
                    std::vector<int> combined(n_ + 1);
                    for (int i = 0; i <= n_; ++i) combined[i] = pa.counts[i] + pb.counts[i];
                    if (combined < plan->counts) {
                        plan->counts = std::move(combined);
                        plan->leaf = false;
                        plan->part_a = a;
                        plan->part_b = b;
                        plan->sep = sep;
                        plan->graph_a = std::move(ha);
                        plan->graph_b = std::move(hb);
                    }
                }
                return true;
            });
        }
        auto [it, inserted] = memo_.emplace(std::move(key), std::move(plan));
        return *it->second;
    }

    // Materializes the plan for (h, verts) into td; returns the ids created.
    std::vector<NodeId> build(const Graph& h, const VertexSet& verts, TreeDecomposition& td)
    {
        const Plan& plan = solve(h, verts);
        if (plan.leaf) return {td.add_node(verts)};
        auto left = build(plan.graph_a, plan.part_a, td);
        auto right = build(plan.graph_b, plan.part_b, td);
        const auto holder = [&](const std::vector<NodeId>& ids) {
            for (NodeId t : ids)
                if (plan.sep.is_subset_of(td.bag(t))) return t;
            throw InternalInvariant("no bag contains the separator clique");
        };
        td.add_edge(holder(left), holder(right));
        left.insert(left.end(), right.begin(), right.end());
        return left;
    }

private:
    static Graph restrict_to(const Graph& h, const VertexSet& keep)
    {
        Graph out(h.vertex_count());
        for (auto [u, v] : h.edges())
            if (keep.contains(u) && keep.contains(v)) out.add_edge(u, v);
        return out;
    }

    std::vector<std::uint64_t> make_key(const Graph& h, const VertexSet& verts) const
    {
        std::vector<std::uint64_t> key = verts.words();
        for (Vertex v : verts) {
            const auto& w = h.neighbors(v).words();
            key.insert(key.end(), w.begin(), w.end());
        }
        return key;
    }

    int n_;
    int k_;
    Budget& budget_;
    std::map<std::vector<std::uint64_t>, std::unique_ptr<Plan>> memo_;
};

}  // namespace

TreeDecomposition build_k_atomic_exact(const Graph& g, int k, Budget& budget)
{
    if (k < 1) throw PreconditionFailed("k must be positive");
    if (g.vertex_count() > 9) throw PreconditionFailed("exhaustive atomic search is limited to 9 vertices");
    AtomicSearch search(g.vertex_count(), k, budget);
    TreeDecomposition td;
    search.build(g, g.all(), td);
    return td.normalized();
}

TreeDecomposition build_k_atomic_exact(const Graph& g, int k)
{
    Budget budget;
    return build_k_atomic_exact(g, k, budget);
}

}  // namespace topstruct
