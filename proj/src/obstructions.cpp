#include "topstruct/obstructions.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

namespace topstruct {

namespace {

// Pivoting Bron-Kerbosch over an explicit relation.
void bron_kerbosch(const std::vector<VertexSet>& rel, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out, Budget& budget)
{
    budget.spend(1, "find_k_blocks");
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    Vertex pivot = -1;
    int best = -1;
    for (Vertex u : p | x) {
        const int c = p.intersection_size(rel[u]);
        if (c > best) {
            best = c;
            pivot = u;
        }
    }
    for (Vertex v : p - rel[pivot]) {
        VertexSet r2 = r;
        r2.insert(v);
        bron_kerbosch(rel, r2, p & rel[v], x & rel[v], out, budget);
        p.erase(v);
        x.insert(v);
    }
}

std::vector<Vertex> by_descending_degree(const Graph& g, const VertexSet& s)
{
    std::vector<Vertex> out = s.to_vector();
    std::stable_sort(out.begin(), out.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    return out;
}

// Grows branch sets from fixed roots until every pair touches. Each step
// picks the untouched pair with the fewest growth options and extends one
// of its two sets by an adjacent free vertex; in any completion one of the
// two sets must contain such a vertex, so the branching is exhaustive.
// Failed label states are memoized.
class ModelSearch {
public:
    ModelSearch(const Graph& g, int m, Budget& budget, const char* where)
        : g_(g), m_(m), budget_(budget), where_(where), label_(g.vertex_count(), -1), free_(g.all())
    {
        sets_.assign(m, g.empty_set());
        forbidden_.assign(m, g.empty_set());
    }

    void block(Vertex v)
    {
        label_[v] = -2;
        free_.erase(v);
    }
    void forbid(int i, const VertexSet& s) { forbidden_[i] |= s; }
    void assign(int i, Vertex v)
    {
        label_[v] = i;
        sets_[i].insert(v);
        free_.erase(v);
    }
    void unassign(int i, Vertex v)
    {
        label_[v] = -1;
        sets_[i].erase(v);
        free_.insert(v);
    }

    bool solve()
    {
        budget_.spend(1, where_);
        std::string key(label_.begin(), label_.end());
        if (failed_.count(key)) return false;

        int best_i = -1, best_j = -1, best_count = 0;
        VertexSet best_ci, best_cj;
        for (int i = 0; i < m_; ++i)
            for (int j = i + 1; j < m_; ++j) {
                if (g_.neighborhood(sets_[i]).intersects(sets_[j])) continue;
                const VertexSet allowed = free_ | sets_[i] | sets_[j];
                if (!g_.reach(sets_[i], allowed).intersects(sets_[j])) {
                    failed_.insert(std::move(key));
                    return false;
                }
                VertexSet ci = (g_.neighborhood(sets_[i]) & free_) - forbidden_[i];
                VertexSet cj = (g_.neighborhood(sets_[j]) & free_) - forbidden_[j];
                const int count = ci.size() + cj.size();
                if (count == 0) {
                    failed_.insert(std::move(key));
                    return false;
                }
                if (best_i < 0 || count < best_count) {
                    best_i = i;
                    best_j = j;
                    best_count = count;
                    best_ci = std::move(ci);
                    best_cj = std::move(cj);
                }
            }
        if (best_i < 0) return true;

        for (auto [side, cand] : {std::pair{best_i, &best_ci}, std::pair{best_j, &best_cj}})
            for (Vertex v : by_descending_degree(g_, *cand)) {
                assign(side, v);
                if (solve()) return true;
                unassign(side, v);
            }
        failed_.insert(std::move(key));
        return false;
    }

    Model model() const { return Model{sets_}; }

private:
    const Graph& g_;
    int m_;
    Budget& budget_;
    const char* where_;
    std::vector<signed char> label_;
    std::vector<VertexSet> sets_;
    std::vector<VertexSet> forbidden_;
    VertexSet free_;
    std::unordered_set<std::string> failed_;
};

// Branch sets are numbered by their smallest anchor vertex (the root), so
// roots increase and set i never takes an anchor vertex below its root.
std::optional<Model> anchored_search(const Graph& g, int m, const VertexSet& anchor, Budget& budget,
                                     const char* where)
{
    if (m <= 0) return Model{};
    if (anchor.size() < m || g.vertex_count() < m) return std::nullopt;
    if (g.edge_count() < static_cast<long long>(m) * (m - 1) / 2) return std::nullopt;
    std::optional<Model> found;
    const std::vector<Vertex> pool = anchor.to_vector();
    for_each_subset(pool, m, g.vertex_count(), [&](const VertexSet& roots_set) {
        budget.spend(1, where);
        const std::vector<Vertex> roots = roots_set.to_vector();
        ModelSearch search(g, m, budget, where);
        for (int i = 0; i < m; ++i) {
            search.assign(i, roots[i]);
            VertexSet below(g.vertex_count());
            for (Vertex a : anchor) {
                if (a >= roots[i]) break;
                below.insert(a);
            }
            search.forbid(i, below);
        }
        if (!search.solve()) return true;
        found = search.model();
        return false;
    });
    return found;
}

// Internally disjoint path systems for a fixed tuple of branch vertices.
class PathSearch {
public:
    PathSearch(const Graph& g, const std::vector<Vertex>& bv, Budget& budget)
        : g_(g), bv_(bv), budget_(budget), used_(g.vertex_count())
    {
        for (Vertex v : bv) used_.insert(v);
        for (std::size_t a = 0; a < bv.size(); ++a)
            for (std::size_t b = a + 1; b < bv.size(); ++b) pairs_.emplace_back(bv[a], bv[b]);
        paths_.resize(pairs_.size());
    }

    bool solve(std::size_t idx)
    {
        budget_.spend(1, "find_subdivision");
        if (idx == pairs_.size()) return true;
        std::string key(reinterpret_cast<const char*>(used_.words().data()), used_.words().size() * 8);
        key += std::to_string(idx);
        if (failed_.count(key)) return false;
        if (!feasible(idx)) {
            failed_.insert(std::move(key));
            return false;
        }
        const auto [u, w] = pairs_[idx];
        std::vector<Vertex> path{u};
        if (extend(idx, path, w)) return true;
        failed_.insert(std::move(key));
        return false;
    }

    SubdivisionEmbedding embedding() const
    {
        SubdivisionEmbedding s;
        s.branch_vertices = bv_;
        for (std::size_t i = 0; i < pairs_.size(); ++i) s.paths[pairs_[i]] = paths_[i];
        return s;
    }

private:
    bool extend(std::size_t idx, std::vector<Vertex>& path, Vertex target)
    {
        budget_.spend(1, "find_subdivision");
        const Vertex tip = path.back();
        if (g_.adjacent(tip, target)) {
            path.push_back(target);
            paths_[idx] = path;
            if (solve(idx + 1)) return true;
            path.pop_back();
        }
        const VertexSet free = g_.all() - used_;
        VertexSet start(g_.vertex_count());
        for (Vertex v : g_.neighbors(tip) & free) start.insert(v);
        if (!g_.reach(start, free).intersects(g_.neighbors(target))) return false;
        for (Vertex v : g_.neighbors(tip) & free) {
            used_.insert(v);
            path.push_back(v);
            if (extend(idx, path, target)) return true;
            path.pop_back();
            used_.erase(v);
        }
        return false;
    }

    bool feasible(std::size_t idx) const
    {
        const VertexSet free = g_.all() - used_;
        std::vector<int> need(g_.vertex_count(), 0);
        std::vector<int> direct(g_.vertex_count(), 0);
        for (std::size_t i = idx; i < pairs_.size(); ++i) {
            const auto [u, w] = pairs_[i];
            ++need[u];
            ++need[w];
            if (g_.adjacent(u, w)) {
                ++direct[u];
                ++direct[w];
                continue;
            }
            VertexSet start = g_.neighbors(u) & free;
            if (!g_.reach(start, free).intersects(g_.neighbors(w))) return false;
        }
        for (Vertex b : bv_)
            if (need[b] > direct[b] + g_.neighbors(b).intersection_size(free)) return false;
        return true;
    }

    const Graph& g_;
    std::vector<Vertex> bv_;
    Budget& budget_;
    VertexSet used_;
    std::vector<std::pair<Vertex, Vertex>> pairs_;
    std::vector<std::vector<Vertex>> paths_;
    std::unordered_set<std::string> failed_;
};

bool is_block_of(const Graph& g, int k, const VertexSet& b)
{
    if (b.size() < k) return false;
    for (Vertex u : b)
        for (Vertex v = b.next(u); v >= 0; v = b.next(v))
            if (!g.adjacent(u, v) && min_vertex_cut(g, u, v) < k) return false;
    return true;
}

}  // namespace

std::vector<Block> find_k_blocks(const Graph& g, int k, Budget& budget)
{
    if (k < 1) throw PreconditionFailed("k must be at least 1");
    const int n = g.vertex_count();
    std::vector<VertexSet> rel(n, VertexSet(n));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            budget.spend(1, "find_k_blocks");
            if (g.adjacent(u, v) || min_vertex_cut(g, u, v) >= k) {
                rel[u].insert(v);
                rel[v].insert(u);
            }
        }
    std::vector<VertexSet> cliques;
    bron_kerbosch(rel, VertexSet(n), g.all(), VertexSet(n), cliques, budget);
    std::vector<Block> out;
    for (auto& c : cliques)
        if (c.size() >= k) out.push_back(Block{std::move(c), k});
    std::sort(out.begin(), out.end(), [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    return out;
}

std::vector<Block> find_k_blocks(const Graph& g, int k)
{
    Budget budget;
    return find_k_blocks(g, k, budget);
}

bool is_model(const Graph& g, const Model& x)
{
    VertexSet seen = g.empty_set();
    for (const auto& s : x.branch_sets) {
        if (s.universe() != g.vertex_count() || s.empty() || s.intersects(seen) || !g.is_connected(s))
            return false;
        seen |= s;
    }
    for (std::size_t i = 0; i < x.branch_sets.size(); ++i)
        for (std::size_t j = i + 1; j < x.branch_sets.size(); ++j)
            if (!g.neighborhood(x.branch_sets[i]).intersects(x.branch_sets[j])) return false;
    return true;
}

std::optional<Model> find_clique_model(const Graph& g, int m, Budget& budget)
{
    return anchored_search(g, m, g.all(), budget, "find_clique_model");
}

std::optional<Model> find_clique_model(const Graph& g, int m)
{
    Budget budget;
    return find_clique_model(g, m, budget);
}

std::optional<Model> find_anchored_model(const Graph& g, int m, const VertexSet& anchor, Budget& budget)
{
    return anchored_search(g, m, anchor, budget, "find_anchored_model");
}

std::optional<Model> find_z_based_model(const Graph& g, const std::vector<Vertex>& z, Budget& budget)
{
    const int q = static_cast<int>(z.size());
    if (VertexSet::of(g.vertex_count(), z).size() != q) throw PreconditionFailed("z has repeated vertices");
    ModelSearch search(g, q, budget, "find_z_based_model");
    for (int i = 0; i < q; ++i) search.assign(i, z[i]);
    if (!search.solve()) return std::nullopt;
    return search.model();
}

std::optional<Model> find_z_based_model(const Graph& g, const VertexSet& z, Budget& budget)
{
    return find_z_based_model(g, z.to_vector(), budget);
}

std::optional<Model> find_z_based_model(const Graph& g, const VertexSet& z)
{
    Budget budget;
    return find_z_based_model(g, z, budget);
}

std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, int r, Budget& budget)
{
    if (r <= 0) return SubdivisionEmbedding{};
    VertexSet eligible = g.empty_set();
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= r - 1) eligible.insert(v);
    std::optional<SubdivisionEmbedding> found;
    for_each_subset(eligible.to_vector(), r, g.vertex_count(), [&](const VertexSet& bv) {
        budget.spend(1, "find_subdivision");
        PathSearch search(g, bv.to_vector(), budget);
        if (!search.solve(0)) return true;
        found = search.embedding();
        return false;
    });
    return found;
}

std::optional<SubdivisionEmbedding> find_subdivision(const Graph& g, int r)
{
    Budget budget;
    return find_subdivision(g, r, budget);
}

Orientation block_orientation(const Graph&, int k, const Block& b)
{
    const VertexSet v = b.vertices;
    return Orientation(k, "block " + v.to_string(), [v](const Separation& s) { return v.is_subset_of(s.side_b); });
}

Orientation model_orientation(const Graph&, int k, const Model& x)
{
    if (x.target() < k)
        throw PreconditionFailed("model of K_" + std::to_string(x.target()) + " cannot orient S_" + std::to_string(k));
    std::string label = "model";
    for (const auto& s : x.branch_sets) label += " " + s.to_string();
    return Orientation(k, label, [sets = x.branch_sets](const Separation& s) {
        const VertexSet w_only = s.side_b - s.side_a;
        for (const auto& y : sets)
            if (y.is_subset_of(w_only)) return true;
        return false;
    });
}

Orientation set_orientation(int k, const VertexSet& z)
{
    return Orientation(k, "set " + z.to_string(), [z](const Separation& s) { return z.is_subset_of(s.side_b); });
}

bool check_rs_lemma(const Graph& g, const VertexSet& z, const Model& x, Budget& budget)
{
    const int p = z.size();
    if (p == 0) return true;
    if (x.target() < 2 * p - 1)
        throw PreconditionFailed("model of K_" + std::to_string(x.target()) + " is below 2|z|-1 = " +
                                 std::to_string(2 * p - 1));
    const Graph gz = overlay_clique(g, z);
    if (!is_model(gz, x)) throw PreconditionFailed("x is not a model in G^Z");
    return !min_distinguishing_order(gz, set_orientation(p, z), model_orientation(gz, p, x), budget).has_value();
}

bool check_rs_lemma(const Graph& g, const VertexSet& z, const Model& x)
{
    Budget budget;
    return check_rs_lemma(g, z, x, budget);
}

SubdivisionEmbedding extract_subdivision(const Graph& g, int k, int m, const Block& b, const Model& x,
                                         const std::vector<Vertex>& b0, Budget& budget)
{
    const int n = g.vertex_count();
    const int r = static_cast<int>(b0.size());
    const VertexSet b0_set = VertexSet::of(n, b0);
    if (b0_set.size() != r) throw PreconditionFailed("b0 has repeated vertices");
    if (!b0_set.is_subset_of(b.vertices)) throw PreconditionFailed("b0 is not inside the block");
    if (r * (r - 1) > k) throw PreconditionFailed("r(r-1) exceeds k");
    if (m < 2 * r * (r - 1) - 1) throw PreconditionFailed("m below 2r(r-1)-1");
    if (!is_block_of(g, k, b.vertices)) throw PreconditionFailed("b is not " + std::to_string(k) + "-inseparable");
    if (!is_model(g, x) || x.target() < m) throw PreconditionFailed("x is not a model of K_" + std::to_string(m));
    if (min_distinguishing_order(g, block_orientation(g, k, b), model_orientation(g, k, x), budget))
        throw OrientationMismatch("block " + b.vertices.to_string() + " and model orient S_" + std::to_string(k) +
                                  " differently");

    SubdivisionEmbedding out;
    out.branch_vertices = b0;
    if (r < 2) return out;

    // H: the vertices of V \ B0 keep their order, then J_b for each b in b0
    // order, |J_b| = r-1. Twin c of J_b is reserved for the c-th other
    // branch vertex.
    std::vector<Vertex> h_of(n, -1);
    std::vector<Vertex> g_of;
    for (Vertex v = 0; v < n; ++v)
        if (!b0_set.contains(v)) {
            h_of[v] = static_cast<Vertex>(g_of.size());
            g_of.push_back(v);
        }
    const int base = static_cast<int>(g_of.size());
    const auto twin = [&](int bi, int c) { return base + bi * (r - 1) + c; };
    const auto slot = [](int bi, int ci) { return ci < bi ? ci : ci - 1; };
    Graph h(base + r * (r - 1));
    for (auto [u, v] : g.edges()) {
        const bool bu = b0_set.contains(u), bv = b0_set.contains(v);
        if (!bu && !bv) {
            h.add_edge(h_of[u], h_of[v]);
            continue;
        }
        const auto idx = [&](Vertex w) { return static_cast<int>(std::find(b0.begin(), b0.end(), w) - b0.begin()); };
        if (bu && bv) {
            for (int a = 0; a < r - 1; ++a)
                for (int c = 0; c < r - 1; ++c) h.add_edge(twin(idx(u), a), twin(idx(v), c));
        } else {
            const Vertex inner = bu ? v : u;
            const int bi = idx(bu ? u : v);
            for (int a = 0; a < r - 1; ++a) h.add_edge(twin(bi, a), h_of[inner]);
        }
    }
    std::vector<Vertex> j;
    for (int bi = 0; bi < r; ++bi)
        for (int c = 0; c < r - 1; ++c) j.push_back(twin(bi, c));
    const auto y = find_z_based_model(h, j, budget);
    if (!y) throw InternalInvariant("no J-based model in the twin graph");

    for (int bi = 0; bi < r; ++bi)
        for (int ci = bi + 1; ci < r; ++ci) {
            const Vertex from = twin(bi, slot(bi, ci));
            const Vertex to = twin(ci, slot(ci, bi));
            const VertexSet allowed = y->branch_sets[from - base] | y->branch_sets[to - base];
            // BFS from `from` to `to` inside the two branch sets.
            std::vector<Vertex> parent(h.vertex_count(), -1);
            std::vector<Vertex> queue{from};
            parent[from] = from;
            for (std::size_t qi = 0; qi < queue.size() && parent[to] < 0; ++qi)
                for (Vertex w : h.neighbors(queue[qi]) & allowed)
                    if (parent[w] < 0) {
                        parent[w] = queue[qi];
                        queue.push_back(w);
                    }
            if (parent[to] < 0) throw InternalInvariant("branch sets of the J-based model do not touch");
            std::vector<Vertex> path;
            for (Vertex w = to; w != from; w = parent[w]) path.push_back(w);
            path.push_back(from);
            std::reverse(path.begin(), path.end());
            std::vector<Vertex> mapped{b0[bi]};
            for (std::size_t i = 1; i + 1 < path.size(); ++i) mapped.push_back(g_of[path[i]]);
            mapped.push_back(b0[ci]);
            Vertex u = b0[bi], w = b0[ci];
            if (u > w) {
                std::swap(u, w);
                std::reverse(mapped.begin(), mapped.end());
            }
            out.paths[{u, w}] = std::move(mapped);
        }
    return out;
}

SubdivisionEmbedding extract_subdivision(const Graph& g, int k, int m, const Block& b, const Model& x,
                                         const std::vector<Vertex>& b0)
{
    Budget budget;
    return extract_subdivision(g, k, m, b, x, b0, budget);
}

}  // namespace topstruct
