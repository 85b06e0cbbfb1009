#include "tdkernel/treedepth.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>
#include <unordered_map>

namespace tdk {
namespace {

uint64_t bit(int i) { return uint64_t{1} << i; }

struct mask_hash {
    size_t operator()(uint64_t x) const {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return size_t(x ^ (x >> 31));
    }
};

// Exact-treedepth search over one <=64-vertex graph, memoized on vertex masks.
class td_search {
  public:
    td_search(const Graph& g, long long budget) : budget_(budget) {
        n_ = g.vertex_count();
        if (n_ > 64)
            throw resource_limit_error("treedepth: component with " + std::to_string(n_) +
                                       " vertices exceeds the 64-vertex exact-search limit");
        adj_.assign(size_t(n_), 0);
        for (auto [u, v] : g.edges()) {
            adj_[size_t(u)] |= bit(v);
            adj_[size_t(v)] |= bit(u);
        }
        full_ = n_ == 64 ? ~uint64_t{0} : bit(n_) - 1;
    }

    uint64_t full_mask() const { return full_; }

    bool at_most(uint64_t mask, int d) {
        while (mask) {
            uint64_t sub = component_of(mask, std::countr_zero(mask));
            if (!connected_at_most(sub, d)) return false;
            mask &= ~sub;
        }
        return true;
    }

    int exact(uint64_t mask) {
        int best = 0;
        while (mask) {
            uint64_t sub = component_of(mask, std::countr_zero(mask));
            int lo = lower_bound(sub);
            while (!connected_at_most(sub, lo)) ++lo;
            best = std::max(best, lo);
            mask &= ~sub;
        }
        return best;
    }

    // Smallest-id optimal root of a connected mask whose treedepth is td.
    int optimal_root(uint64_t sub, int td) {
        for (uint64_t rest = sub; rest;) {
            int r = std::countr_zero(rest);
            rest &= rest - 1;
            if (at_most(sub & ~bit(r), td - 1)) return r;
        }
        assert(false && "connected mask with treedepth td must have an optimal root");
        return -1;
    }

    uint64_t component_of(uint64_t mask, int v) const {
        uint64_t comp = bit(v), frontier = comp;
        while (frontier) {
            uint64_t next = 0;
            while (frontier) {
                int u = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= adj_[size_t(u)] & mask & ~comp;
                comp |= adj_[size_t(u)] & mask;
            }
            frontier = next;
        }
        return comp;
    }

  private:
    struct bounds {
        int lb = 1;
        int ub = 1 << 30;
    };

    bool connected_at_most(uint64_t sub, int d) {
        int n = std::popcount(sub);
        if (n == 0) return true;
        if (d >= n) return true;
        if (d <= 0) return false;
        auto [it, fresh] = memo_.try_emplace(sub);
        bounds& b = it->second;
        if (fresh) b.lb = lower_bound(sub);
        if (b.ub <= d) return true;
        if (b.lb > d) return false;
        if (++nodes_ > budget_)
            throw resource_limit_error("treedepth: node budget exhausted after " +
                                       std::to_string(nodes_) + " nodes");
        for (uint64_t rest = sub; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (at_most(sub & ~bit(v), d - 1)) {
                memo_[sub].ub = std::min(memo_[sub].ub, d);
                return true;
            }
        }
        memo_[sub].lb = std::max(memo_[sub].lb, d + 1);
        return false;
    }

    // Admissible: 2 with an edge, 3 with a triangle, and ceil(log2(k+1)) for a
    // k-vertex path subgraph found by double BFS.
    int lower_bound(uint64_t sub) {
        int n = std::popcount(sub);
        if (n <= 1) return n;
        int lb = 1;
        bool edge = false, triangle = false;
        for (uint64_t rest = sub; rest && !triangle;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            uint64_t nb = adj_[size_t(v)] & sub;
            if (nb) edge = true;
            for (uint64_t r2 = nb; r2;) {
                int u = std::countr_zero(r2);
                r2 &= r2 - 1;
                if (adj_[size_t(u)] & nb) {
                    triangle = true;
                    break;
                }
            }
        }
        if (edge) lb = 2;
        if (triangle) lb = 3;
        int far = bfs_farthest(sub, std::countr_zero(sub)).first;
        auto [v2, dist] = bfs_farthest(sub, far);
        (void)v2;
        int path_vertices = dist + 1;
        int log_lb = std::bit_width(unsigned(path_vertices + 1) - 1); // ceil(log2(k+1))
        return std::max(lb, log_lb);
    }

    std::pair<int, int> bfs_farthest(uint64_t sub, int src) const {
        uint64_t seen = bit(src), frontier = seen;
        int dist = 0, last = src;
        while (true) {
            uint64_t next = 0;
            for (uint64_t f = frontier; f;) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[size_t(u)] & sub & ~seen;
            }
            if (!next) break;
            seen |= next;
            frontier = next;
            ++dist;
            last = std::countr_zero(next);
        }
        return {last, dist};
    }

    int n_ = 0;
    uint64_t full_ = 0;
    std::vector<uint64_t> adj_;
    std::unordered_map<uint64_t, bounds, mask_hash> memo_;
    long long budget_ = 0;
    long long nodes_ = 0;
};

// Writes the optimal-height tree for `mask` (ids local to `search`/`sub.to_parent`)
// into out.parent using parent ids of the host graph.
void build_decomposition(td_search& search, const InducedSubgraph& sub, uint64_t mask,
                         int parent_global, TdDecomposition& out) {
    while (mask) {
        uint64_t comp = search.component_of(mask, std::countr_zero(mask));
        mask &= ~comp;
        int td = search.exact(comp);
        int r = search.optimal_root(comp, td);
        int r_global = sub.to_parent[size_t(r)];
        out.parent[size_t(r_global)] = parent_global;
        build_decomposition(search, sub, comp & ~bit(r), r_global, out);
    }
}

} // namespace

TdResult td_exact(const Graph& g, const TdLimits& limits) {
    TdResult res;
    res.decomp.parent.assign(size_t(g.vertex_count()), -1);
    for (const VertexSet& comp : components(g)) {
        InducedSubgraph sub = induced_subgraph(g, comp);
        td_search search(sub.graph, limits.node_budget);
        int td = search.exact(search.full_mask());
        res.value = std::max(res.value, td);
        build_decomposition(search, sub, search.full_mask(), -1, res.decomp);
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (res.decomp.parent[size_t(v)] == -1) res.decomp.roots.push_back(v);
    res.decomp.height = res.value;
    return res;
}

bool td_at_most(const Graph& g, int c, const TdLimits& limits) {
    if (c < 0) return g.vertex_count() == 0;
    for (const VertexSet& comp : components(g)) {
        if (comp.size() <= c) continue;
        InducedSubgraph sub = induced_subgraph(g, comp);
        td_search search(sub.graph, limits.node_budget);
        if (!search.at_most(search.full_mask(), c)) return false;
    }
    return true;
}

bool verify_decomposition(const Graph& g, const TdDecomposition& d) {
    int n = g.vertex_count();
    if (int(d.parent.size()) != n) return false;
    std::vector<int> depth(size_t(n), -1);
    for (int v = 0; v < n; ++v) {
        if (d.parent[size_t(v)] < -1 || d.parent[size_t(v)] >= n) return false;
        if (depth[size_t(v)] != -1) continue;
        std::vector<int> chain;
        int u = v;
        while (u != -1 && depth[size_t(u)] == -1) {
            chain.push_back(u);
            u = d.parent[size_t(u)];
            if (int(chain.size()) > n) return false; // cycle
        }
        int base = u == -1 ? 0 : depth[size_t(u)];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[size_t(*it)] = ++base;
    }
    std::vector<int> roots;
    for (int v = 0; v < n; ++v)
        if (d.parent[size_t(v)] == -1) roots.push_back(v);
    if (roots != d.roots) return false;
    int height = 0;
    for (int v = 0; v < n; ++v) height = std::max(height, depth[size_t(v)]);
    if (height != d.height) return false;
    for (auto [u, v] : g.edges()) {
        // one endpoint must be an ancestor of the other
        int a = depth[size_t(u)] >= depth[size_t(v)] ? u : v;
        int b = a == u ? v : u;
        while (a != -1 && a != b) a = d.parent[size_t(a)];
        if (a != b) return false;
    }
    return true;
}

bool is_c_modulator(const Graph& g, const VertexSet& x, int c, const TdLimits& limits) {
    VertexSet rest = VertexSet::range(g.vertex_count()).set_minus(x);
    for (int v : x)
        if (v < 0 || v >= g.vertex_count())
            throw invariant_error("modulator: vertex id " + std::to_string(v) +
                                  " not in host graph");
    return td_at_most(induced_subgraph(g, rest).graph, c, limits);
}

namespace {

// First component (smallest-member order) of g - removed with treedepth > c,
// or empty if none.
VertexSet first_obstruction(const Graph& g, const VertexSet& removed, int c,
                            const TdLimits& limits) {
    VertexSet rest = VertexSet::range(g.vertex_count()).set_minus(removed);
    InducedSubgraph sub = induced_subgraph(g, rest);
    for (const VertexSet& comp : components(sub.graph)) {
        if (comp.size() <= c) continue;
        InducedSubgraph csub = induced_subgraph(sub.graph, comp);
        td_search search(csub.graph, limits.node_budget);
        if (!search.at_most(search.full_mask(), c)) {
            std::vector<int> orig;
            for (int v : comp) orig.push_back(sub.to_parent[size_t(v)]);
            return VertexSet(orig);
        }
    }
    return {};
}

void exact_modulator_rec(const Graph& g, int c, const TdLimits& limits, std::vector<int>& chosen,
                         std::optional<VertexSet>& best, long long& nodes) {
    if (++nodes > limits.node_budget)
        throw resource_limit_error("modulator: node budget exhausted");
    if (best && int(chosen.size()) >= best->size()) return;
    VertexSet obstruction = first_obstruction(g, VertexSet(chosen), c, limits);
    if (obstruction.empty()) {
        best = VertexSet(chosen);
        return;
    }
    if (best && int(chosen.size()) + 1 >= best->size()) return;
    for (int v : obstruction) {
        chosen.push_back(v);
        exact_modulator_rec(g, c, limits, chosen, best, nodes);
        chosen.pop_back();
    }
}

} // namespace

Modulator compute_modulator(const Graph& g, int c, ModulatorMode mode, const TdLimits& limits) {
    Modulator out;
    out.c = c;
    out.mode = mode;
    if (c < 0) throw precondition_error("modulator: c must be nonnegative");
    if (mode == ModulatorMode::exact) {
        std::vector<int> chosen;
        std::optional<VertexSet> best;
        long long nodes = 0;
        exact_modulator_rec(g, c, limits, chosen, best, nodes);
        assert(best); // chosen = V always works, so the search finds something
        out.x = *best;
        return out;
    }
    std::vector<int> picked;
    while (true) {
        VertexSet obstruction = first_obstruction(g, VertexSet(picked), c, limits);
        if (obstruction.empty()) break;
        InducedSubgraph sub = induced_subgraph(g, obstruction);
        td_search search(sub.graph, limits.node_budget);
        int td = search.exact(search.full_mask());
        int r = search.optimal_root(search.full_mask(), td);
        picked.push_back(sub.to_parent[size_t(r)]);
    }
    out.x = VertexSet(picked);
    return out;
}

} // namespace tdk
