#include "tdkernel/solver.hpp"

#include <algorithm>
#include <cassert>
#include <map>

#include "tdkernel/bitset.hpp"

namespace tdk {
namespace {

// Branch-and-bound MIS on dynamic bitsets. Reductions: take degree-0/1
// vertices outright. Bound: |mask| minus a greedy matching (every matched edge
// costs at least one vertex). Branch on the max-degree vertex, include first.
class alpha_bnb {
  public:
    alpha_bnb(const Graph& g, long long budget) : n_(g.vertex_count()), budget_(budget) {
        adj_.assign(size_t(n_), dynbitset(n_));
        for (auto [u, v] : g.edges()) {
            adj_[size_t(u)].set(v);
            adj_[size_t(v)].set(u);
        }
    }

    AlphaResult run() {
        dynbitset all(n_);
        for (int v = 0; v < n_; ++v) all.set(v);
        std::vector<int> chosen;
        rec(all, chosen);
        AlphaResult out;
        out.value = int(best_.size());
        out.witness = VertexSet(best_);
        return out;
    }

  private:
    void rec(dynbitset mask, std::vector<int>& chosen) {
        if (++nodes_ > budget_)
            throw resource_limit_error("alpha: node budget exhausted after " +
                                       std::to_string(nodes_) + " nodes");
        size_t base = chosen.size();
        // reduction loop
        while (true) {
            int low = -1, low_deg = -1;
            for (int v = mask.first(); v != -1; v = mask.next(v)) {
                int d = (adj_[size_t(v)] & mask).count();
                if (d <= 1) {
                    low = v;
                    low_deg = d;
                    break;
                }
            }
            if (low == -1) break;
            chosen.push_back(low);
            mask.reset(low);
            if (low_deg == 1) mask -= adj_[size_t(low)];
        }
        if (mask.empty()) {
            if (chosen.size() > best_.size()) best_ = chosen;
            chosen.resize(base);
            return;
        }
        if (int(chosen.size()) + upper_bound(mask) <= int(best_.size())) {
            chosen.resize(base);
            return;
        }
        int pivot = -1, pivot_deg = -1;
        for (int v = mask.first(); v != -1; v = mask.next(v)) {
            int d = (adj_[size_t(v)] & mask).count();
            if (d > pivot_deg) {
                pivot_deg = d;
                pivot = v;
            }
        }
        dynbitset incl = mask;
        incl.reset(pivot);
        incl -= adj_[size_t(pivot)];
        chosen.push_back(pivot);
        rec(incl, chosen);
        chosen.pop_back();
        mask.reset(pivot);
        rec(mask, chosen);
        chosen.resize(base);
    }

    int upper_bound(const dynbitset& mask) const {
        int total = mask.count();
        dynbitset free = mask;
        int matched = 0;
        for (int v = free.first(); v != -1; v = free.next(v)) {
            dynbitset cand = adj_[size_t(v)] & free;
            int u = cand.next(v); // partner above v keeps the scan linear
            if (u != -1) {
                free.reset(v);
                free.reset(u);
                ++matched;
            }
        }
        return total - matched;
    }

    int n_;
    std::vector<dynbitset> adj_;
    std::vector<int> best_;
    long long budget_;
    long long nodes_ = 0;
};

} // namespace

AlphaResult alpha_exact(const Graph& g, const SolverLimits& limits, AlphaEngine engine) {
    if (engine == AlphaEngine::treedepth_dp) {
        TdResult td = td_exact(g);
        return alpha_on_decomposition(g, td.decomp);
    }
    return alpha_bnb(g, limits.node_budget).run();
}

namespace {

struct dp_ctx {
    const Graph* g;
    const TdDecomposition* d;
    std::vector<std::vector<int>> children;
    std::vector<int> depth;            // 1-based
    std::vector<uint64_t> anc_adj;     // bit (depth(a)-1) set iff ancestor a ~ v
    std::vector<std::vector<int>> memo; // per vertex, indexed by ancestor-choice mask
};

int dp_value(dp_ctx& c, int v, uint64_t chosen) {
    int& slot = c.memo[size_t(v)][size_t(chosen)];
    if (slot >= 0) return slot;
    uint64_t child_base = chosen << 1;
    int out = 0;
    for (int w : c.children[size_t(v)]) out += dp_value(c, w, child_base);
    if ((chosen & c.anc_adj[size_t(v)]) == 0) {
        int in = 1;
        for (int w : c.children[size_t(v)]) in += dp_value(c, w, child_base | 1);
        out = std::max(out, in);
    }
    return slot = out;
}

void dp_collect(dp_ctx& c, int v, uint64_t chosen, std::vector<int>& sol) {
    int value = dp_value(c, v, chosen);
    uint64_t child_base = chosen << 1;
    if ((chosen & c.anc_adj[size_t(v)]) == 0) {
        int in = 1;
        for (int w : c.children[size_t(v)]) in += dp_value(c, w, child_base | 1);
        if (in == value) {
            sol.push_back(v);
            for (int w : c.children[size_t(v)]) dp_collect(c, w, child_base | 1, sol);
            return;
        }
    }
    for (int w : c.children[size_t(v)]) dp_collect(c, w, child_base, sol);
}

} // namespace

AlphaResult alpha_on_decomposition(const Graph& g, const TdDecomposition& d) {
    if (!verify_decomposition(g, d))
        throw invariant_error("alpha_on_decomposition: invalid treedepth decomposition");
    int n = g.vertex_count();
    dp_ctx c;
    c.g = &g;
    c.d = &d;
    c.children.assign(size_t(n), {});
    c.depth.assign(size_t(n), 0);
    c.anc_adj.assign(size_t(n), 0);
    c.memo.assign(size_t(n), {});
    for (int v = 0; v < n; ++v)
        if (d.parent[size_t(v)] != -1) c.children[size_t(d.parent[size_t(v)])].push_back(v);
    // depths via chain walk (parents may have larger ids)
    for (int v = 0; v < n; ++v) {
        if (c.depth[size_t(v)]) continue;
        std::vector<int> chain;
        int u = v;
        while (u != -1 && c.depth[size_t(u)] == 0) {
            chain.push_back(u);
            u = d.parent[size_t(u)];
        }
        int base = u == -1 ? 0 : c.depth[size_t(u)];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) c.depth[size_t(*it)] = ++base;
    }
    // ancestor-choice masks are distance-indexed: bit 0 = parent, bit 1 = grandparent, ...
    size_t memo_cells = 0;
    for (int v = 0; v < n; ++v) {
        for (int a = d.parent[size_t(v)]; a != -1; a = d.parent[size_t(a)])
            if (g.has_edge(v, a))
                c.anc_adj[size_t(v)] |=
                    uint64_t{1} << (c.depth[size_t(v)] - 1 - c.depth[size_t(a)]);
        memo_cells += size_t(1) << (c.depth[size_t(v)] - 1);
        if (memo_cells > (size_t(1) << 26))
            throw resource_limit_error("alpha_on_decomposition: decomposition height " +
                                       std::to_string(d.height) + " needs too many DP states");
        c.memo[size_t(v)].assign(size_t(1) << (c.depth[size_t(v)] - 1), -1);
    }
    AlphaResult out;
    std::vector<int> sol;
    for (int r : d.roots) {
        out.value += dp_value(c, r, 0);
        dp_collect(c, r, 0, sol);
    }
    out.witness = VertexSet(sol);
    assert(out.witness.size() == out.value);
    return out;
}

namespace {

struct vec_hash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : v) h = (h ^ size_t(uint32_t(x))) * 0x100000001b3ULL;
        return h;
    }
};

} // namespace

AlphaResult alpha_annotated(const AnnotatedInstance& inst, const SolverLimits& limits) {
    const VertexSet x = inst.x();
    if (x.size() > 25)
        throw resource_limit_error("alpha_annotated: |X| = " + std::to_string(x.size()) +
                                   " too large for subset enumeration");
    VertexSet r = inst.r();
    InducedSubgraph rsub = induced_subgraph(inst.graph(), r);

    // hyperedges and X-side neighborhoods as masks over positions in x
    std::vector<uint64_t> hmask;
    for (const VertexSet& h : inst.hyperedges()) {
        uint64_t m = 0;
        for (int v : h) {
            int pos = int(std::lower_bound(x.begin(), x.end(), v) - x.begin());
            m |= uint64_t{1} << pos;
        }
        hmask.push_back(m);
    }
    std::vector<dynbitset> rnbr(size_t(x.size()), dynbitset(r.size()));
    for (int i = 0; i < x.size(); ++i)
        for (int w : inst.graph().neighbors(x[i]))
            if (rsub.from_parent[size_t(w)] != -1) rnbr[size_t(i)].set(rsub.from_parent[size_t(w)]);

    std::map<std::vector<int>, AlphaResult> rcache; // key: removed R-local ids
    AlphaResult best;
    best.value = -1;
    long long nodes = 0;
    for (uint64_t s = 0; s < (uint64_t{1} << x.size()); ++s) {
        if (++nodes > limits.node_budget)
            throw resource_limit_error("alpha_annotated: node budget exhausted");
        bool bad = false;
        for (uint64_t m : hmask)
            if ((m & s) == m) {
                bad = true;
                break;
            }
        if (bad) continue;
        dynbitset removed(r.size());
        int xs = 0;
        for (int i = 0; i < x.size(); ++i)
            if (s >> i & 1) {
                ++xs;
                removed |= rnbr[size_t(i)];
            }
        std::vector<int> key;
        for (int v = removed.first(); v != -1; v = removed.next(v)) key.push_back(v);
        auto it = rcache.find(key);
        if (it == rcache.end()) {
            VertexSet keep = VertexSet::range(r.size()).set_minus(VertexSet(key));
            InducedSubgraph sub = induced_subgraph(rsub.graph, keep);
            AlphaResult a = alpha_exact(sub.graph, limits);
            std::vector<int> lifted;
            for (int v : a.witness) lifted.push_back(sub.to_parent[size_t(v)]);
            a.witness = VertexSet(lifted); // now in R-local ids
            it = rcache.emplace(std::move(key), std::move(a)).first;
        }
        if (xs + it->second.value > best.value) {
            std::vector<int> w;
            for (int i = 0; i < x.size(); ++i)
                if (s >> i & 1) w.push_back(x[i]);
            for (int v : it->second.witness) w.push_back(rsub.to_parent[size_t(v)]);
            best.value = xs + it->second.value;
            best.witness = VertexSet(w);
        }
    }
    return best;
}

int conf_vertices(const Graph& g, const VertexSet& rprime, const VertexSet& y,
                  const SolverLimits& limits) {
    if (!y.is_subset_of(rprime))
        throw precondition_error("conf: Y is not a subset of R'");
    InducedSubgraph whole = induced_subgraph(g, rprime);
    int a_all = alpha_exact(whole.graph, limits).value;
    InducedSubgraph rest = induced_subgraph(g, rprime.set_minus(y));
    int a_rest = alpha_exact(rest.graph, limits).value;
    return a_all - a_rest;
}

int conf_chunk(const AnnotatedInstance& inst, const VertexSet& rprime, const VertexSet& xprime,
               const SolverLimits& limits) {
    if (!xprime.is_subset_of(inst.x()))
        throw precondition_error("conf: X' is not a subset of the modulator");
    if (!rprime.is_subset_of(inst.r()))
        throw precondition_error("conf: R' is not a subset of the remainder");
    std::vector<int> nbr;
    for (int v : xprime)
        for (int w : inst.graph().neighbors(v))
            if (rprime.contains(w)) nbr.push_back(w);
    return conf_vertices(inst.graph(), rprime, VertexSet(nbr), limits);
}

std::optional<int> gamma_exact(const Graph& g, int kmax, const SolverLimits& limits) {
    int n = g.vertex_count();
    if (n > 64)
        throw resource_limit_error("gamma: graphs above 64 vertices are not supported");
    if (kmax < 0) return std::nullopt;
    if (n == 0) return 0;
    std::vector<uint64_t> closed(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) closed[size_t(v)] = uint64_t{1} << v;
    for (auto [u, v] : g.edges()) {
        closed[size_t(u)] |= uint64_t{1} << v;
        closed[size_t(v)] |= uint64_t{1} << u;
    }
    uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;

    // greedy cover for the initial cap
    int greedy = 0;
    for (uint64_t dom = 0; dom != full; ++greedy) {
        int pick = -1, gain = -1;
        for (int v = 0; v < n; ++v) {
            int covers = std::popcount(closed[size_t(v)] & ~dom);
            if (covers > gain) {
                gain = covers;
                pick = v;
            }
        }
        dom |= closed[size_t(pick)];
    }

    int best = greedy;
    long long nodes = 0;
    const long long budget = limits.node_budget;
    auto rec = [&](auto&& self, uint64_t dom, int used) -> void {
        if (++nodes > budget)
            throw resource_limit_error("gamma: node budget exhausted after " +
                                       std::to_string(nodes) + " nodes");
        if (dom == full) {
            best = std::min(best, used);
            return;
        }
        int cap = std::min(best, kmax + 1);
        uint64_t und = full & ~dom;
        int maxcov = 0;
        for (int v = 0; v < n; ++v)
            maxcov = std::max(maxcov, std::popcount(closed[size_t(v)] & und));
        int need = (std::popcount(und) + maxcov - 1) / maxcov;
        if (used + need >= cap) return;
        // branch over the closed neighborhood of the most constrained vertex
        int u = -1, ucand = n + 1;
        for (int v = 0; v < n; ++v)
            if (und >> v & 1) {
                int cand = std::popcount(closed[size_t(v)]);
                if (cand < ucand) {
                    ucand = cand;
                    u = v;
                }
            }
        for (uint64_t cs = closed[size_t(u)]; cs;) {
            int v = std::countr_zero(cs);
            cs &= cs - 1;
            self(self, dom | closed[size_t(v)], used + 1);
        }
    };
    rec(rec, 0, 0);
    if (best <= kmax) return best;
    return std::nullopt;
}

bool sat_bruteforce(const CnfFormula& f) {
    if (f.n_vars > 30)
        throw resource_limit_error("sat: formulas above 30 variables are not supported");
    uint32_t span = uint32_t{1} << f.n_vars;
    for (uint32_t a = 0; a < span; ++a) {
        bool ok = true;
        for (const auto& cl : f.clauses) {
            bool sat = false;
            for (int lit : cl) {
                int v = lit < 0 ? -lit : lit;
                bool val = (a >> (v - 1)) & 1;
                if ((lit > 0) == val) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

} // namespace tdk
