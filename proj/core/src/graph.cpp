#include "tdkernel/graph.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace tdk {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

VertexSet VertexSet::range(int n) {
    std::vector<int> v(static_cast<size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    VertexSet s;
    s.ids_ = std::move(v);
    return s;
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

bool VertexSet::is_subset_of(const VertexSet& o) const {
    return std::includes(o.ids_.begin(), o.ids_.end(), ids_.begin(), ids_.end());
}

VertexSet VertexSet::set_union(const VertexSet& o) const {
    VertexSet r;
    std::set_union(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                   std::back_inserter(r.ids_));
    return r;
}

VertexSet VertexSet::set_minus(const VertexSet& o) const {
    VertexSet r;
    std::set_difference(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                        std::back_inserter(r.ids_));
    return r;
}

VertexSet VertexSet::set_intersect(const VertexSet& o) const {
    VertexSet r;
    std::set_intersection(ids_.begin(), ids_.end(), o.ids_.begin(), o.ids_.end(),
                          std::back_inserter(r.ids_));
    return r;
}

namespace {
size_t checked_vertex_count(int n) {
    if (n < 0) throw invariant_error("graph: negative vertex count");
    return size_t(n);
}
}  // namespace

Graph::Graph(int n) : n_(n), adj_(checked_vertex_count(n)), labels_(size_t(n)) {}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw invariant_error("graph: vertex id " + std::to_string(v) + " out of range [0," +
                              std::to_string(n_) + ")");
}

void Graph::add_edge(int u, int v) {
    if (!add_edge_if_absent(u, v))
        throw invariant_error("graph: duplicate edge {" + std::to_string(u) + "," +
                              std::to_string(v) + "}");
}

bool Graph::add_edge_if_absent(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw invariant_error("graph: self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (has_edge(u, v)) return false;
    edges_.emplace_back(u, v);
    edges_sorted_ = false;
    auto& au = adj_[size_t(u)];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[size_t(v)];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& a = adj_[size_t(u)];
    return std::binary_search(a.begin(), a.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[size_t(v)];
}

void Graph::sort_edges() {
    std::sort(edges_.begin(), edges_.end());
    edges_sorted_ = true;
}

// edges() must hand out the canonical order; keep the lazily-sorted vector hidden.
const std::vector<std::pair<int, int>>& Graph::edges() const {
    if (!edges_sorted_) const_cast<Graph*>(this)->sort_edges();
    return edges_;
}

const std::string& Graph::label(int v) const {
    check_vertex(v);
    return labels_[size_t(v)];
}

void Graph::set_label(int v, std::string s) {
    check_vertex(v);
    labels_[size_t(v)] = std::move(s);
}

CnfFormula::CnfFormula(int n_vars_, std::vector<std::array<int, 3>> clauses_)
    : n_vars(n_vars_), clauses(std::move(clauses_)) {
    if (n_vars < 0) throw invariant_error("cnf: negative variable count");
    for (const auto& cl : clauses)
        for (int lit : cl) {
            int v = lit < 0 ? -lit : lit;
            if (lit == 0 || v > n_vars)
                throw invariant_error("cnf: literal " + std::to_string(lit) +
                                      " outside variables 1.." + std::to_string(n_vars));
        }
}

std::vector<VertexSet> components(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(size_t(n), -1);
    std::vector<VertexSet> out;
    std::vector<int> stack, members;
    for (int s = 0; s < n; ++s) {
        if (comp[size_t(s)] != -1) continue;
        int id = int(out.size());
        members.clear();
        stack.push_back(s);
        comp[size_t(s)] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : g.neighbors(v))
                if (comp[size_t(w)] == -1) {
                    comp[size_t(w)] = id;
                    stack.push_back(w);
                }
        }
        out.emplace_back(members);
    }
    return out; // scanning s ascending orders components by smallest member
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph r;
    r.from_parent.assign(size_t(g.vertex_count()), -1);
    for (int v : s) {
        if (v < 0 || v >= g.vertex_count())
            throw invariant_error("induced_subgraph: vertex id " + std::to_string(v) +
                                  " not in host graph");
        r.from_parent[size_t(v)] = int(r.to_parent.size());
        r.to_parent.push_back(v);
    }
    r.graph = Graph(s.size());
    for (int v : s) {
        r.graph.set_label(r.from_parent[size_t(v)], g.label(v));
        for (int w : g.neighbors(v))
            if (w > v && r.from_parent[size_t(w)] != -1)
                r.graph.add_edge(r.from_parent[size_t(v)], r.from_parent[size_t(w)]);
    }
    return r;
}

DegeneracyOrder degeneracy(const Graph& g) {
    int n = g.vertex_count();
    DegeneracyOrder out;
    std::vector<int> deg(static_cast<size_t>(n));
    std::vector<bool> removed(size_t(n), false);
    for (int v = 0; v < n; ++v) deg[size_t(v)] = g.degree(v);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[size_t(v)] && (best == -1 || deg[size_t(v)] < deg[size_t(best)]))
                best = v; // ties: smallest id wins by scan order
        out.d = std::max(out.d, deg[size_t(best)]);
        out.order.push_back(best);
        removed[size_t(best)] = true;
        for (int w : g.neighbors(best))
            if (!removed[size_t(w)]) --deg[size_t(w)];
    }
    return out;
}

bool verify_elimination_order(const Graph& g, const std::vector<int>& order, int d) {
    int n = g.vertex_count();
    if (int(order.size()) != n) return false;
    std::vector<bool> removed(size_t(n), false);
    std::vector<bool> seen(size_t(n), false);
    for (int v : order) {
        if (v < 0 || v >= n || seen[size_t(v)]) return false;
        seen[size_t(v)] = true;
        int live = 0;
        for (int w : g.neighbors(v))
            if (!removed[size_t(w)]) ++live;
        if (live > d) return false;
        removed[size_t(v)] = true;
    }
    return true;
}

bool is_acyclic(const Graph& g) {
    // A forest has exactly n - (#components) edges.
    return g.edge_count() == g.vertex_count() - int(components(g).size());
}

UnionGraph disjoint_union(const std::vector<Graph>& parts) {
    UnionGraph out;
    int total = 0;
    for (const auto& p : parts) {
        out.offsets.push_back(total);
        total += p.vertex_count();
    }
    out.graph = Graph(total);
    for (size_t i = 0; i < parts.size(); ++i) {
        int off = out.offsets[i];
        for (int v = 0; v < parts[i].vertex_count(); ++v)
            out.graph.set_label(off + v, parts[i].label(v));
        for (auto [u, v] : parts[i].edges()) out.graph.add_edge(off + u, off + v);
    }
    return out;
}

} // namespace tdk
