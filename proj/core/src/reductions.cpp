#include "tdkernel/reductions.hpp"

#include <algorithm>

#include "tdkernel/solver.hpp"

namespace tdk {

Graph subdivide(const Graph& g, int t) {
    if (t < 0) throw precondition_error("subdivide: negative subdivision count");
    int n = g.vertex_count();
    int m = g.edge_count();
    Graph out(n + m * t);
    for (int v = 0; v < n; ++v) out.set_label(v, g.label(v));
    const auto& edges = g.edges();
    for (int e = 0; e < m; ++e) {
        auto [a, b] = edges[size_t(e)];
        if (t == 0) {
            out.add_edge(a, b);
            continue;
        }
        int base = n + e * t;
        std::string tag = std::to_string(a) + "-" + std::to_string(b);
        for (int j = 0; j < t; ++j)
            out.set_label(base + j, "sub:" + tag + ":" + std::to_string(j));
        out.add_edge(a, base);
        for (int j = 0; j + 1 < t; ++j) out.add_edge(base + j, base + j + 1);
        out.add_edge(base + t - 1, b);
    }
    return out;
}

LabeledInstance ds_subdivision_instance(const Graph& g, int k, int c) {
    if (c < 0) throw precondition_error("ds_subdivision_instance: negative c");
    LabeledInstance out;
    out.g = subdivide(g, 3 * c);
    out.k = k + g.edge_count() * c;
    out.certificates["original_vertices"] = VertexSet::range(g.vertex_count()).ids();
    return out;
}

LabeledInstance reduce_vc_ds_deg2(const Graph& g, int k, const std::optional<VertexSet>& vc) {
    VertexSet cover;
    if (vc) {
        for (auto [u, v] : g.edges())
            if (!vc->contains(u) && !vc->contains(v))
                throw invariant_error("reduce_vc_ds_deg2: supplied set misses edge {" +
                                      std::to_string(u) + "," + std::to_string(v) + "}");
        cover = *vc;
    } else {
        AlphaResult a = alpha_exact(g);
        cover = VertexSet::range(g.vertex_count()).set_minus(a.witness);
    }
    LabeledInstance out;
    out.g = subdivide(g, 3);
    out.k = k + g.edge_count();
    out.certificates["modulator"] = cover.ids();
    out.certificates["elimination_order"] = degeneracy(out.g).order;
    return out;
}

LabeledInstance cross_compose_3sat(const std::vector<CnfFormula>& formulas) {
    if (formulas.empty()) throw precondition_error("cross_compose_3sat: no formulas");
    int n = formulas[0].n_vars;
    int m = formulas[0].clause_count();
    for (const CnfFormula& f : formulas)
        if (f.n_vars != n || f.clause_count() != m)
            throw precondition_error(
                "cross_compose_3sat: formulas must share variable and clause counts");
    int t = int(formulas.size());

    // ids: x_l = 2l, nx_l = 2l+1 (l = 0..n-1), a_l = 2n+l,
    //      c_ij = 3n + i*m + j, r_i = 3n + t*m + i, y_i = 3n + t*m + t + i,
    //      apex = 3n + t*m + 2t
    auto pos = [&](int l) { return 2 * l; };
    auto neg = [&](int l) { return 2 * l + 1; };
    auto tri = [&](int l) { return 2 * n + l; };
    auto cls = [&](int i, int j) { return 3 * n + i * m + j; };
    auto root = [&](int i) { return 3 * n + t * m + i; };
    auto ypick = [&](int i) { return 3 * n + t * m + t + i; };
    int apex = 3 * n + t * m + 2 * t;

    LabeledInstance out;
    out.g = Graph(apex + 1);
    out.k = n + t;
    for (int l = 0; l < n; ++l) {
        out.g.set_label(pos(l), "x:" + std::to_string(l + 1));
        out.g.set_label(neg(l), "nx:" + std::to_string(l + 1));
        out.g.set_label(tri(l), "a:" + std::to_string(l + 1));
        out.g.add_edge(pos(l), neg(l));
        out.g.add_edge(tri(l), pos(l));
        out.g.add_edge(tri(l), neg(l));
    }
    out.g.set_label(apex, "apex");
    for (int i = 0; i < t; ++i) {
        out.g.set_label(root(i), "r:" + std::to_string(i));
        out.g.set_label(ypick(i), "y:" + std::to_string(i));
        out.g.add_edge(root(i), ypick(i));
        out.g.add_edge(ypick(i), apex);
        for (int j = 0; j < m; ++j) {
            out.g.set_label(cls(i, j), "c:" + std::to_string(i) + ":" + std::to_string(j));
            out.g.add_edge(root(i), cls(i, j));
            const auto& clause = formulas[size_t(i)].clauses[size_t(j)];
            for (int lit : clause) {
                int l = (lit < 0 ? -lit : lit) - 1;
                // duplicate literals inside a clause collapse: simple graph
                out.g.add_edge_if_absent(lit > 0 ? pos(l) : neg(l), cls(i, j));
            }
        }
    }

    std::vector<int> modulator;
    std::vector<int> literals;
    for (int l = 0; l < n; ++l) {
        literals.push_back(pos(l));
        literals.push_back(neg(l));
        modulator.push_back(pos(l));
        modulator.push_back(neg(l));
        modulator.push_back(tri(l));
    }
    modulator.push_back(apex);
    std::sort(modulator.begin(), modulator.end());
    out.certificates["modulator"] = modulator;

    std::vector<int> order;
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < m; ++j) order.push_back(cls(i, j));
    for (int i = 0; i < t; ++i) order.push_back(root(i));
    for (int i = 0; i < t; ++i) order.push_back(ypick(i));
    order.push_back(apex);
    for (int l = 0; l < n; ++l) {
        order.push_back(pos(l));
        order.push_back(neg(l));
    }
    for (int l = 0; l < n; ++l) order.push_back(tri(l));
    out.certificates["elimination_order"] = order;

    out.certificates["literal_vertices"] = literals;
    std::vector<int> ids;
    for (int l = 0; l < n; ++l) ids.push_back(tri(l));
    out.certificates["apex_triangle_vertices"] = ids;
    ids.clear();
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < m; ++j) ids.push_back(cls(i, j));
    out.certificates["clause_vertices"] = ids;
    ids.clear();
    for (int i = 0; i < t; ++i) ids.push_back(root(i));
    out.certificates["root_vertices"] = ids;
    ids.clear();
    for (int i = 0; i < t; ++i) ids.push_back(ypick(i));
    out.certificates["y_vertices"] = ids;
    out.certificates["apex"] = {apex};
    return out;
}

LowerBoundFamily lower_bound_family(int t) {
    if (t < 1) throw precondition_error("lower_bound_family: t must be positive");
    LowerBoundFamily out;
    auto a = [](int i) { return 3 * i; };
    auto b = [](int i) { return 3 * i + 1; };
    auto c = [](int i) { return 3 * i + 2; };
    int v1 = 6 * t, v2 = 6 * t + 1;
    out.g = Graph(6 * t + 2);
    std::vector<int> apexes;
    for (int i = 0; i < 2 * t; ++i) {
        out.g.set_label(a(i), "a:" + std::to_string(i + 1));
        out.g.set_label(b(i), "b:" + std::to_string(i + 1));
        out.g.set_label(c(i), "c:" + std::to_string(i + 1));
        out.g.add_edge(a(i), b(i));
        out.g.add_edge(c(i), a(i));
        out.g.add_edge(c(i), b(i));
        apexes.push_back(c(i));
    }
    for (int i = 0; i < t; ++i) out.g.add_edge(b(2 * i), b(2 * i + 1));
    for (int i = 0; i + 1 < t; ++i) out.g.add_edge(a(2 * i + 1), a(2 * i + 2));
    out.g.set_label(v1, "v1");
    out.g.set_label(v2, "v2");
    out.g.add_edge(v1, a(0));
    out.g.add_edge(a(2 * t - 1), v2);
    out.y = VertexSet(apexes);
    return out;
}

LabeledInstance edge_gadget_vc_to_ds(const Graph& g, int k) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0)
            throw precondition_error("edge_gadget_vc_to_ds: isolated vertex " +
                                     std::to_string(v));
    LabeledInstance out;
    int n = g.vertex_count();
    int m = g.edge_count();
    out.g = Graph(n + m);
    out.k = k;
    for (int v = 0; v < n; ++v) out.g.set_label(v, g.label(v));
    const auto& edges = g.edges();
    std::vector<int> gadget;
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[size_t(e)];
        out.g.add_edge(u, v);
        out.g.add_edge(n + e, u);
        out.g.add_edge(n + e, v);
        out.g.set_label(n + e, "edge:" + std::to_string(u) + "-" + std::to_string(v));
        gadget.push_back(n + e);
    }
    out.certificates["edge_vertices"] = gadget;
    return out;
}

LabeledInstance compose_disjoint_union(const std::vector<std::pair<Graph, int>>& parts) {
    std::vector<Graph> gs;
    LabeledInstance out;
    for (const auto& [g, k] : parts) {
        gs.push_back(g);
        out.k += k;
    }
    UnionGraph u = disjoint_union(gs);
    out.g = std::move(u.graph);
    out.certificates["part_offsets"] = u.offsets;
    return out;
}

LabeledInstance gen_logtd_instance(int u, int w, const std::vector<std::pair<int, int>>& bip_edges,
                                   int k) {
    if (u < 1) throw precondition_error("gen_logtd_instance: u must be positive");
    if (w < 0) throw precondition_error("gen_logtd_instance: negative w");
    Graph bip(u + w);
    for (int i = 0; i < u; ++i) bip.set_label(i, "u:" + std::to_string(i));
    for (int j = 0; j < w; ++j) bip.set_label(u + j, "w:" + std::to_string(j));
    for (auto [i, j] : bip_edges) {
        if (i < 0 || i >= u || j < 0 || j >= w)
            throw precondition_error("gen_logtd_instance: edge (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") outside U x W");
        bip.add_edge(i, u + j);
    }
    int m = bip.edge_count();
    Graph sub = subdivide(bip, 3 * u);

    long long side = (3LL * u + 1) * (3LL * u + 1);
    long long grid_n = side * side;
    long long total = sub.vertex_count() + grid_n + 1;
    if (total > 2'000'000)
        throw resource_limit_error("gen_logtd_instance: instance would have " +
                                   std::to_string(total) + " vertices");
    LabeledInstance out;
    out.g = Graph(int(total));
    out.k = k + u * m + 1;
    for (int v = 0; v < sub.vertex_count(); ++v) out.g.set_label(v, sub.label(v));
    for (auto [a, b] : sub.edges()) out.g.add_edge(a, b);
    int off = sub.vertex_count();
    int s = int(side);
    for (int r = 0; r < s; ++r)
        for (int c = 0; c < s; ++c) {
            int id = off + r * s + c;
            out.g.set_label(id, "grid:" + std::to_string(r) + ":" + std::to_string(c));
            if (c + 1 < s) out.g.add_edge(id, id + 1);
            if (r + 1 < s) out.g.add_edge(id, id + s);
        }
    int apex = off + s * s;
    out.g.set_label(apex, "apex");
    for (int v = off; v < apex; ++v) out.g.add_edge(apex, v);

    std::vector<int> modulator;
    for (int i = 0; i < u; ++i) modulator.push_back(i);
    for (int v = off; v <= apex; ++v) modulator.push_back(v);
    out.certificates["modulator"] = modulator;
    std::vector<int> centers;
    for (int j = 0; j < w; ++j) centers.push_back(u + j);
    out.certificates["spider_centers"] = centers;
    return out;
}

} // namespace tdk
