#include "tdkernel/instance.hpp"

#include <algorithm>
#include <numeric>

namespace tdk {

AnnotatedInstance AnnotatedInstance::make(Graph g, VertexSet x,
                                          std::vector<VertexSet> hyperedges, int k, int c,
                                          std::vector<int> input_ids, const TdLimits& limits) {
    AnnotatedInstance inst;
    if (c < 0) throw invariant_error("instance: c must be nonnegative");
    for (int v : x)
        if (v < 0 || v >= g.vertex_count())
            throw invariant_error("instance: modulator vertex " + std::to_string(v) +
                                  " not in graph");
    for (auto [u, v] : g.edges())
        if (x.contains(u) && x.contains(v))
            throw invariant_error("instance: plain edge {" + std::to_string(u) + "," +
                                  std::to_string(v) +
                                  "} inside the modulator (wrap it as a hyperedge)");
    for (const VertexSet& h : hyperedges) {
        if (h.empty()) throw invariant_error("instance: empty hyperedge");
        if (!h.is_subset_of(x))
            throw invariant_error("instance: hyperedge not contained in the modulator");
    }
    std::sort(hyperedges.begin(), hyperedges.end());
    hyperedges.erase(std::unique(hyperedges.begin(), hyperedges.end()), hyperedges.end());

    if (input_ids.empty()) {
        input_ids.resize(size_t(g.vertex_count()));
        std::iota(input_ids.begin(), input_ids.end(), 0);
    }
    if (int(input_ids.size()) != g.vertex_count())
        throw invariant_error("instance: input_ids size mismatch");

    inst.x_ = std::move(x);
    inst.hyperedges_ = std::move(hyperedges);
    inst.k_ = k;
    inst.c_ = c;
    inst.input_ids_ = std::move(input_ids);

    VertexSet r = VertexSet::range(g.vertex_count()).set_minus(inst.x_);
    InducedSubgraph rsub = induced_subgraph(g, r);
    for (const VertexSet& comp_local : components(rsub.graph)) {
        ComponentCert cert;
        std::vector<int> global;
        for (int v : comp_local) global.push_back(rsub.to_parent[size_t(v)]);
        cert.vertices = VertexSet(global);
        TdResult td = td_exact(induced_subgraph(g, cert.vertices).graph, limits);
        if (td.value > c)
            throw invariant_error("instance: remainder component containing vertex " +
                                  std::to_string(cert.vertices[0]) + " has treedepth " +
                                  std::to_string(td.value) + " > c = " + std::to_string(c));
        cert.decomp = std::move(td.decomp);
        inst.r_components_.push_back(std::move(cert));
    }
    inst.g_ = std::move(g);
    return inst;
}

WrapResult wrap_plain_graph(const Graph& g, const VertexSet& x, int k, int c,
                            const TdLimits& limits) {
    WrapResult out;
    Graph plain(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) plain.set_label(v, g.label(v));
    std::vector<VertexSet> hyper;
    for (auto [u, v] : g.edges()) {
        if (x.contains(u) && x.contains(v)) {
            hyper.emplace_back(std::vector<int>{u, v});
            ++out.converted_edges;
        } else {
            plain.add_edge(u, v);
        }
    }
    out.instance = AnnotatedInstance::make(std::move(plain), x, std::move(hyper), k, c, {},
                                           limits);
    return out;
}

TdDecomposition restrict_decomposition(const TdDecomposition& d, const VertexSet& keep) {
    int n = int(d.parent.size());
    std::vector<int> local(size_t(n), -1);
    for (int i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= n)
            throw invariant_error("restrict_decomposition: vertex outside decomposition");
        local[size_t(keep[i])] = i;
    }
    TdDecomposition out;
    out.parent.assign(size_t(keep.size()), -1);
    for (int i = 0; i < keep.size(); ++i) {
        int u = d.parent[size_t(keep[i])];
        while (u != -1 && local[size_t(u)] == -1) u = d.parent[size_t(u)];
        out.parent[size_t(i)] = u == -1 ? -1 : local[size_t(u)];
    }
    for (int i = 0; i < keep.size(); ++i) {
        if (out.parent[size_t(i)] == -1) out.roots.push_back(i);
    }
    // depths: parents always precede children? Not necessarily by id; walk chains.
    std::vector<int> d2(size_t(keep.size()), -1);
    for (int i = 0; i < keep.size(); ++i) {
        std::vector<int> chain;
        int u = i;
        while (u != -1 && d2[size_t(u)] == -1) {
            chain.push_back(u);
            u = out.parent[size_t(u)];
        }
        int base = u == -1 ? 0 : d2[size_t(u)];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) d2[size_t(*it)] = ++base;
        out.height = std::max(out.height, d2[size_t(i)]);
    }
    return out;
}

} // namespace tdk
