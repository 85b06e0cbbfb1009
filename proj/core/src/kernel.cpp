#include "tdkernel/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <climits>

namespace tdk {
namespace {

long long sat_add(long long a, long long b) {
    if (a > LLONG_MAX - b) return LLONG_MAX;
    return a + b;
}

long long sat_mul(long long a, long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > LLONG_MAX / b) return LLONG_MAX;
    return a * b;
}

long long sat_binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) {
        r = sat_mul(r, n - k + i);
        if (r == LLONG_MAX) return LLONG_MAX;
        r /= i;
    }
    return r;
}

std::vector<int> to_input_ids(const AnnotatedInstance& inst, const VertexSet& s) {
    std::vector<int> out;
    for (int v : s) out.push_back(inst.input_id(v));
    return out;
}

// Rebuild without `drop`, shrinking hyperedges past the dropped vertices and
// forgetting ones that become empty. Composes input ids; k shifts by k_delta.
AnnotatedInstance remove_vertices(const AnnotatedInstance& inst, const VertexSet& drop,
                                  int k_delta) {
    VertexSet keep = VertexSet::range(inst.graph().vertex_count()).set_minus(drop);
    InducedSubgraph sub = induced_subgraph(inst.graph(), keep);
    std::vector<int> xs;
    for (int v : inst.x())
        if (sub.from_parent[size_t(v)] != -1) xs.push_back(sub.from_parent[size_t(v)]);
    std::vector<VertexSet> hyper;
    for (const VertexSet& h : inst.hyperedges()) {
        std::vector<int> hv;
        for (int v : h)
            if (sub.from_parent[size_t(v)] != -1) hv.push_back(sub.from_parent[size_t(v)]);
        if (!hv.empty()) hyper.emplace_back(hv);
    }
    std::vector<int> ids;
    for (int v : keep) ids.push_back(inst.input_id(v));
    return AnnotatedInstance::make(sub.graph, VertexSet(xs), std::move(hyper),
                                   inst.k() + k_delta, inst.c(), std::move(ids));
}

} // namespace

void for_each_chunk(const AnnotatedInstance& inst,
                    const std::function<bool(const VertexSet&)>& cb) {
    const VertexSet& x = inst.x();
    int max_size = x.size();
    if (inst.c() < 31) max_size = std::min(max_size, 1 << inst.c());
    if (max_size == 0 || x.empty()) return;

    std::vector<int> prefix;
    bool stop = false;
    auto rec = [&](auto&& self, int start) -> void {
        for (int i = start; i < x.size() && !stop; ++i) {
            prefix.push_back(x[i]);
            VertexSet cand(prefix);
            bool blocked = false;
            for (const VertexSet& h : inst.hyperedges()) {
                // only hyperedges whose maximum is the new vertex can first
                // become contained here
                if (h.ids().back() == x[i] && h.is_subset_of(cand)) {
                    blocked = true;
                    break;
                }
            }
            if (!blocked) {
                if (!cb(cand)) {
                    stop = true;
                } else if (int(prefix.size()) < max_size) {
                    self(self, i + 1);
                }
            }
            prefix.pop_back();
        }
    };
    rec(rec, 0);
}

std::vector<VertexSet> enumerate_chunks(const AnnotatedInstance& inst) {
    std::vector<VertexSet> out;
    for_each_chunk(inst, [&](const VertexSet& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

int ConfCache::alpha(const AnnotatedInstance& inst, const ComponentCert& cert,
                     const VertexSet& sub) {
    std::vector<int> key;
    for (int v : sub) key.push_back(inst.input_id(v));
    std::sort(key.begin(), key.end());
    auto it = alpha_.find(key);
    if (it != alpha_.end()) return it->second;

    // positions of sub inside the component
    std::vector<int> local;
    for (int v : sub) {
        auto pos = std::lower_bound(cert.vertices.begin(), cert.vertices.end(), v);
        assert(pos != cert.vertices.end() && *pos == v);
        local.push_back(int(pos - cert.vertices.begin()));
    }
    InducedSubgraph comp = induced_subgraph(inst.graph(), cert.vertices);
    InducedSubgraph kept = induced_subgraph(comp.graph, VertexSet(local));
    TdDecomposition restricted = restrict_decomposition(cert.decomp, VertexSet(local));
    int value = alpha_on_decomposition(kept.graph, restricted).value;
    alpha_.emplace(std::move(key), value);
    return value;
}

int ConfCache::conf(const AnnotatedInstance& inst, const ComponentCert& cert,
                    const VertexSet& y) {
    assert(y.is_subset_of(cert.vertices));
    return alpha(inst, cert, cert.vertices) - alpha(inst, cert, cert.vertices.set_minus(y));
}

int ConfCache::conf_total(const AnnotatedInstance& inst, const VertexSet& xprime,
                          int stop_above) {
    int total = 0;
    for (const ComponentCert& cert : inst.r_components()) {
        std::vector<int> nbr;
        for (int v : xprime)
            for (int w : inst.graph().neighbors(v))
                if (cert.vertices.contains(w)) nbr.push_back(w);
        if (nbr.empty()) continue;
        total += conf(inst, cert, VertexSet(nbr));
        if (total > stop_above) return total; // conf is componentwise nonnegative
    }
    return total;
}

RuleOutcome rule1(const AnnotatedInstance& inst, ConfCache* cache) {
    ConfCache local;
    ConfCache& cc = cache ? *cache : local;
    for (int u : inst.x()) {
        if (cc.conf_total(inst, VertexSet({u}), inst.x().size()) > inst.x().size()) {
            RuleOutcome out;
            out.applied = true;
            out.event.level = inst.c();
            out.event.rule = "rule1";
            out.event.vertices = {inst.input_id(u)};
            out.instance = remove_vertices(inst, VertexSet({u}), 0);
            return out;
        }
    }
    return {inst, false, {}};
}

RuleOutcome rule2(const AnnotatedInstance& inst, ConfCache* cache) {
    ConfCache local;
    ConfCache& cc = cache ? *cache : local;
    std::optional<VertexSet> found;
    for_each_chunk(inst, [&](const VertexSet& chunk) {
        if (cc.conf_total(inst, chunk, inst.x().size()) > inst.x().size()) {
            found = chunk;
            return false;
        }
        return true;
    });
    if (!found) return {inst, false, {}};
    RuleOutcome out;
    out.applied = true;
    out.event.level = inst.c();
    out.event.rule = "rule2";
    out.event.vertices = to_input_ids(inst, *found);
    out.event.hyperedges_added = {out.event.vertices};
    std::vector<VertexSet> hyper = inst.hyperedges();
    hyper.push_back(*found);
    out.instance = AnnotatedInstance::make(inst.graph(), inst.x(), std::move(hyper), inst.k(),
                                           inst.c(), inst.input_ids());
    return out;
}

RuleOutcome rule3(const AnnotatedInstance& inst, ConfCache* cache) {
    ConfCache local;
    ConfCache& cc = cache ? *cache : local;
    for (const ComponentCert& cert : inst.r_components()) {
        bool has_conflict = false;
        for_each_chunk(inst, [&](const VertexSet& chunk) {
            std::vector<int> nbr;
            for (int v : chunk)
                for (int w : inst.graph().neighbors(v))
                    if (cert.vertices.contains(w)) nbr.push_back(w);
            if (!nbr.empty() && cc.conf(inst, cert, VertexSet(nbr)) > 0) {
                has_conflict = true;
                return false;
            }
            return true;
        });
        if (!has_conflict) {
            int a = cc.alpha(inst, cert, cert.vertices);
            RuleOutcome out;
            out.applied = true;
            out.event.level = inst.c();
            out.event.rule = "rule3";
            out.event.vertices = to_input_ids(inst, cert.vertices);
            out.event.k_delta = -a;
            out.instance = remove_vertices(inst, cert.vertices, -a);
            return out;
        }
    }
    return {inst, false, {}};
}

AnnotatedInstance lift_roots(const AnnotatedInstance& inst, ConfCache* cache,
                             TraceEvent* event) {
    ConfCache local;
    ConfCache& cc = cache ? *cache : local;
    if (rule1(inst, &cc).applied || rule2(inst, &cc).applied || rule3(inst, &cc).applied)
        throw precondition_error("lift_roots: a reduction rule is still applicable");
    if (inst.r_components().empty()) return inst;

    std::vector<int> roots;
    for (const ComponentCert& cert : inst.r_components()) {
        assert(cert.decomp.roots.size() == 1); // components are connected
        roots.push_back(cert.vertices[cert.decomp.roots[0]]);
    }
    VertexSet root_set{roots};
    VertexSet new_x = inst.x().set_union(root_set);

    Graph g(inst.graph().vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) g.set_label(v, inst.graph().label(v));
    std::vector<VertexSet> hyper = inst.hyperedges();
    std::vector<std::vector<int>> added;
    for (auto [u, v] : inst.graph().edges()) {
        if (new_x.contains(u) && new_x.contains(v)) {
            // one endpoint is a fresh root, the other old X: roots of distinct
            // components are never adjacent
            hyper.emplace_back(std::vector<int>{u, v});
            added.push_back({inst.input_id(std::min(u, v)), inst.input_id(std::max(u, v))});
            std::sort(added.back().begin(), added.back().end());
        } else {
            g.add_edge(u, v);
        }
    }
    if (event) {
        event->level = inst.c();
        event->rule = "lift";
        event->vertices = to_input_ids(inst, root_set);
        std::sort(added.begin(), added.end());
        event->hyperedges_added = std::move(added);
        event->k_delta = 0;
    }
    return AnnotatedInstance::make(std::move(g), new_x, std::move(hyper), inst.k(),
                                   inst.c() - 1, inst.input_ids());
}

long long chunk_component_bound(int x_size, int c) {
    long long f = c < 62 ? (1LL << c) : LLONG_MAX;
    long long top = std::min<long long>(f, x_size);
    long long sum = 0;
    for (long long i = 1; i <= top; ++i) sum = sat_add(sum, sat_binom(x_size, int(i)));
    return sat_mul(x_size, sum);
}

KernelizeResult kernelize(const AnnotatedInstance& inst, const KernelObserver& observer) {
    KernelizeResult out;
    out.trace.initial_k = inst.k();
    ConfCache cache;
    AnnotatedInstance cur = inst;

    auto exhaust = [&](RuleOutcome (*rule)(const AnnotatedInstance&, ConfCache*)) {
        int n = 0;
        while (true) {
            RuleOutcome o = rule(cur, &cache);
            if (!o.applied) break;
            cur = std::move(o.instance);
            out.trace.events.push_back(o.event);
            if (observer) observer(cur, out.trace.events.back());
            ++n;
        }
        return n;
    };

    while (cur.c() > 0) {
        LevelStats ls;
        ls.level = cur.c();
        ls.rule1 = exhaust(&rule1);
        ls.rule2 = exhaust(&rule2);
        ls.rule3 = exhaust(&rule3);
        ls.x_size = cur.x().size();
        ls.h_size = int(cur.hyperedges().size());
        ls.components = int(cur.r_components().size());
        for (const VertexSet& h : cur.hyperedges()) ls.hyperedge_total += h.size();
        ls.component_bound = chunk_component_bound(ls.x_size, cur.c());
        ls.bound_ok = ls.components <= ls.component_bound;
        out.trace.levels.push_back(ls);
        if (cur.r_components().empty()) break;
        TraceEvent ev;
        cur = lift_roots(cur, &cache, &ev);
        out.trace.events.push_back(ev);
        if (observer) observer(cur, out.trace.events.back());
    }
    assert(cur.r_components().empty());
    out.trace.final_k = cur.k();
    out.instance = std::move(cur);
    return out;
}

PlainReduction annotated_to_plain(const AnnotatedInstance& inst) {
    if (!inst.r_components().empty())
        throw precondition_error("annotated_to_plain: remainder must be empty");
    int n = inst.graph().vertex_count();
    int m = int(inst.hyperedges().size());
    long long total = 3LL * n;
    for (const VertexSet& h : inst.hyperedges()) total += 1LL * h.size() * n;
    if (total > 2'000'000)
        throw resource_limit_error("annotated_to_plain: gadget would have " +
                                   std::to_string(total) + " vertices");

    PlainReduction out;
    out.graph = Graph(int(total));
    out.k = n + inst.k() + n * m;
    auto ya = [](int i) { return 3 * i; };
    auto yb = [](int i) { return 3 * i + 1; };
    auto z = [](int i) { return 3 * i + 2; };
    for (int i = 0; i < n; ++i) {
        std::string tag = std::to_string(inst.input_id(i));
        out.graph.set_label(ya(i), "ya:" + tag);
        out.graph.set_label(yb(i), "yb:" + tag);
        out.graph.set_label(z(i), "z:" + tag);
        out.graph.add_edge(z(i), ya(i));
        out.graph.add_edge(z(i), yb(i));
    }
    int offset = 3 * n;
    for (int hi = 0; hi < m; ++hi) {
        const VertexSet& h = inst.hyperedges()[hi];
        int parts = h.size();
        auto w = [&](int part, int j) { return offset + part * n + j; };
        for (int part = 0; part < parts; ++part)
            for (int j = 0; j < n; ++j)
                out.graph.set_label(w(part, j), "w:" + std::to_string(hi) + ":" +
                                                    std::to_string(part) + ":" +
                                                    std::to_string(j));
        for (int p1 = 0; p1 < parts; ++p1)
            for (int p2 = p1 + 1; p2 < parts; ++p2)
                for (int j1 = 0; j1 < n; ++j1)
                    for (int j2 = 0; j2 < n; ++j2) out.graph.add_edge(w(p1, j1), w(p2, j2));
        for (int part = 0; part < parts; ++part) {
            int v = h[part];
            for (int j = 0; j < n; ++j) {
                out.graph.add_edge(w(part, j), ya(v));
                out.graph.add_edge(w(part, j), yb(v));
            }
        }
        offset += parts * n;
    }
    return out;
}

PipelineResult full_pipeline(const Graph& g, int k, int c, const std::optional<VertexSet>& x,
                             const PipelineOptions& options) {
    PipelineResult out;
    if (x) {
        if (!is_c_modulator(g, *x, c, options.td_limits))
            throw invariant_error("full_pipeline: supplied set is not a valid modulator");
        out.modulator = *x;
        out.modulator_supplied = true;
    } else {
        out.modulator = compute_modulator(g, c, options.modulator_mode, options.td_limits).x;
    }
    WrapResult wrapped = wrap_plain_graph(g, out.modulator, k, c, options.td_limits);
    out.converted_xx_edges = wrapped.converted_edges;
    KernelizeResult ker = kernelize(wrapped.instance);
    out.trace = std::move(ker.trace);
    out.kernel_annotated = std::move(ker.instance);
    PlainReduction plain = annotated_to_plain(out.kernel_annotated);
    out.kernel_graph = std::move(plain.graph);
    out.kernel_k = plain.k;
    return out;
}

} // namespace tdk
