#pragma once

#include <map>
#include <optional>

#include "tdkernel/graph.hpp"

namespace tdk {

// Generator output: a graph, a budget, and named certificates (vertex sets are
// sorted; elimination orders keep their sequence). Certificates are validated
// lazily by the verify tooling / tests, not at construction.
struct LabeledInstance {
    Graph g;
    int k = 0;
    std::map<std::string, std::vector<int>> certificates;
};

// Replace every edge by a path with t inner vertices (t = 0 copies the graph).
// New vertices come after the originals, grouped by canonical edge order.
Graph subdivide(const Graph& g, int t);

// Dominating-set instance preserving gamma thresholds: (subdivide(g, 3c), k + m*c).
LabeledInstance ds_subdivision_instance(const Graph& g, int k, int c);

// VC -> DS on 2-degenerate graphs: subdivide thrice, k' = k + m; the vertex
// cover (supplied, or computed exactly) is a 3-treedepth modulator of the output.
LabeledInstance reduce_vc_ds_deg2(const Graph& g, int k,
                                  const std::optional<VertexSet>& vc = std::nullopt);

// OR-composition of equally-sized 3-SAT instances into one DS instance with
// budget n + t: gamma <= n + t iff some formula is satisfiable. Ships a
// modulator certificate whose removal leaves t disjoint stars and a
// 4-elimination order.
LabeledInstance cross_compose_3sat(const std::vector<CnfFormula>& formulas);

struct LowerBoundFamily {
    Graph g;
    VertexSet y; // the triangle apexes c_1..c_2t
};

// 2t linked triangles between two pendant vertices: alpha = 2t + 2,
// conf(Y) = 1 but conf(Y') = 0 for every proper subset Y' of Y.
LowerBoundFamily lower_bound_family(int t);

// Classic VC -> DS edge gadget (one new vertex per edge); requires no isolated
// vertices, keeps k unchanged.
LabeledInstance edge_gadget_vc_to_ds(const Graph& g, int k);

// Disjoint union with additive budgets.
LabeledInstance compose_disjoint_union(const std::vector<std::pair<Graph, int>>& parts);

// DS instance whose natural modulator leaves only spiders of logarithmic
// treedepth: a (3u)-subdivided bipartite graph U x W plus an apexed square grid
// on (3u+1)^4 vertices; k' = k + u*m + 1. bip_edges are (U-index, W-index).
LabeledInstance gen_logtd_instance(int u, int w, const std::vector<std::pair<int, int>>& bip_edges,
                                   int k);

} // namespace tdk
