#pragma once

#include "tdkernel/graph.hpp"
#include "tdkernel/treedepth.hpp"

namespace tdk {

// Treedepth certificate for one component of G[R]; decomp is indexed by
// positions in `vertices` (its induced-subgraph ids).
struct ComponentCert {
    VertexSet vertices;
    TdDecomposition decomp;
};

// Annotated instance: graph with modulator X, remainder R = V \ X of treedepth
// at most c, hyperedge constraints inside X, and budget k. A vertex set S is a
// solution iff |S| >= k, S spans no plain edge, and no hyperedge lies fully
// inside S. Plain edges never join two X vertices (wrap_plain_graph converts
// those to size-2 hyperedges). Immutable after construction; every invariant
// is checked in make(), which also computes the per-component treedepth
// certificates for R.
class AnnotatedInstance {
  public:
    AnnotatedInstance() = default;

    // input_ids maps current vertex ids to the ids of the originally supplied
    // instance (identity when empty); the kernelizer threads it through vertex
    // deletions so traces can speak about input vertices.
    static AnnotatedInstance make(Graph g, VertexSet x, std::vector<VertexSet> hyperedges,
                                  int k, int c, std::vector<int> input_ids = {},
                                  const TdLimits& limits = {});

    const Graph& graph() const { return g_; }
    const VertexSet& x() const { return x_; }
    const std::vector<VertexSet>& hyperedges() const { return hyperedges_; }
    int k() const { return k_; }
    int c() const { return c_; }
    VertexSet r() const { return VertexSet::range(g_.vertex_count()).set_minus(x_); }
    const std::vector<ComponentCert>& r_components() const { return r_components_; }

    const std::vector<int>& input_ids() const { return input_ids_; }
    int input_id(int v) const { return input_ids_[size_t(v)]; }

    // Structural equality; certificates and provenance ids are derived data.
    bool operator==(const AnnotatedInstance& o) const {
        return g_ == o.g_ && x_ == o.x_ && hyperedges_ == o.hyperedges_ && k_ == o.k_ &&
               c_ == o.c_;
    }

  private:
    Graph g_;
    VertexSet x_;
    std::vector<VertexSet> hyperedges_;
    int k_ = 0;
    int c_ = 0;
    std::vector<int> input_ids_;
    std::vector<ComponentCert> r_components_;
};

struct WrapResult {
    AnnotatedInstance instance;
    int converted_edges = 0; // X-X edges turned into size-2 hyperedges
};

// Builds the annotated form of a plain graph plus modulator: X-X edges become
// hyperedges, everything else is checked by AnnotatedInstance::make.
WrapResult wrap_plain_graph(const Graph& g, const VertexSet& x, int k, int c,
                            const TdLimits& limits = {});

// Decomposition of the subgraph induced by `keep` (ids = ascending positions in
// keep), obtained by re-routing parents to the nearest kept ancestor. Valid for
// any induced subgraph of the decomposition's graph, with height <= the input's.
TdDecomposition restrict_decomposition(const TdDecomposition& d, const VertexSet& keep);

} // namespace tdk
