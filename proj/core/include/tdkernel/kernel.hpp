#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>

#include "tdkernel/solver.hpp"

namespace tdk {

// Streams the chunks of the instance -- nonempty subsets of X of size at most
// min(2^c, |X|) that contain no hyperedge -- in lexicographic order of their
// sorted id sequences ({0} < {0,1} < {0,2} < {1} < ...). Return false from the
// callback to stop early.
void for_each_chunk(const AnnotatedInstance& inst,
                    const std::function<bool(const VertexSet&)>& cb);
std::vector<VertexSet> enumerate_chunks(const AnnotatedInstance& inst);

// One reduction event. Vertex ids are input ids (the id space of the instance
// originally handed to kernelize), so traces survive the internal remaps.
struct TraceEvent {
    int level = 0;     // c at application time
    std::string rule;  // "rule1" | "rule2" | "rule3" | "lift"
    std::vector<int> vertices; // deleted vertex / chunk / component / lifted roots
    std::vector<std::vector<int>> hyperedges_added;
    int k_delta = 0;
};

// Snapshot taken after the level's rules are exhausted, before lifting.
struct LevelStats {
    int level = 0;
    int x_size = 0;
    int h_size = 0;
    int components = 0;          // s: surviving R-components
    long long hyperedge_total = 0;
    int rule1 = 0, rule2 = 0, rule3 = 0;
    long long component_bound = 0; // |X| * sum_{i=1..min(2^c,|X|)} C(|X|, i), saturated
    bool bound_ok = true;
};

struct KernelTrace {
    int initial_k = 0;
    int final_k = 0;
    std::vector<TraceEvent> events;
    std::vector<LevelStats> levels;
};

// Memoizes alpha of surviving R-vertex sets across rule applications and
// levels, keyed by input ids (sound: kernelization never changes the induced
// structure on surviving remainder vertices). Values come from the treedepth
// DP over the instance certificates.
class ConfCache {
  public:
    // alpha of the subgraph induced by sub (global ids within cert's component)
    int alpha(const AnnotatedInstance& inst, const ComponentCert& cert, const VertexSet& sub);
    // alpha(component) - alpha(component \ y); y must lie inside the component
    int conf(const AnnotatedInstance& inst, const ComponentCert& cert, const VertexSet& y);
    // conf of a modulator subset against all of R; stops early above `stop_above`
    int conf_total(const AnnotatedInstance& inst, const VertexSet& xprime, int stop_above);

  private:
    struct vec_hash {
        size_t operator()(const std::vector<int>& v) const {
            size_t h = 0x9e3779b97f4a7c15ULL;
            for (int x : v) h = (h ^ size_t(uint32_t(x))) * 0x100000001b3ULL;
            return h;
        }
    };
    std::unordered_map<std::vector<int>, int, vec_hash> alpha_;
};

struct RuleOutcome {
    AnnotatedInstance instance;
    bool applied = false;
    TraceEvent event;
};

// Rule 1: some u in X (smallest id first) has conf_R({u}) > |X|  ->  delete u,
// shrinking hyperedges that contain it and dropping ones that become empty.
RuleOutcome rule1(const AnnotatedInstance& inst, ConfCache* cache = nullptr);
// Rule 2: some chunk X' (lexicographically first) has conf_R(X') > |X|  ->
// record X' as a hyperedge.
RuleOutcome rule2(const AnnotatedInstance& inst, ConfCache* cache = nullptr);
// Rule 3: some component R' (smallest member first) has conf_{R'}(X') = 0 for
// every chunk  ->  delete R' and lower k by alpha(R'). Vacuously deletes every
// component once no chunks exist.
RuleOutcome rule3(const AnnotatedInstance& inst, ConfCache* cache = nullptr);

// Moves the root of every R-component's optimal decomposition into X, turning
// new X-X edges into hyperedges, and lowers c by one. Requires rules 1-3 to be
// inapplicable; returns the instance unchanged (same c) when R is already
// empty.
AnnotatedInstance lift_roots(const AnnotatedInstance& inst, ConfCache* cache = nullptr,
                             TraceEvent* event = nullptr);

struct KernelizeResult {
    AnnotatedInstance instance;
    KernelTrace trace;
};

using KernelObserver = std::function<void(const AnnotatedInstance&, const TraceEvent&)>;

// Per level: exhaust Rule 1, then Rule 2, then Rule 3, snapshot, lift roots,
// descend to c-1. Stops as soon as R is empty; the result always has R = {}.
KernelizeResult kernelize(const AnnotatedInstance& inst, const KernelObserver& observer = {});

struct PlainReduction {
    Graph graph;
    int k = 0;
};

// Hyperedge-removal gadget for R-free instances: one path y_a - z - y_b per
// vertex, one complete |H|-partite block per hyperedge H with each part tied to
// the gadget of its vertex; k' = n + k + n*|H-list|. Requires R = {}.
PlainReduction annotated_to_plain(const AnnotatedInstance& inst);

struct PipelineOptions {
    ModulatorMode modulator_mode = ModulatorMode::greedy;
    TdLimits td_limits;
};

struct PipelineResult {
    VertexSet modulator;
    bool modulator_supplied = false;
    int converted_xx_edges = 0;
    KernelTrace trace;
    AnnotatedInstance kernel_annotated; // R-free
    Graph kernel_graph;                 // plain IS instance
    int kernel_k = 0;
};

// modulator (given or computed) -> wrap -> kernelize -> annotated_to_plain.
PipelineResult full_pipeline(const Graph& g, int k, int c,
                             const std::optional<VertexSet>& x = std::nullopt,
                             const PipelineOptions& options = {});

// |X| * sum_{i=1..min(2^c,|X|)} C(|X|, i), saturating at LLONG_MAX.
long long chunk_component_bound(int x_size, int c);

} // namespace tdk
