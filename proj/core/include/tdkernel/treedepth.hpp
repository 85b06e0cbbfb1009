#pragma once

#include "tdkernel/graph.hpp"

namespace tdk {

// Rooted-forest certificate for treedepth. parent[v] = -1 marks a root; tree
// edges need not be graph edges, but every graph edge must connect an
// ancestor-descendant pair. height counts vertices on the longest root path.
struct TdDecomposition {
    std::vector<int> parent;
    std::vector<int> roots; // ascending
    int height = 0;
};

struct TdLimits {
    long long node_budget = 200'000'000;
};

struct TdResult {
    int value = 0;
    TdDecomposition decomp;
};

// Exact treedepth with an optimal-height certificate. Works per connected
// component; components above 64 vertices or searches past the node budget
// throw resource_limit_error.
TdResult td_exact(const Graph& g, const TdLimits& limits = {});

// Decision variant; cheaper than td_exact when the answer is no.
bool td_at_most(const Graph& g, int c, const TdLimits& limits = {});

// False on any malformed input (wrong sizes, cycles, wrong roots/height, or an
// edge whose endpoints are not ancestor-related). Never throws.
bool verify_decomposition(const Graph& g, const TdDecomposition& d);

// td(g - x) <= c, component-wise with early exit.
bool is_c_modulator(const Graph& g, const VertexSet& x, int c, const TdLimits& limits = {});

enum class ModulatorMode { exact, greedy };

struct Modulator {
    VertexSet x;
    int c = 0;
    ModulatorMode mode = ModulatorMode::greedy;
};

// exact: minimum-size modulator by branch-and-bound over obstruction components
// (every valid modulator hits any component of treedepth > c, so branching on
// that component's vertices is complete). greedy: repeatedly remove the
// smallest-id optimal root of the first offending component's exact
// decomposition; gives a valid, not necessarily minimum, modulator.
Modulator compute_modulator(const Graph& g, int c, ModulatorMode mode,
                            const TdLimits& limits = {});

} // namespace tdk
