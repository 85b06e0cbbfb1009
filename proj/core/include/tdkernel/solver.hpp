#pragma once

#include <optional>

#include "tdkernel/graph.hpp"
#include "tdkernel/instance.hpp"

namespace tdk {

struct SolverLimits {
    long long node_budget = 50'000'000;
};

struct AlphaResult {
    int value = 0;
    VertexSet witness;
};

enum class AlphaEngine {
    branch_and_bound, // default: reductions + matching bound, any graph size
    treedepth_dp,     // computes an optimal decomposition first, then runs the DP
};

// Maximum independent set with witness. The two engines are independent exact
// routes and are cross-checked in the test suite.
AlphaResult alpha_exact(const Graph& g, const SolverLimits& limits = {},
                        AlphaEngine engine = AlphaEngine::branch_and_bound);

// DP over a given treedepth decomposition, O*(2^height): state = the set of
// root-path ancestors already chosen.
AlphaResult alpha_on_decomposition(const Graph& g, const TdDecomposition& d);

// Exact annotated maximum: enumerates hyperedge-respecting subsets of X and
// adds the best independent set of R minus the chosen X-neighborhood (cached
// per neighborhood). Exponential in |X| only.
AlphaResult alpha_annotated(const AnnotatedInstance& inst, const SolverLimits& limits = {});

// conf over a vertex set: alpha(G[rprime]) - alpha(G[rprime \ y]); y must be a
// subset of rprime. Zero means rprime can give up y at no cost.
int conf_vertices(const Graph& g, const VertexSet& rprime, const VertexSet& y,
                  const SolverLimits& limits = {});

// conf of a modulator subset against rprime: same quantity with
// y = N(xprime) ∩ rprime; xprime must lie in X and rprime in R.
int conf_chunk(const AnnotatedInstance& inst, const VertexSet& rprime, const VertexSet& xprime,
               const SolverLimits& limits = {});

// Minimum dominating set size, or nullopt if it exceeds kmax. Exact within the
// cap; graphs above 64 vertices throw resource_limit_error.
std::optional<int> gamma_exact(const Graph& g, int kmax, const SolverLimits& limits = {});

// Satisfiability by assignment enumeration; formulas above 30 variables throw.
bool sat_bruteforce(const CnfFormula& f);

} // namespace tdk
