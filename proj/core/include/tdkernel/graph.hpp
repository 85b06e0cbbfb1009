#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tdkernel/errors.hpp"

namespace tdk {

// Sorted, duplicate-free set of vertex ids. Validity against a host graph is
// checked where the set is used, not here.
class VertexSet {
  public:
    VertexSet() = default;
    explicit VertexSet(std::vector<int> ids);

    static VertexSet range(int n); // {0, 1, ..., n-1}

    bool contains(int v) const;
    bool is_subset_of(const VertexSet& o) const;
    VertexSet set_union(const VertexSet& o) const;
    VertexSet set_minus(const VertexSet& o) const;
    VertexSet set_intersect(const VertexSet& o) const;

    int size() const { return int(ids_.size()); }
    bool empty() const { return ids_.empty(); }
    int operator[](int i) const { return ids_[size_t(i)]; }
    const std::vector<int>& ids() const { return ids_; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const VertexSet&) const = default;
    // Lexicographic on the sorted id sequence.
    bool operator<(const VertexSet& o) const { return ids_ < o.ids_; }

  private:
    std::vector<int> ids_;
};

// Simple undirected graph over dense vertex ids 0..n-1. Edges live in canonical
// (min,max) form with set semantics: inserting a duplicate or a loop throws, so
// parallel-edge bugs surface at construction time. Optional per-vertex labels
// carry provenance through the gadget constructions and remaps.
class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return int(edges_.size()); }

    void add_edge(int u, int v);            // throws invariant_error on loop/dup/range
    bool add_edge_if_absent(int u, int v);  // false if already present
    bool has_edge(int u, int v) const;

    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return int(neighbors(v).size()); }
    // Sorted canonical edge list.
    const std::vector<std::pair<int, int>>& edges() const;

    const std::string& label(int v) const;
    void set_label(int v, std::string s);

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges() == o.edges(); }

  private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_; // sorted, unique, (min,max)
    std::vector<std::vector<int>> adj_;      // sorted neighbor lists
    std::vector<std::string> labels_;
    bool edges_sorted_ = true;
    void sort_edges();
};

// 3-SAT formula over variables 1..n_vars; each clause holds exactly three
// nonzero literals (+v / -v), duplicates inside a clause allowed.
struct CnfFormula {
    int n_vars = 0;
    std::vector<std::array<int, 3>> clauses;

    CnfFormula() = default;
    CnfFormula(int n_vars_, std::vector<std::array<int, 3>> clauses_);
    int clause_count() const { return int(clauses.size()); }
};

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;   // new id -> old id (ascending)
    std::vector<int> from_parent; // old id -> new id, -1 if dropped
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

struct DegeneracyOrder {
    int d = 0;
    std::vector<int> order; // removal order, smallest-id tie-break
};
DegeneracyOrder degeneracy(const Graph& g);

// True iff removing order[i] in sequence never removes a vertex with more than
// d neighbors among the not-yet-removed ones; order must list every vertex once.
bool verify_elimination_order(const Graph& g, const std::vector<int>& order, int d);

bool is_acyclic(const Graph& g);

struct UnionGraph {
    Graph graph;
    std::vector<int> offsets; // offsets[i] = id shift of part i
};
UnionGraph disjoint_union(const std::vector<Graph>& parts);

} // namespace tdk
