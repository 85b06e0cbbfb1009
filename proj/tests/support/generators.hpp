#pragma once

// Seeded random instance generators for the property and acceptance suites.
// Everything is driven by an explicit mt19937 so failures reproduce exactly.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "tdkernel/instance.hpp"
#include "tdkernel/treedepth.hpp"

namespace gens {

inline int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool chance(std::mt19937& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

inline tdk::Graph random_graph(std::mt19937& rng, int n, double p) {
    tdk::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (chance(rng, p)) g.add_edge(u, v);
    return g;
}

// Random graph with treedepth at most c, by rejection sampling at shrinking
// density. Always terminates: the edgeless graph has treedepth <= 1.
inline tdk::Graph random_bounded_td(std::mt19937& rng, int n, int c) {
    if (c <= 0 || n == 0) return tdk::Graph(n);
    double p = 0.4;
    for (;;) {
        tdk::Graph g = random_graph(rng, n, p);
        if (tdk::td_at_most(g, c)) return g;
        p *= 0.7;
    }
}

struct PlantedInstance {
    tdk::Graph g;
    tdk::VertexSet x; // planted modulator: td(g - x) <= c
    int k = 0;
    int c = 1;
};

// Graph with a known modulator: remainder of bounded treedepth, random
// X-R and X-X edges on top. k is drawn wide enough to cover yes and no
// instances on both sides of the threshold.
inline PlantedInstance planted(std::mt19937& rng, int max_n, int c) {
    PlantedInstance out;
    out.c = c;
    int n = pick(rng, 1, max_n);
    int xsize = pick(rng, 0, std::min(n, 5));
    out.g = tdk::Graph(n);
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[size_t(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<int> xs(perm.begin(), perm.begin() + xsize);
    std::vector<int> rs(perm.begin() + xsize, perm.end());
    out.x = tdk::VertexSet(xs);

    tdk::Graph rgraph = random_bounded_td(rng, n - xsize, c);
    for (auto [u, v] : rgraph.edges()) out.g.add_edge(rs[size_t(u)], rs[size_t(v)]);
    for (int xv : xs) {
        for (int rv : rs)
            if (chance(rng, 0.3)) out.g.add_edge(xv, rv);
    }
    for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = i + 1; j < xs.size(); ++j)
            if (chance(rng, 0.3)) out.g.add_edge(xs[i], xs[j]);
    out.k = pick(rng, 0, n);
    return out;
}

// Random annotated instance built directly (no X-X plain edges), with random
// hyperedges inside X. X-R density is high so the reduction rules fire often.
inline tdk::AnnotatedInstance random_annotated(std::mt19937& rng, int max_x, int max_r, int c,
                                               double xr_density = 0.5) {
    int xsize = pick(rng, 0, max_x);
    int rsize = pick(rng, 0, max_r);
    int n = xsize + rsize;
    tdk::Graph g(n);
    // X = ids 0..xsize-1, R = the rest
    tdk::Graph rgraph = random_bounded_td(rng, rsize, c);
    for (auto [u, v] : rgraph.edges()) g.add_edge(xsize + u, xsize + v);
    for (int xv = 0; xv < xsize; ++xv)
        for (int rv = xsize; rv < n; ++rv)
            if (chance(rng, xr_density)) g.add_edge(xv, rv);
    std::vector<tdk::VertexSet> hyper;
    int hcount = xsize == 0 ? 0 : pick(rng, 0, 2);
    for (int i = 0; i < hcount; ++i) {
        std::vector<int> h;
        for (int xv = 0; xv < xsize; ++xv)
            if (chance(rng, 0.5)) h.push_back(xv);
        if (!h.empty()) hyper.emplace_back(h);
    }
    int k = pick(rng, 0, n);
    return tdk::AnnotatedInstance::make(std::move(g), tdk::VertexSet::range(xsize),
                                        std::move(hyper), k, c);
}

// Annotated instance with empty remainder: |X| = n vertices, m random
// hyperedges.
inline tdk::AnnotatedInstance random_rfree(std::mt19937& rng, int n, int m, int k) {
    std::vector<tdk::VertexSet> hyper;
    for (int i = 0; i < m && n > 0; ++i) {
        std::vector<int> h;
        for (int v = 0; v < n; ++v)
            if (chance(rng, 0.5)) h.push_back(v);
        if (h.empty()) h.push_back(pick(rng, 0, n - 1));
        hyper.emplace_back(h);
    }
    return tdk::AnnotatedInstance::make(tdk::Graph(n), tdk::VertexSet::range(n),
                                        std::move(hyper), k, 0);
}

inline tdk::CnfFormula random_cnf(std::mt19937& rng, int n_vars, int n_clauses) {
    std::vector<std::array<int, 3>> clauses;
    for (int i = 0; i < n_clauses; ++i) {
        std::array<int, 3> cl;
        for (int j = 0; j < 3; ++j) {
            int v = pick(rng, 1, n_vars);
            cl[size_t(j)] = chance(rng, 0.5) ? v : -v;
        }
        clauses.push_back(cl);
    }
    return tdk::CnfFormula(n_vars, std::move(clauses));
}

// Every labeled graph with n vertices and at most max_m edges, for exhaustive
// small-corpus sweeps.
inline std::vector<tdk::Graph> all_graphs(int n, int max_m) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    std::vector<tdk::Graph> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
        if (std::popcount(mask) > max_m) continue;
        tdk::Graph g(n);
        for (size_t i = 0; i < slots.size(); ++i)
            if ((mask >> i) & 1) g.add_edge(slots[i].first, slots[i].second);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace gens
