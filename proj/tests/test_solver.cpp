#include "doctest.h"

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "tdkernel/reductions.hpp"
#include "tdkernel/solver.hpp"
#include "tdkernel/treedepth.hpp"

using namespace tdk;

namespace {

bool independent(const Graph& g, const VertexSet& s) {
    for (int u : s)
        for (int v : s)
            if (u < v && g.has_edge(u, v)) return false;
    return true;
}

Graph path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

} // namespace

TEST_CASE("alpha on fixed shapes with valid witnesses") {
    CHECK(alpha_exact(Graph(0)).value == 0);
    CHECK(alpha_exact(Graph(6)).value == 6);

    AlphaResult lb = alpha_exact(lower_bound_family(1).g);
    CHECK(lb.value == 4);

    Graph c5(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    AlphaResult r = alpha_exact(c5);
    CHECK(r.value == 2);
    CHECK(r.witness.size() == 2);
    CHECK(independent(c5, r.witness));
}

TEST_CASE("both alpha engines match exhaustive enumeration") {
    std::mt19937 rng(505);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = gens::random_graph(rng, gens::pick(rng, 0, 12), 0.25);
        int want = oracles::alpha(g);

        AlphaResult bnb = alpha_exact(g, {}, AlphaEngine::branch_and_bound);
        CHECK(bnb.value == want);
        CHECK(bnb.witness.size() == want);
        CHECK(independent(g, bnb.witness));

        AlphaResult dp = alpha_exact(g, {}, AlphaEngine::treedepth_dp);
        CHECK(dp.value == want);
        CHECK(dp.witness.size() == want);
        CHECK(independent(g, dp.witness));
    }
}

TEST_CASE("decomposition DP accepts any valid certificate, not just optimal ones") {
    std::mt19937 rng(506);
    for (int trial = 0; trial < 50; ++trial) {
        int n = gens::pick(rng, 1, 9);
        Graph g = gens::random_graph(rng, n, 0.3);
        // worst valid decomposition: one chain over all vertices in random order
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        TdDecomposition chain;
        chain.parent.assign(size_t(n), -1);
        for (int i = 1; i < n; ++i) chain.parent[size_t(order[i])] = order[i - 1];
        chain.roots = {order[0]};
        chain.height = n;
        REQUIRE(verify_decomposition(g, chain));
        AlphaResult r = alpha_on_decomposition(g, chain);
        CHECK(r.value == oracles::alpha(g));
        CHECK(independent(g, r.witness));
    }
}

TEST_CASE("annotated alpha on fixed shapes") {
    SUBCASE("no hyperedges, empty remainder: everything fits") {
        auto inst = AnnotatedInstance::make(Graph(3), VertexSet::range(3), {}, 0, 0);
        CHECK(alpha_annotated(inst).value == 3);
    }
    SUBCASE("single full hyperedge forbids only the whole set") {
        auto inst =
            AnnotatedInstance::make(Graph(3), VertexSet::range(3), {VertexSet::range(3)}, 0, 0);
        AlphaResult r = alpha_annotated(inst);
        CHECK(r.value == 2);
    }
    SUBCASE("star with modulator center") {
        Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        auto inst =
            AnnotatedInstance::make(std::move(g), VertexSet(std::vector<int>{0}), {}, 0, 1);
        CHECK(alpha_annotated(inst).value == 4);
    }
}

TEST_CASE("annotated alpha matches exhaustive enumeration on random instances") {
    std::mt19937 rng(507);
    for (int trial = 0; trial < 150; ++trial) {
        auto inst = gens::random_annotated(rng, 5, 8, gens::pick(rng, 1, 3));
        AlphaResult r = alpha_annotated(inst);
        CHECK(r.value == oracles::alpha_annotated(inst));
        // witness respects plain edges and hyperedges
        CHECK(independent(inst.graph(), r.witness));
        for (const VertexSet& h : inst.hyperedges()) CHECK_FALSE(h.is_subset_of(r.witness));
        CHECK(r.witness.size() == r.value);
    }
}

TEST_CASE("conf on the lower-bound family, t = 1") {
    auto [g, y] = lower_bound_family(1);
    VertexSet all = VertexSet::range(g.vertex_count());
    CHECK(conf_vertices(g, all, VertexSet{}) == 0);
    CHECK(conf_vertices(g, all, y) == 1);
    for (int apex : y)
        CHECK(conf_vertices(g, all, VertexSet(std::vector<int>{apex})) == 0);
}

TEST_CASE("conf basics and bounds on random pairs") {
    std::mt19937 rng(508);
    for (int trial = 0; trial < 150; ++trial) {
        Graph g = gens::random_graph(rng, gens::pick(rng, 1, 10), 0.3);
        int n = g.vertex_count();
        std::vector<int> rp, yv;
        for (int v = 0; v < n; ++v)
            if (gens::chance(rng, 0.7)) rp.push_back(v);
        VertexSet rprime(rp);
        for (int v : rprime)
            if (gens::chance(rng, 0.4)) yv.push_back(v);
        VertexSet y(yv);

        int got = conf_vertices(g, rprime, y);
        CHECK(got == oracles::conf(g, rprime, y));
        CHECK(got >= 0);
        CHECK(got <= oracles::alpha(induced_subgraph(g, rprime).graph));
    }
}

TEST_CASE("conf is monotone along subset chains") {
    std::mt19937 rng(509);
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = gens::random_graph(rng, gens::pick(rng, 2, 10), 0.3);
        VertexSet rprime = VertexSet::range(g.vertex_count());
        std::vector<int> shuffled(rprime.ids());
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        std::vector<int> partial;
        int prev = 0;
        for (int v : shuffled) {
            partial.push_back(v);
            int cur = conf_vertices(g, rprime, VertexSet(partial));
            CHECK(cur >= prev);
            prev = cur;
        }
    }
}

TEST_CASE("zero conf means some maximum independent set avoids the set") {
    std::mt19937 rng(510);
    for (int trial = 0; trial < 80; ++trial) {
        Graph g = gens::random_graph(rng, gens::pick(rng, 1, 10), 0.3);
        VertexSet rprime = VertexSet::range(g.vertex_count());
        std::vector<int> yv;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (gens::chance(rng, 0.3)) yv.push_back(v);
        VertexSet y(yv);
        bool zero = conf_vertices(g, rprime, y) == 0;
        // extract a maximum set of R' \ Y and lift it back to the full graph
        auto sub = induced_subgraph(g, rprime.set_minus(y));
        AlphaResult avoiding = alpha_exact(sub.graph);
        std::vector<int> lifted;
        for (int v : avoiding.witness) lifted.push_back(sub.to_parent[size_t(v)]);
        VertexSet wit(lifted);
        CHECK(independent(g, wit));
        CHECK(wit.set_intersect(y).empty());
        CHECK(zero == (wit.size() == alpha_exact(g).value));
    }
}

TEST_CASE("chunk conf equals vertex conf over the trace neighborhood") {
    std::mt19937 rng(511);
    int checked = 0;
    for (int trial = 0; trial < 250; ++trial) {
        auto inst = gens::random_annotated(rng, 4, 8, gens::pick(rng, 1, 2));
        if (inst.x().empty() || inst.r().empty()) continue;
        std::vector<int> xp;
        for (int v : inst.x())
            if (gens::chance(rng, 0.5)) xp.push_back(v);
        if (xp.empty()) xp.push_back(inst.x()[0]);
        VertexSet xprime(xp);
        VertexSet rprime = inst.r();

        std::vector<int> trace;
        for (int v : xprime)
            for (int w : inst.graph().neighbors(v))
                if (rprime.contains(w)) trace.push_back(w);
        int via_chunk = conf_chunk(inst, rprime, xprime);
        CHECK(via_chunk == conf_vertices(inst.graph(), rprime, VertexSet(trace)));
        ++checked;
    }
    CHECK(checked >= 100);
}

TEST_CASE("chunk conf fixed examples") {
    Graph g(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto inst = AnnotatedInstance::make(std::move(g), VertexSet(std::vector<int>{0}), {}, 0, 1);
    CHECK(conf_chunk(inst, inst.r(), inst.x()) == 4);

    Graph h(3, {{1, 2}});
    auto inst2 =
        AnnotatedInstance::make(std::move(h), VertexSet(std::vector<int>{0}), {}, 0, 2);
    CHECK(conf_chunk(inst2, inst2.r(), inst2.x()) == 0); // no neighbors in R
}

TEST_CASE("gamma on fixed shapes") {
    Graph k3(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(gamma_exact(k3, 3) == 1);
    CHECK(gamma_exact(Graph(0), 0) == 0);
    CHECK(gamma_exact(path(5), 5) == 2);
    CHECK_FALSE(gamma_exact(path(5), 1).has_value());
}

TEST_CASE("gamma matches exhaustive enumeration with and without tight caps") {
    std::mt19937 rng(512);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = gens::random_graph(rng, gens::pick(rng, 1, 11), 0.25);
        int want = oracles::gamma(g);
        auto got = gamma_exact(g, g.vertex_count());
        REQUIRE(got.has_value());
        CHECK(*got == want);
        CHECK(gamma_exact(g, want) == want);
        if (want > 0) CHECK_FALSE(gamma_exact(g, want - 1).has_value());
    }
}

TEST_CASE("sat bruteforce") {
    CHECK(sat_bruteforce(CnfFormula(0, {})));
    CHECK(sat_bruteforce(CnfFormula(3, {})));
    CHECK_FALSE(sat_bruteforce(CnfFormula(1, {{{1, 1, 1}}, {{-1, -1, -1}}})));
    std::mt19937 rng(513);
    for (int trial = 0; trial < 100; ++trial) {
        CnfFormula f = gens::random_cnf(rng, 4, gens::pick(rng, 1, 8));
        CHECK(sat_bruteforce(f) == oracles::sat(f));
    }
}

TEST_CASE("solver node budget trips a resource error") {
    SolverLimits tiny;
    tiny.node_budget = 2;
    std::mt19937 rng(514);
    Graph g = gens::random_graph(rng, 14, 0.5);
    CHECK_THROWS_AS(alpha_exact(g, tiny), resource_limit_error);
}
