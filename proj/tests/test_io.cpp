#include "doctest.h"

#include <string>
#include <vector>

#include "json.hpp"
#include "support/generators.hpp"
#include "tdkernel/io.hpp"
#include "tdkernel/kernel.hpp"

using namespace tdk;

TEST_CASE("parsing the documented examples") {
    SUBCASE("two-vertex annotated instance") {
        ParsedInstance p = parse_instance("p atdis 2 1 1\nv 0 X\nv 1 R\ne 0 1");
        CHECK(p.kind == ParsedInstance::Kind::atdis);
        REQUIRE(p.annotated.has_value());
        CHECK(p.annotated->x().ids() == std::vector<int>{0});
        CHECK(p.annotated->r().ids() == std::vector<int>{1});
        CHECK(p.annotated->graph().has_edge(0, 1));
        CHECK(p.annotated->k() == 1);
        CHECK(p.annotated->c() == 1);
        CHECK(p.warnings.empty());
    }
    SUBCASE("triangle as a plain graph") {
        ParsedInstance p = parse_instance("p graph 3 0 1\ne 0 1\ne 1 2\ne 0 2");
        CHECK(p.kind == ParsedInstance::Kind::graph);
        CHECK_FALSE(p.annotated.has_value());
        CHECK(p.graph.vertex_count() == 3);
        CHECK(p.graph.edge_count() == 3);
        CHECK(p.c == 0);
        CHECK(p.k == 1);
    }
    SUBCASE("malformed edge line reports its line number") {
        try {
            parse_instance("p graph 3 0 1\ne 0 1\ne 1\ne 0 2");
            FAIL("expected a parse error");
        } catch (const parse_error& e) {
            CHECK(e.line == 3);
        }
    }
}

TEST_CASE("parser conveniences") {
    // comments and blank lines are skipped; unlisted vertices default to R
    ParsedInstance p = parse_instance(
        "c a comment\n\np atdis 3 1 -2\nc another\nv 0 X\ne 0 1\ne 0 2\n");
    CHECK(p.k == -2); // budgets may go negative mid-pipeline
    CHECK(p.annotated->x().ids() == std::vector<int>{0});
    CHECK(p.annotated->r().size() == 2);

    // a graph-kind x line is kept as the modulator certificate
    ParsedInstance q = parse_instance("p graph 3 1 1\ne 0 1\nx 0 2\n");
    REQUIRE(q.modulator_cert.has_value());
    CHECK(q.modulator_cert->ids() == std::vector<int>{0, 2});

    // an atdis x line must agree with the roles, then adds nothing
    ParsedInstance r = parse_instance("p atdis 2 1 0\nv 0 X\nx 0\n");
    CHECK_FALSE(r.modulator_cert.has_value());
}

TEST_CASE("modulator-internal edges become hyperedges with a warning") {
    ParsedInstance p = parse_instance("p atdis 3 1 1\nv 0 X\nv 1 X\ne 0 1\ne 1 2\n");
    REQUIRE(p.annotated.has_value());
    CHECK_FALSE(p.annotated->graph().has_edge(0, 1));
    CHECK(p.annotated->graph().has_edge(1, 2));
    REQUIRE(p.annotated->hyperedges().size() == 1);
    CHECK(p.annotated->hyperedges()[0].ids() == std::vector<int>{0, 1});
    CHECK(p.warnings.size() == 1);
}

TEST_CASE("parse errors carry the offending line") {
    auto line_of = [](const std::string& text) {
        try {
            parse_instance(text);
        } catch (const parse_error& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("p graph 2 0 0\np graph 2 0 0\n") == 2);       // duplicate p
    CHECK(line_of("e 0 1\n") == 1);                              // body before p
    CHECK(line_of("c only comments\n") == 2);                    // missing p
    CHECK(line_of("p widget 2 0 0\n") == 1);                     // unknown kind
    CHECK(line_of("p graph -1 0 0\n") == 1);                     // negative n
    CHECK(line_of("p graph 2 -1 0\n") == 1);                     // negative c
    CHECK(line_of("p graph two 0 0\n") == 1);                    // non-numeric n
    CHECK(line_of("p graph 2 0 0\nq 1\n") == 2);                 // unknown line type
    CHECK(line_of("p graph 2 0 0\nv 0 X\n") == 2);               // v outside atdis
    CHECK(line_of("p graph 2 0 0\nh 0\n") == 2);                 // h outside atdis
    CHECK(line_of("p graph 2 0 0\ne 0 2\n") == 2);               // id out of range
    CHECK(line_of("p graph 2 0 0\ne 0 0\n") == 2);               // self-loop
    CHECK(line_of("p graph 2 0 0\ne 0 1\ne 1 0\n") == 3);        // duplicate edge
    CHECK(line_of("p atdis 2 1 0\nv 0 X\nv 0 X\n") == 3);        // duplicate v
    CHECK(line_of("p atdis 2 1 0\nv 0 Q\n") == 2);               // bad role
    CHECK(line_of("p atdis 2 1 0\nh\n") == 2);                   // empty hyperedge
    CHECK(line_of("p graph 2 0 0\nx 0\nx 1\n") == 3);            // duplicate x

    // invariant violations name the offence instead of a line
    CHECK_THROWS_AS(parse_instance("p atdis 2 1 0\nv 0 X\nh 1\n"), invariant_error);
    CHECK_THROWS_AS(parse_instance("p atdis 2 1 0\nv 0 X\nx 1\n"), invariant_error);
    // atdis remainder must respect the declared level
    CHECK_THROWS_AS(parse_instance("p atdis 2 0 0\ne 0 1\n"), invariant_error);
}

TEST_CASE("serialization is canonical") {
    CHECK(serialize_graph(Graph(0), 0, 0) == "p graph 0 0 0\n");

    Graph g(3);
    g.add_edge(2, 0);
    g.add_edge(1, 0);
    CHECK(serialize_graph(g, 1, 2) == "p graph 3 1 2\ne 0 1\ne 0 2\n");

    // hyperedges come out sorted lexicographically regardless of input order
    AnnotatedInstance inst = AnnotatedInstance::make(
        Graph(3), VertexSet::range(3),
        {VertexSet(std::vector<int>{1, 2}), VertexSet(std::vector<int>{0, 2})}, 1, 0);
    CHECK(serialize_annotated(inst) ==
          "p atdis 3 0 1\nv 0 X\nv 1 X\nv 2 X\nh 0 2\nh 1 2\n");
}

TEST_CASE("parse and serialize round-trip") {
    std::mt19937 rng(801);
    int done = 0;
    for (int trial = 0; trial < 250; ++trial) {
        ParsedInstance p;
        p.kind = ParsedInstance::Kind::graph;
        p.graph = gens::random_graph(rng, gens::pick(rng, 0, 9), 0.4);
        p.c = gens::pick(rng, 0, 3);
        p.k = gens::pick(rng, -2, 9);
        if (gens::chance(rng, 0.5)) {
            std::vector<int> xs;
            for (int v = 0; v < p.graph.vertex_count(); ++v)
                if (gens::chance(rng, 0.3)) xs.push_back(v);
            p.modulator_cert = VertexSet(xs);
        }
        std::string s1 = serialize_instance(p);
        ParsedInstance q = parse_instance(s1);
        CHECK(q == p);
        CHECK(serialize_instance(q) == s1);
        ++done;
    }
    for (int trial = 0; trial < 250; ++trial) {
        AnnotatedInstance inst = gens::random_annotated(rng, 4, 5, 2);
        ParsedInstance p;
        p.kind = ParsedInstance::Kind::atdis;
        p.annotated = inst;
        p.graph = inst.graph();
        p.c = inst.c();
        p.k = inst.k();
        std::string s1 = serialize_instance(p);
        ParsedInstance q = parse_instance(s1);
        CHECK(q == p);
        CHECK(serialize_instance(q) == s1);
        ++done;
    }
    CHECK(done == 500);
}

TEST_CASE("cnf parsing") {
    CnfFormula f = parse_cnf("c header\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n");
    CHECK(f.n_vars == 3);
    REQUIRE(f.clause_count() == 2);
    CHECK(f.clauses[0] == std::array<int, 3>{1, -2, 3});
    CHECK(f.clauses[1] == std::array<int, 3>{-1, 2, -3});

    CHECK_THROWS_AS(parse_cnf("1 2 3 0\n"), parse_error);               // body before p
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 2 0\n"), parse_error);      // two literals
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 2 3 4 0\n"), parse_error);  // four literals
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 0 3 0\n"), parse_error);    // zero literal
    CHECK_THROWS_AS(parse_cnf("p cnf 3 1\n1 2 4 0\n"), parse_error);    // out of range
    CHECK_THROWS_AS(parse_cnf("p cnf 3 2\n1 2 3 0\n"), parse_error);    // count mismatch
    CHECK_THROWS_AS(parse_cnf("p cnf 1 0\np cnf 1 0\n"), parse_error);  // duplicate p
    CHECK_THROWS_AS(parse_cnf(""), parse_error);                        // missing p
}

TEST_CASE("pipeline reports") {
    SUBCASE("trivial input yields zero rule counts") {
        PipelineResult r = full_pipeline(Graph(0), 0, 1, std::nullopt);
        std::string text = emit_report(0, 0, 0, 1, r);
        CHECK(report_schema_error(text) == std::nullopt);
        auto j = nlohmann::json::parse(text);
        CHECK(j["schema_version"] == 1);
        CHECK(j["input"]["vertices"] == 0);
        for (const auto& level : j["levels"]) {
            CHECK(level["rule1"] == 0);
            CHECK(level["rule2"] == 0);
            CHECK(level["rule3"] == 0);
        }
        CHECK(j.contains("wall_ms") == false);
    }
    SUBCASE("component deletions account for the budget drop") {
        // empty modulator: the only applicable rule deletes whole components,
        // paying alpha for each, so k_final = k - alpha(G)
        Graph p3(3, {{0, 1}, {1, 2}});
        PipelineResult r = full_pipeline(p3, 5, 2, VertexSet());
        std::string text = emit_report(3, 2, 5, 2, r);
        CHECK(report_schema_error(text) == std::nullopt);
        auto j = nlohmann::json::parse(text);
        CHECK(j["k_initial"] == 5);
        CHECK(j["k_final"] == 3); // alpha(P3) = 2
        int r1 = 0, r2 = 0, r3 = 0;
        for (const auto& level : j["levels"]) {
            r1 += level["rule1"].get<int>();
            r2 += level["rule2"].get<int>();
            r3 += level["rule3"].get<int>();
        }
        CHECK(r1 == 0);
        CHECK(r2 == 0);
        CHECK(r3 == 1);
        CHECK(j["final"]["k"] == 3);
        CHECK(j["plain"]["k"] == 3);
    }
    SUBCASE("timing appears only when requested") {
        PipelineResult r = full_pipeline(Graph(1), 1, 1, std::nullopt);
        ReportOptions opts;
        opts.include_timing = true;
        opts.wall_ms = 12.5;
        auto j = nlohmann::json::parse(emit_report(1, 0, 1, 1, r, opts));
        CHECK(j["wall_ms"] == 12.5);
    }
    SUBCASE("reports are deterministic") {
        Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        PipelineResult a = full_pipeline(g, 2, 1, std::nullopt);
        PipelineResult b = full_pipeline(g, 2, 1, std::nullopt);
        CHECK(emit_report(4, 4, 2, 1, a) == emit_report(4, 4, 2, 1, b));
    }
}

TEST_CASE("report schema validation") {
    PipelineResult r = full_pipeline(Graph(2, {{0, 1}}), 1, 1, std::nullopt);
    std::string good = emit_report(2, 1, 1, 1, r);
    CHECK(report_schema_error(good) == std::nullopt);

    CHECK(report_schema_error("{").has_value());
    CHECK(report_schema_error("{}") == std::string("missing key: schema_version"));
    CHECK(report_schema_error("{\"schema_version\": 2}") ==
          std::string("unsupported schema_version"));
    CHECK(report_schema_error("{\"schema_version\": \"one\"}") ==
          std::string("wrong type for key: schema_version"));

    auto j = nlohmann::json::parse(good);
    j.erase("plain");
    CHECK(report_schema_error(j.dump()) == std::string("missing key: plain"));

    j = nlohmann::json::parse(good);
    j["levels"] = 7;
    CHECK(report_schema_error(j.dump()) == std::string("wrong type for key: levels"));

    j = nlohmann::json::parse(good);
    if (!j["levels"].empty()) {
        j["levels"][0].erase("bound_ok");
        CHECK(report_schema_error(j.dump()) == std::string("missing key: bound_ok"));
    }
}
