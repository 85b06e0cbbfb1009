#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tdkernel/kernel.hpp"

namespace tdk {

// Instance file:
//   c <comment>
//   p <graph|atdis> <n> <c> <k>      (exactly one, first significant line)
//   v <id> <X|R>                     (atdis only; unlisted vertices default to R)
//   e <u> <v>
//   h <v1> ... <vj>                  (atdis only, vertices must be in X)
//   x <v1> ...                       (optional modulator certificate, at most once)
// Budgets may be negative (kernelization can drive k below zero). Edges between
// two X vertices are converted to size-2 hyperedges with a warning.
struct ParsedInstance {
    enum class Kind { graph, atdis };
    Kind kind = Kind::graph;
    Graph graph; // plain graph; for atdis the annotated instance's graph
    std::optional<AnnotatedInstance> annotated;
    int c = 0;
    int k = 0;
    std::optional<VertexSet> modulator_cert; // graph kind only; atdis roles define X
    std::vector<std::string> warnings;

    bool operator==(const ParsedInstance& o) const {
        return kind == o.kind && graph == o.graph && annotated == o.annotated && c == o.c &&
               k == o.k && modulator_cert == o.modulator_cert;
    }
};

ParsedInstance parse_instance(std::istream& in);
ParsedInstance parse_instance(const std::string& text);

// Canonical text: sorted lines, no comments; parse(serialize(x)) == x and a
// second serialize round-trips byte-identically.
std::string serialize_instance(const ParsedInstance& inst);
std::string serialize_graph(const Graph& g, int c, int k,
                            const std::optional<VertexSet>& modulator = std::nullopt);
std::string serialize_annotated(const AnnotatedInstance& inst);

// DIMACS cnf with exactly three literals per clause.
CnfFormula parse_cnf(std::istream& in);
CnfFormula parse_cnf(const std::string& text);

struct ReportOptions {
    bool include_timing = false;
    double wall_ms = 0.0;
};

// JSON pipeline report (schema_version 1): input sizes, per-level rule counts
// and |X|/|H|/s snapshots with the component-bound check, final and plain
// kernel sizes, size-bound exponents, and optionally wall time.
std::string emit_report(int input_vertices, int input_edges, int input_k, int input_c,
                        const PipelineResult& result, const ReportOptions& options = {});

// nullopt if the text is a valid schema-1 report, else a description.
std::optional<std::string> report_schema_error(const std::string& json_text);

} // namespace tdk
