#include "tdkernel/io.hpp"

#include <climits>
#include <sstream>

#include "json.hpp"

namespace tdk {
namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& t, int line, const std::string& what) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw parse_error(line, "expected " + what + ", got '" + t + "'");
    }
    if (used != t.size() || v < INT_MIN || v > INT_MAX)
        throw parse_error(line, "expected " + what + ", got '" + t + "'");
    return int(v);
}

} // namespace

ParsedInstance parse_instance(std::istream& in) {
    ParsedInstance out;
    bool have_header = false;
    int n = 0, lineno = 0;
    std::vector<char> role;            // 'X' or 'R'
    std::vector<bool> role_explicit;
    std::vector<std::pair<int, int>> plain_edges;
    std::vector<std::pair<std::vector<int>, int>> hyper_lines; // (vertices, line)
    std::optional<std::vector<int>> cert;
    std::string line;

    auto check_id = [&](int v, int ln) {
        if (v < 0 || v >= n)
            throw parse_error(ln, "vertex id " + std::to_string(v) + " out of range [0," +
                                      std::to_string(n) + ")");
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto ts = tokens(line);
        if (ts.empty() || ts[0] == "c") continue;
        if (ts[0] == "p") {
            if (have_header) throw parse_error(lineno, "duplicate p line");
            if (ts.size() != 5) throw parse_error(lineno, "p line needs: p <kind> <n> <c> <k>");
            if (ts[1] == "graph")
                out.kind = ParsedInstance::Kind::graph;
            else if (ts[1] == "atdis")
                out.kind = ParsedInstance::Kind::atdis;
            else
                throw parse_error(lineno, "unknown instance kind '" + ts[1] + "'");
            n = parse_int(ts[2], lineno, "vertex count");
            if (n < 0) throw parse_error(lineno, "negative vertex count");
            out.c = parse_int(ts[3], lineno, "level c");
            if (out.c < 0) throw parse_error(lineno, "negative level c");
            out.k = parse_int(ts[4], lineno, "budget k");
            role.assign(size_t(n), 'R');
            role_explicit.assign(size_t(n), false);
            have_header = true;
            continue;
        }
        if (!have_header) throw parse_error(lineno, "expected p line before '" + ts[0] + "'");
        if (ts[0] == "v") {
            if (out.kind != ParsedInstance::Kind::atdis)
                throw parse_error(lineno, "v lines are only valid in atdis instances");
            if (ts.size() != 3) throw parse_error(lineno, "v line needs: v <id> <X|R>");
            int v = parse_int(ts[1], lineno, "vertex id");
            check_id(v, lineno);
            if (role_explicit[size_t(v)])
                throw parse_error(lineno, "duplicate v line for vertex " + std::to_string(v));
            if (ts[2] != "X" && ts[2] != "R")
                throw parse_error(lineno, "vertex role must be X or R, got '" + ts[2] + "'");
            role[size_t(v)] = ts[2][0];
            role_explicit[size_t(v)] = true;
        } else if (ts[0] == "e") {
            if (ts.size() != 3) throw parse_error(lineno, "e line needs: e <u> <v>");
            int u = parse_int(ts[1], lineno, "vertex id");
            int v = parse_int(ts[2], lineno, "vertex id");
            check_id(u, lineno);
            check_id(v, lineno);
            if (u == v) throw parse_error(lineno, "self-loop at " + std::to_string(u));
            auto edge = std::minmax(u, v);
            for (auto [a, b] : plain_edges)
                if (a == edge.first && b == edge.second)
                    throw parse_error(lineno, "duplicate edge {" + std::to_string(u) + "," +
                                                  std::to_string(v) + "}");
            plain_edges.emplace_back(edge.first, edge.second);
        } else if (ts[0] == "h") {
            if (out.kind != ParsedInstance::Kind::atdis)
                throw parse_error(lineno, "h lines are only valid in atdis instances");
            if (ts.size() < 2) throw parse_error(lineno, "empty hyperedge");
            std::vector<int> hv;
            for (size_t i = 1; i < ts.size(); ++i) {
                int v = parse_int(ts[i], lineno, "vertex id");
                check_id(v, lineno);
                hv.push_back(v);
            }
            hyper_lines.emplace_back(std::move(hv), lineno);
        } else if (ts[0] == "x") {
            if (cert) throw parse_error(lineno, "duplicate x line");
            std::vector<int> xs;
            for (size_t i = 1; i < ts.size(); ++i) {
                int v = parse_int(ts[i], lineno, "vertex id");
                check_id(v, lineno);
                xs.push_back(v);
            }
            cert = std::move(xs);
        } else {
            throw parse_error(lineno, "unknown line type '" + ts[0] + "'");
        }
    }
    if (!have_header) throw parse_error(lineno + 1, "missing p line");

    if (out.kind == ParsedInstance::Kind::graph) {
        out.graph = Graph(n, plain_edges);
        if (cert) out.modulator_cert = VertexSet(*cert);
        return out;
    }

    std::vector<int> xs;
    for (int v = 0; v < n; ++v)
        if (role[size_t(v)] == 'X') xs.push_back(v);
    VertexSet x(xs);
    // for atdis the roles already define X; an x line is validated and dropped
    // so canonical serialization round-trips
    if (cert && VertexSet(*cert) != x)
        throw invariant_error("instance: x certificate line disagrees with the vertex roles");
    Graph g(n);
    std::vector<VertexSet> hyper;
    for (auto [u, v] : plain_edges) {
        if (x.contains(u) && x.contains(v)) {
            hyper.emplace_back(std::vector<int>{u, v});
            out.warnings.push_back("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                   "} joins two modulator vertices; stored as a hyperedge");
        } else {
            g.add_edge(u, v);
        }
    }
    for (auto& [hv, ln] : hyper_lines) {
        for (int v : hv)
            if (!x.contains(v))
                throw invariant_error("instance: hyperedge on line " + std::to_string(ln) +
                                      " references remainder vertex " + std::to_string(v));
        hyper.emplace_back(hv);
    }
    out.annotated = AnnotatedInstance::make(std::move(g), x, std::move(hyper), out.k, out.c);
    out.graph = out.annotated->graph();
    return out;
}

ParsedInstance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

std::string serialize_graph(const Graph& g, int c, int k,
                            const std::optional<VertexSet>& modulator) {
    std::ostringstream ss;
    ss << "p graph " << g.vertex_count() << " " << c << " " << k << "\n";
    for (auto [u, v] : g.edges()) ss << "e " << u << " " << v << "\n";
    if (modulator) {
        ss << "x";
        for (int v : *modulator) ss << " " << v;
        ss << "\n";
    }
    return ss.str();
}

std::string serialize_annotated(const AnnotatedInstance& inst) {
    std::ostringstream ss;
    ss << "p atdis " << inst.graph().vertex_count() << " " << inst.c() << " " << inst.k()
       << "\n";
    for (int v = 0; v < inst.graph().vertex_count(); ++v)
        ss << "v " << v << " " << (inst.x().contains(v) ? 'X' : 'R') << "\n";
    for (auto [u, v] : inst.graph().edges()) ss << "e " << u << " " << v << "\n";
    for (const VertexSet& h : inst.hyperedges()) {
        ss << "h";
        for (int v : h) ss << " " << v;
        ss << "\n";
    }
    return ss.str();
}

std::string serialize_instance(const ParsedInstance& inst) {
    if (inst.kind == ParsedInstance::Kind::atdis && inst.annotated)
        return serialize_annotated(*inst.annotated);
    return serialize_graph(inst.graph, inst.c, inst.k, inst.modulator_cert);
}

CnfFormula parse_cnf(std::istream& in) {
    std::string line;
    int lineno = 0, nvars = -1, nclauses = -1;
    std::vector<std::array<int, 3>> clauses;
    while (std::getline(in, line)) {
        ++lineno;
        auto ts = tokens(line);
        if (ts.empty() || ts[0] == "c") continue;
        if (ts[0] == "p") {
            if (nvars >= 0) throw parse_error(lineno, "duplicate p line");
            if (ts.size() != 4 || ts[1] != "cnf")
                throw parse_error(lineno, "p line needs: p cnf <vars> <clauses>");
            nvars = parse_int(ts[2], lineno, "variable count");
            nclauses = parse_int(ts[3], lineno, "clause count");
            if (nvars < 0 || nclauses < 0) throw parse_error(lineno, "negative cnf header");
            continue;
        }
        if (nvars < 0) throw parse_error(lineno, "expected p cnf line first");
        if (ts.size() != 4 || ts[3] != "0")
            throw parse_error(lineno, "clauses need exactly three literals and a closing 0");
        std::array<int, 3> cl;
        for (int i = 0; i < 3; ++i) {
            int lit = parse_int(ts[size_t(i)], lineno, "literal");
            int v = lit < 0 ? -lit : lit;
            if (lit == 0 || v > nvars)
                throw parse_error(lineno, "literal " + ts[size_t(i)] + " out of range");
            cl[size_t(i)] = lit;
        }
        clauses.push_back(cl);
    }
    if (nvars < 0) throw parse_error(lineno + 1, "missing p cnf line");
    if (int(clauses.size()) != nclauses)
        throw parse_error(lineno + 1, "clause count mismatch: header says " +
                                          std::to_string(nclauses) + ", found " +
                                          std::to_string(clauses.size()));
    return CnfFormula(nvars, std::move(clauses));
}

CnfFormula parse_cnf(const std::string& text) {
    std::istringstream ss(text);
    return parse_cnf(ss);
}

namespace {

long long sat_pow2(long long e) {
    if (e >= 62) return LLONG_MAX;
    return 1LL << e;
}

} // namespace

std::string emit_report(int input_vertices, int input_edges, int input_k, int input_c,
                        const PipelineResult& result, const ReportOptions& options) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["input"] = {{"vertices", input_vertices},
                  {"edges", input_edges},
                  {"k", input_k},
                  {"c", input_c},
                  {"modulator_size", result.modulator.size()},
                  {"modulator_supplied", result.modulator_supplied},
                  {"converted_modulator_edges", result.converted_xx_edges}};
    j["levels"] = nlohmann::ordered_json::array();
    for (const LevelStats& ls : result.trace.levels) {
        j["levels"].push_back({{"c", ls.level},
                               {"x_size", ls.x_size},
                               {"h_size", ls.h_size},
                               {"components", ls.components},
                               {"hyperedge_total", ls.hyperedge_total},
                               {"rule1", ls.rule1},
                               {"rule2", ls.rule2},
                               {"rule3", ls.rule3},
                               {"component_bound", ls.component_bound},
                               {"bound_ok", ls.bound_ok}});
    }
    int lifts = 0;
    for (const TraceEvent& e : result.trace.events)
        if (e.rule == "lift") ++lifts;
    j["lifts"] = lifts;
    j["k_initial"] = result.trace.initial_k;
    j["k_final"] = result.trace.final_k;
    long long htotal = 0;
    for (const VertexSet& h : result.kernel_annotated.hyperedges()) htotal += h.size();
    j["final"] = {{"x_size", result.kernel_annotated.x().size()},
                  {"h_size", int(result.kernel_annotated.hyperedges().size())},
                  {"hyperedge_total", htotal},
                  {"k", result.kernel_annotated.k()}};
    j["plain"] = {{"vertices", result.kernel_graph.vertex_count()},
                  {"edges", result.kernel_graph.edge_count()},
                  {"k", result.kernel_k}};
    long long half = 1LL * (input_c + 1) * (input_c + 2) / 2;
    j["bounds"] = {{"x_size_exponent", sat_pow2(half)},
                   {"kernel_size_exponent", sat_pow2(half + 1)}};
    if (options.include_timing) j["wall_ms"] = options.wall_ms;
    return j.dump(2) + "\n";
}

std::optional<std::string> report_schema_error(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const std::exception& e) {
        return std::string("not valid json: ") + e.what();
    }
    auto need = [&](const nlohmann::json& o, const char* key,
                    bool (nlohmann::json::*pred)() const) -> std::optional<std::string> {
        if (!o.contains(key)) return std::string("missing key: ") + key;
        if (!(o[key].*pred)()) return std::string("wrong type for key: ") + key;
        return std::nullopt;
    };
    if (auto e = need(j, "schema_version", &nlohmann::json::is_number_integer)) return e;
    if (j["schema_version"] != 1) return "unsupported schema_version";
    if (auto e = need(j, "input", &nlohmann::json::is_object)) return e;
    if (auto e = need(j, "levels", &nlohmann::json::is_array)) return e;
    if (auto e = need(j, "k_initial", &nlohmann::json::is_number_integer)) return e;
    if (auto e = need(j, "k_final", &nlohmann::json::is_number_integer)) return e;
    if (auto e = need(j, "final", &nlohmann::json::is_object)) return e;
    if (auto e = need(j, "plain", &nlohmann::json::is_object)) return e;
    if (auto e = need(j, "bounds", &nlohmann::json::is_object)) return e;
    for (const char* key : {"vertices", "edges", "k", "c", "modulator_size"})
        if (auto e = need(j["input"], key, &nlohmann::json::is_number_integer)) return e;
    for (const auto& level : j["levels"]) {
        for (const char* key : {"c", "x_size", "h_size", "components", "hyperedge_total",
                                "rule1", "rule2", "rule3", "component_bound"})
            if (auto e = need(level, key, &nlohmann::json::is_number_integer)) return e;
        if (auto e = need(level, "bound_ok", &nlohmann::json::is_boolean)) return e;
    }
    for (const char* key : {"vertices", "edges", "k"})
        if (auto e = need(j["plain"], key, &nlohmann::json::is_number_integer)) return e;
    return std::nullopt;
}

} // namespace tdk
