#include <chrono>
#include <climits>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "tdkernel/io.hpp"
#include "tdkernel/reductions.hpp"

namespace {

using namespace tdk;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spill(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw error("cannot open " + path + " for writing");
    out << text;
}

ParsedInstance load_instance(const std::string& path) { return parse_instance(slurp(path)); }

// Modulator file: whitespace-separated vertex ids; `c` comment lines are
// skipped and a leading `x` on a line is allowed.
VertexSet load_vertex_set(const std::string& path) {
    std::istringstream in(slurp(path));
    std::vector<int> ids;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string t;
        bool first = true;
        while (ls >> t) {
            if (first && (t == "c" || t == "x")) {
                first = false;
                if (t == "c") break;
                continue;
            }
            first = false;
            try {
                size_t used = 0;
                int v = std::stoi(t, &used);
                if (used != t.size()) throw std::invalid_argument(t);
                ids.push_back(v);
            } catch (const std::exception&) {
                throw parse_error(lineno, "expected vertex id, got '" + t + "'");
            }
        }
    }
    return VertexSet(ids);
}

void print_warnings(const ParsedInstance& inst) {
    for (const std::string& w : inst.warnings) std::cerr << "warning: " << w << "\n";
}

int cmd_kernelize(const std::string& in, const std::string& out, const std::string& report,
                  const std::string& annotated_out, const std::string& modulator_file, int c_flag,
                  const std::string& mode, bool timing) {
    auto t0 = std::chrono::steady_clock::now();
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);

    PipelineResult result;
    int input_vertices = inst.graph.vertex_count();
    int input_edges = inst.graph.edge_count();
    if (inst.kind == ParsedInstance::Kind::atdis) {
        KernelizeResult kr = kernelize(*inst.annotated);
        result.modulator = inst.annotated->x();
        result.modulator_supplied = true;
        result.converted_xx_edges = int(inst.warnings.size());
        result.kernel_annotated = kr.instance;
        result.trace = std::move(kr.trace);
        PlainReduction plain = annotated_to_plain(result.kernel_annotated);
        result.kernel_graph = std::move(plain.graph);
        result.kernel_k = plain.k;
    } else {
        int c = c_flag >= 0 ? c_flag : inst.c;
        std::optional<VertexSet> x;
        if (!modulator_file.empty())
            x = load_vertex_set(modulator_file);
        else if (inst.modulator_cert)
            x = inst.modulator_cert;
        PipelineOptions options;
        options.modulator_mode = mode == "exact" ? ModulatorMode::exact : ModulatorMode::greedy;
        result = full_pipeline(inst.graph, inst.k, c, x, options);
    }

    spill(out, serialize_graph(result.kernel_graph, 0, result.kernel_k));
    if (!annotated_out.empty())
        spill(annotated_out, serialize_annotated(result.kernel_annotated));
    if (!report.empty()) {
        ReportOptions ropts;
        ropts.include_timing = timing;
        ropts.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        spill(report, emit_report(input_vertices, input_edges, inst.k,
                                  inst.kind == ParsedInstance::Kind::atdis ? inst.c
                                  : c_flag >= 0                            ? c_flag
                                                                           : inst.c,
                                  result, ropts));
    }
    std::cerr << "kernelized: " << result.kernel_graph.vertex_count() << " vertices, k = "
              << result.kernel_k << "\n";
    return 0;
}

int cmd_solve_is(const std::string& in, int kmax) {
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);
    AlphaResult r = inst.annotated ? alpha_annotated(*inst.annotated) : alpha_exact(inst.graph);
    int k = kmax != INT_MIN ? kmax : inst.k;
    std::cout << "alpha " << r.value << "\n";
    std::cout << "witness";
    for (int v : r.witness) std::cout << " " << v;
    std::cout << "\n";
    std::cout << "answer " << (r.value >= k ? "yes" : "no") << "\n";
    return 0;
}

int cmd_solve_ds(const std::string& in, int kmax) {
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);
    if (inst.kind != ParsedInstance::Kind::graph)
        throw error("solve ds expects a plain graph instance");
    int k = inst.k;
    int cap = kmax != INT_MIN ? kmax : std::max(k, inst.graph.vertex_count());
    std::optional<int> g = gamma_exact(inst.graph, cap);
    if (g)
        std::cout << "gamma " << *g << "\n";
    else
        std::cout << "gamma > " << cap << "\n";
    std::cout << "answer " << (g && *g <= k ? "yes" : "no") << "\n";
    return 0;
}

// Decomposition file: one `<vertex> <parent>` pair per line, -1 for roots.
TdDecomposition load_decomposition(const std::string& path, int n) {
    std::istringstream in(slurp(path));
    TdDecomposition d;
    d.parent.assign(size_t(n), -2);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> ts;
        std::string t;
        while (ls >> t) ts.push_back(t);
        if (ts.empty() || ts[0] == "c") continue;
        if (ts.size() != 2) throw parse_error(lineno, "expected: <vertex> <parent>");
        int v, p;
        try {
            v = std::stoi(ts[0]);
            p = std::stoi(ts[1]);
        } catch (const std::exception&) {
            throw parse_error(lineno, "expected: <vertex> <parent>");
        }
        if (v < 0 || v >= n) throw parse_error(lineno, "vertex out of range");
        d.parent[size_t(v)] = p;
    }
    for (int v = 0; v < n; ++v) {
        if (d.parent[size_t(v)] == -2)
            throw error("decomposition file misses vertex " + std::to_string(v));
        if (d.parent[size_t(v)] == -1) d.roots.push_back(v);
    }
    // height = longest parent chain; a cycle would exceed n and is caught here
    for (int v = 0; v < n; ++v) {
        int len = 0, w = v;
        while (w != -1) {
            ++len;
            if (len > n) throw error("decomposition file has a parent cycle");
            w = w >= 0 && w < n ? d.parent[size_t(w)] : -1;
        }
        d.height = std::max(d.height, len);
    }
    return d;
}

std::string format_decomposition(const TdDecomposition& d) {
    std::ostringstream ss;
    for (size_t v = 0; v < d.parent.size(); ++v)
        ss << v << " " << d.parent[v] << "\n";
    return ss.str();
}

int cmd_td_compute(const std::string& in, const std::string& decomp_out) {
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);
    TdResult r = td_exact(inst.graph);
    std::cout << "td " << r.value << "\n";
    if (!decomp_out.empty()) spill(decomp_out, format_decomposition(r.decomp));
    return 0;
}

int cmd_td_verify(const std::string& in, const std::string& decomp_file) {
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);
    TdDecomposition d = load_decomposition(decomp_file, inst.graph.vertex_count());
    if (!verify_decomposition(inst.graph, d)) {
        std::cout << "invalid\n";
        return 1;
    }
    std::cout << "valid height " << d.height << "\n";
    return 0;
}

int cmd_modulator(const std::string& in, int c, const std::string& mode,
                  const std::string& out) {
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);
    Modulator m = compute_modulator(inst.graph, c,
                                    mode == "exact" ? ModulatorMode::exact
                                                    : ModulatorMode::greedy);
    std::ostringstream ss;
    ss << "x";
    for (int v : m.x) ss << " " << v;
    ss << "\n";
    std::cerr << "modulator size " << m.x.size() << "\n";
    spill(out, ss.str());
    return 0;
}

int cmd_gen_subdivide(const std::string& in, int c, const std::string& out) {
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);
    LabeledInstance li = ds_subdivision_instance(inst.graph, inst.k, c);
    spill(out, serialize_graph(li.g, inst.c, li.k));
    return 0;
}

int cmd_gen_crosscompose(const std::vector<std::string>& cnf_files, const std::string& out) {
    std::vector<CnfFormula> formulas;
    for (const std::string& f : cnf_files) formulas.push_back(parse_cnf(slurp(f)));
    LabeledInstance li = cross_compose_3sat(formulas);
    std::optional<VertexSet> mod;
    if (auto it = li.certificates.find("modulator"); it != li.certificates.end())
        mod = VertexSet(it->second);
    spill(out, serialize_graph(li.g, 2, li.k, mod));
    return 0;
}

int cmd_gen_lowerbound(int t, const std::string& out) {
    LowerBoundFamily fam = lower_bound_family(t);
    spill(out, serialize_graph(fam.g, 0, 2 * t + 2, fam.y));
    return 0;
}

int cmd_gen_vcds(const std::string& in, int k_flag, const std::string& out) {
    ParsedInstance inst = load_instance(in);
    print_warnings(inst);
    int k = k_flag != INT_MIN ? k_flag : inst.k;
    std::optional<VertexSet> vc = inst.modulator_cert;
    LabeledInstance li = reduce_vc_ds_deg2(inst.graph, k, vc);
    std::optional<VertexSet> mod;
    if (auto it = li.certificates.find("modulator"); it != li.certificates.end())
        mod = VertexSet(it->second);
    spill(out, serialize_graph(li.g, 3, li.k, mod));
    return 0;
}

int cmd_gen_logtd(int u, int w, int k, unsigned seed, bool complete, const std::string& out) {
    std::vector<std::pair<int, int>> bip;
    if (complete) {
        for (int i = 0; i < u; ++i)
            for (int j = 0; j < w; ++j) bip.emplace_back(i, j);
    } else {
        std::mt19937 rng(seed);
        for (int i = 0; i < u; ++i)
            for (int j = 0; j < w; ++j)
                if (rng() % 2 == 0) bip.emplace_back(i, j);
    }
    LabeledInstance li = gen_logtd_instance(u, w, bip, k);
    std::optional<VertexSet> mod;
    if (auto it = li.certificates.find("modulator"); it != li.certificates.end())
        mod = VertexSet(it->second);
    spill(out, serialize_graph(li.g, 0, li.k, mod));
    return 0;
}

int cmd_gen_union(const std::vector<std::string>& ins, const std::string& out) {
    std::vector<std::pair<Graph, int>> parts;
    int c = 0;
    for (const std::string& f : ins) {
        ParsedInstance inst = load_instance(f);
        print_warnings(inst);
        parts.emplace_back(inst.graph, inst.k);
        c = std::max(c, inst.c);
    }
    LabeledInstance li = compose_disjoint_union(parts);
    spill(out, serialize_graph(li.g, c, li.k));
    return 0;
}

bool instance_answer(const ParsedInstance& inst, const std::string& oracle) {
    if (oracle == "is") {
        AlphaResult r =
            inst.annotated ? alpha_annotated(*inst.annotated) : alpha_exact(inst.graph);
        return r.value >= inst.k;
    }
    if (inst.kind != ParsedInstance::Kind::graph)
        throw error("ds oracle expects plain graph instances");
    std::optional<int> g = gamma_exact(inst.graph, inst.k);
    return g.has_value();
}

int cmd_verify_equivalence(const std::string& before, const std::string& after,
                           const std::string& oracle) {
    ParsedInstance a = load_instance(before);
    ParsedInstance b = load_instance(after);
    print_warnings(a);
    print_warnings(b);
    bool ra = instance_answer(a, oracle);
    bool rb = instance_answer(b, oracle);
    if (ra != rb) {
        std::cout << "DIFFER before=" << (ra ? "yes" : "no") << " after=" << (rb ? "yes" : "no")
                  << "\n";
        return 1;
    }
    std::cout << "EQUIVALENT " << (ra ? "yes" : "no") << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"kernelization toolkit for independent set / dominating set instances"};
    app.require_subcommand(1);

    std::string in, out, report, annotated_out, modulator_file, decomp_file, decomp_out;
    std::string mode = "greedy", oracle, before, after;
    int c = -1, t = 1, k = INT_MIN, kmax = INT_MIN, u = 1, w = 1;
    unsigned seed = 1;
    bool timing = false, complete = false;
    std::vector<std::string> files;

    auto* kz = app.add_subcommand("kernelize", "run the full reduction pipeline");
    kz->add_option("--in", in, "instance file")->required();
    kz->add_option("--out", out, "plain instance output (stdout if omitted)");
    kz->add_option("--report", report, "JSON report output");
    kz->add_option("--annotated-out", annotated_out, "final annotated instance output");
    kz->add_option("--modulator", modulator_file, "modulator file (vertex ids)");
    kz->add_option("--c", c, "modulator level (default: instance header)");
    kz->add_option("--mode", mode, "modulator search mode: exact|greedy")
        ->check(CLI::IsMember({"exact", "greedy"}));
    kz->add_flag("--timing", timing, "include wall time in the report");

    auto* solve = app.add_subcommand("solve", "exact solvers");
    auto* sis = solve->add_subcommand("is", "maximum independent set");
    sis->add_option("--in", in, "instance file")->required();
    sis->add_option("--kmax", kmax, "budget override");
    auto* sds = solve->add_subcommand("ds", "minimum dominating set");
    sds->add_option("--in", in, "instance file")->required();
    sds->add_option("--kmax", kmax, "search cap (default: max(k, n))");
    solve->require_subcommand(1);

    auto* td = app.add_subcommand("td", "treedepth");
    auto* tdc = td->add_subcommand("compute", "exact treedepth with certificate");
    tdc->add_option("--in", in, "instance file")->required();
    tdc->add_option("--decomp-out", decomp_out, "write certificate (vertex parent lines)");
    auto* tdv = td->add_subcommand("verify", "check a decomposition certificate");
    tdv->add_option("--in", in, "instance file")->required();
    tdv->add_option("--decomp", decomp_file, "certificate file")->required();
    td->require_subcommand(1);

    auto* md = app.add_subcommand("modulator", "compute a c-treedepth modulator");
    md->add_option("--in", in, "instance file")->required();
    md->add_option("--c", c, "target level")->required();
    md->add_option("--mode", mode, "exact|greedy")
        ->check(CLI::IsMember({"exact", "greedy"}));
    md->add_option("--out", out, "write the modulator (stdout if omitted)");

    auto* gen = app.add_subcommand("gen", "instance generators");
    auto* gsub = gen->add_subcommand("subdivide", "gamma-preserving 3c-subdivision");
    gsub->add_option("--in", in, "instance file")->required();
    gsub->add_option("--c", c, "subdivision level (3c steps per edge)")->default_val(1);
    gsub->add_option("--out", out, "output file (stdout if omitted)");
    auto* gcc = gen->add_subcommand("crosscompose", "OR-compose 3-SAT formulas into one DS instance");
    gcc->add_option("--cnf", files, "DIMACS cnf files")->required()->expected(-1);
    gcc->add_option("--out", out, "output file (stdout if omitted)");
    auto* glb = gen->add_subcommand("lowerbound", "linked-triangle family with spread conflicts");
    glb->add_option("--t", t, "number of triangle pairs")->required();
    glb->add_option("--out", out, "output file (stdout if omitted)");
    auto* gvd = gen->add_subcommand("vcds", "vertex cover to dominating set on 2-degenerate graphs");
    gvd->add_option("--in", in, "instance file")->required();
    gvd->add_option("--k", k, "cover budget (default: instance header)");
    gvd->add_option("--out", out, "output file (stdout if omitted)");
    auto* glt = gen->add_subcommand("logtd", "subdivided bipartite graph plus apexed grid");
    glt->add_option("--u", u, "left side size")->required();
    glt->add_option("--w", w, "right side size")->required();
    glt->add_option("--k", k, "base budget")->required();
    auto* seed_opt = glt->add_option("--seed", seed, "random bipartite edges with this seed");
    glt->add_flag("--complete", complete, "use the complete bipartite graph (default)");
    glt->add_option("--out", out, "output file (stdout if omitted)");
    auto* gun = gen->add_subcommand("union", "disjoint union with additive budgets");
    gun->add_option("--in", files, "instance files")->required()->expected(-1);
    gun->add_option("--out", out, "output file (stdout if omitted)");
    gen->require_subcommand(1);

    auto* vf = app.add_subcommand("verify", "checkers");
    auto* veq = vf->add_subcommand("equivalence", "same answer before and after a reduction");
    veq->add_option("--before", before, "instance file")->required();
    veq->add_option("--after", after, "instance file")->required();
    veq->add_option("--oracle", oracle, "is|ds")
        ->required()
        ->check(CLI::IsMember({"is", "ds"}));
    vf->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*kz)
            return cmd_kernelize(in, out, report, annotated_out, modulator_file, c, mode, timing);
        if (*sis) return cmd_solve_is(in, kmax);
        if (*sds) return cmd_solve_ds(in, kmax);
        if (*tdc) return cmd_td_compute(in, decomp_out);
        if (*tdv) return cmd_td_verify(in, decomp_file);
        if (*md) return cmd_modulator(in, c, mode, out);
        if (*gsub) return cmd_gen_subdivide(in, c, out);
        if (*gcc) return cmd_gen_crosscompose(files, out);
        if (*glb) return cmd_gen_lowerbound(t, out);
        if (*gvd) return cmd_gen_vcds(in, k, out);
        if (*glt) return cmd_gen_logtd(u, w, k, seed, complete || seed_opt->count() == 0, out);
        if (*gun) return cmd_gen_union(files, out);
        if (*veq) return cmd_verify_equivalence(before, after, oracle);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cerr << "error: no command selected\n";
    return 1;
}
