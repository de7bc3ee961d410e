// hookimm: exact hook immanants and hook immanantal polynomials of the
// degree/adjacency linear combinations beta*D + gamma*A of graphs and
// digraphs.
//
// Exit codes: 0 ok, 1 usage, 2 input parse error, 3 verification failure,
// 4 size limit.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookimm/cycles.hpp"
#include "hookimm/errors.hpp"
#include "hookimm/graph.hpp"
#include "hookimm/hook_character.hpp"
#include "hookimm/oracle.hpp"
#include "hookimm/recursion.hpp"
#include "hookimm/verify.hpp"

using json = nlohmann::ordered_json;
using namespace hookimm;

namespace {

constexpr int kCliVertexLimit = 10;

struct InputOptions {
    std::string edges_path;
    std::string graph6;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
    auto* a = cmd->add_option("--edges", in.edges_path, "edge-list file (header \"n m\" or \"n m directed\")");
    auto* b = cmd->add_option("--graph6", in.graph6, "graph6 string (undirected)");
    a->excludes(b);
}

std::variant<Graph, Digraph> load_graph(const InputOptions& in) {
    std::variant<Graph, Digraph> g;
    if (!in.edges_path.empty()) {
        std::ifstream f(in.edges_path);
        if (!f) throw ParseError("cannot open '" + in.edges_path + "'");
        std::stringstream buf;
        buf << f.rdbuf();
        g = parse_graph(buf.str());
    } else if (!in.graph6.empty()) {
        g = Graph::from_graph6(in.graph6);
    } else {
        throw std::invalid_argument("one of --edges / --graph6 is required");
    }
    const int n = std::holds_alternative<Graph>(g) ? std::get<Graph>(g).vertex_count()
                                                   : std::get<Digraph>(g).vertex_count();
    if (n > kCliVertexLimit)
        throw SizeLimitError("practical limit is " + std::to_string(kCliVertexLimit) +
                             " vertices, got " + std::to_string(n));
    return g;
}

struct MatrixOptions {
    std::string preset;
    std::string beta;
    std::string gamma;
    std::string alpha;
};

void add_matrix_options(CLI::App* cmd, MatrixOptions& mo) {
    cmd->add_option("--matrix", mo.preset, "preset: laplacian | signless | adjacency | a_alpha");
    cmd->add_option("--beta", mo.beta, "explicit beta (rational, e.g. 1/3)");
    cmd->add_option("--gamma", mo.gamma, "explicit gamma");
    cmd->add_option("--alpha", mo.alpha, "alpha for the a_alpha preset");
}

MatrixParams resolve_matrix(const MatrixOptions& mo) {
    const bool has_explicit = !mo.beta.empty() || !mo.gamma.empty();
    if (!mo.preset.empty() && has_explicit)
        throw std::invalid_argument("give either --matrix or --beta/--gamma, not both");
    if (!mo.preset.empty()) {
        std::optional<Rational> alpha;
        if (!mo.alpha.empty()) alpha = Rational::parse(mo.alpha);
        return resolve_preset(mo.preset, alpha);
    }
    if (mo.beta.empty() || mo.gamma.empty())
        throw std::invalid_argument("need --matrix, or both --beta and --gamma");
    if (!mo.alpha.empty()) throw std::invalid_argument("--alpha requires --matrix a_alpha");
    return {Rational::parse(mo.beta), Rational::parse(mo.gamma)};
}

struct ComputeOptions {
    InputOptions in;
    MatrixOptions matrix;
    std::string k = "all";
    std::string method = "auto";
    int pivot = 0;                 // 1-based; 0 = default
    std::vector<int> pivot_edge;   // 1-based pair
    std::string format = "human";
};

void add_compute_options(CLI::App* cmd, ComputeOptions& co) {
    add_input_options(cmd, co.in);
    add_matrix_options(cmd, co.matrix);
    cmd->add_option("--k", co.k, "hook index, or \"all\"")->capture_default_str();
    cmd->add_option("--method", co.method, "oracle | vertex | edge | auto")
        ->check(CLI::IsMember({"oracle", "vertex", "edge", "auto"}))
        ->capture_default_str();
    cmd->add_option("--pivot", co.pivot, "pivot vertex (1-based, vertex method)");
    cmd->add_option("--pivot-edge", co.pivot_edge, "pivot edge/arc u v (1-based, edge method)")
        ->expected(2);
    cmd->add_option("--format", co.format, "human | json | csv")
        ->check(CLI::IsMember({"human", "json", "csv"}))
        ->capture_default_str();
}

struct ResolvedCompute {
    std::variant<Graph, Digraph> g;
    MatrixParams params;
    int n = 0;
    std::vector<int> ks;
    std::string method;  // effective: oracle | vertex | edge | general
    int pivot_u = -1, pivot_v = -1;
};

ResolvedCompute resolve_compute(const ComputeOptions& co) {
    ResolvedCompute rc;
    rc.g = load_graph(co.in);
    rc.params = resolve_matrix(co.matrix);
    rc.n = std::holds_alternative<Graph>(rc.g) ? std::get<Graph>(rc.g).vertex_count()
                                               : std::get<Digraph>(rc.g).vertex_count();
    if (co.k == "all") {
        for (int k = 1; k <= rc.n; ++k) rc.ks.push_back(k);
    } else {
        try {
            std::size_t pos = 0;
            int k = std::stoi(co.k, &pos);
            if (pos != co.k.size()) throw std::invalid_argument("");
            rc.ks.push_back(k);
        } catch (...) {
            throw std::invalid_argument("--k must be an integer or \"all\"");
        }
        if (rc.ks[0] < 1 || rc.ks[0] > rc.n)
            std::cerr << "warning: k=" << rc.ks[0] << " is outside [1, " << rc.n
                      << "]; result is zero\n";
    }

    rc.method = co.method;
    if (rc.method == "auto") rc.method = rc.n >= 7 ? "general" : "oracle";
    if (co.pivot != 0 && co.method != "vertex")
        throw std::invalid_argument("--pivot requires --method vertex");
    if (!co.pivot_edge.empty() && co.method != "edge")
        throw std::invalid_argument("--pivot-edge requires --method edge");

    if (rc.method == "vertex") {
        rc.pivot_u = co.pivot == 0 ? 0 : co.pivot - 1;
        if (rc.pivot_u < 0 || rc.pivot_u >= rc.n) throw std::invalid_argument("pivot out of range");
    }
    if (rc.method == "edge") {
        if (!co.pivot_edge.empty()) {
            rc.pivot_u = co.pivot_edge[0] - 1;
            rc.pivot_v = co.pivot_edge[1] - 1;
        } else if (std::holds_alternative<Graph>(rc.g)) {
            const auto& es = std::get<Graph>(rc.g).edges();
            if (es.empty()) throw std::invalid_argument("edge method needs a graph with an edge");
            rc.pivot_u = es[0].first;
            rc.pivot_v = es[0].second;
        } else {
            const auto& as = std::get<Digraph>(rc.g).arcs();
            if (as.empty()) throw std::invalid_argument("edge method needs a digraph with an arc");
            rc.pivot_u = as[0].first;
            rc.pivot_v = as[0].second;
        }
    }
    return rc;
}

template <typename F>
void emit_records(const ResolvedCompute& rc, const std::string& format,
                  const std::string& value_field, F&& fill) {
    json records = json::array();
    for (int k : rc.ks) {
        json rec;
        rec["n"] = rc.n;
        rec["k"] = k;
        rec["beta"] = rc.params.beta.str();
        rec["gamma"] = rc.params.gamma.str();
        rec["method"] = rc.method;
        fill(rec, k);
        records.push_back(std::move(rec));
    }
    if (format == "json") {
        if (records.size() == 1)
            std::cout << records[0].dump() << "\n";
        else
            std::cout << records.dump() << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "n,k,beta,gamma,method," << value_field << "\n";
        for (const auto& rec : records) {
            std::cout << rec["n"] << "," << rec["k"] << "," << rec["beta"].get<std::string>()
                      << "," << rec["gamma"].get<std::string>() << ","
                      << rec["method"].get<std::string>() << ",";
            if (rec[value_field].is_array()) {
                const auto& arr = rec[value_field];
                for (std::size_t i = 0; i < arr.size(); ++i)
                    std::cout << (i ? ";" : "") << arr[i].get<std::string>();
            } else {
                std::cout << rec[value_field].get<std::string>();
            }
            std::cout << "\n";
        }
        return;
    }
    for (const auto& rec : records) {
        if (rec.contains("pretty"))
            std::cout << "Phi_" << rec["k"] << "(x) = " << rec["pretty"].get<std::string>()
                      << "\n";
        else
            std::cout << "d_" << rec["k"] << " = " << rec[value_field].get<std::string>() << "\n";
    }
}

int cmd_poly(const ComputeOptions& co) {
    ResolvedCompute rc = resolve_compute(co);
    std::optional<EvalContext> ctx;
    if (rc.method != "oracle") {
        if (std::holds_alternative<Graph>(rc.g))
            ctx.emplace(std::get<Graph>(rc.g), rc.params);
        else
            ctx.emplace(std::get<Digraph>(rc.g), rc.params);
    }
    std::vector<Poly> oracle;
    if (rc.method == "oracle") {
        if (std::holds_alternative<Graph>(rc.g))
            oracle = hook_polys_bruteforce_all(build_matrix(std::get<Graph>(rc.g), rc.params));
        else
            oracle = hook_polys_bruteforce_all(build_matrix(std::get<Digraph>(rc.g), rc.params));
    }

    emit_records(rc, co.format, "coeffs", [&](json& rec, int k) {
        Poly p;
        if (rc.method == "oracle")
            p = (k >= 1 && k <= rc.n) ? oracle[k] : Poly();
        else if (rc.method == "vertex")
            p = phi_vertex(*ctx, rc.pivot_u, k);
        else if (rc.method == "edge")
            p = phi_edge(*ctx, rc.pivot_u, rc.pivot_v, k);
        else
            p = ctx->phi(0, k);
        rec["coeffs"] = p.coeff_strings();
        if (co.format == "human") rec["pretty"] = p.str();
    });
    return 0;
}

int cmd_imm(const ComputeOptions& co) {
    ResolvedCompute rc = resolve_compute(co);
    std::optional<EvalContext> ctx;
    if (rc.method != "oracle") {
        if (std::holds_alternative<Graph>(rc.g))
            ctx.emplace(std::get<Graph>(rc.g), rc.params);
        else
            ctx.emplace(std::get<Digraph>(rc.g), rc.params);
    }
    std::vector<Rational> oracle;
    if (rc.method == "oracle") {
        if (std::holds_alternative<Graph>(rc.g))
            oracle = immanants_bruteforce_all(build_matrix(std::get<Graph>(rc.g), rc.params));
        else
            oracle = immanants_bruteforce_all(build_matrix(std::get<Digraph>(rc.g), rc.params));
    }

    emit_records(rc, co.format, "value", [&](json& rec, int k) {
        Rational v;
        if (rc.method == "oracle")
            v = (k >= 1 && k <= rc.n) ? oracle[k] : Rational(0);
        else if (rc.method == "vertex")
            v = dk_vertex(*ctx, rc.pivot_u, k);
        else if (rc.method == "edge")
            v = dk_edge(*ctx, rc.pivot_u, rc.pivot_v, k);
        else
            v = ctx->dk(0, k);
        rec["value"] = v.str();
    });
    return 0;
}

struct VerifyOptions {
    std::string suite = "all";
    int n = 0;  // 0 = per-suite default
    std::uint64_t seed = kDefaultSeed;
};

int cmd_verify(const VerifyOptions& vo) {
    struct Spec {
        std::string name;
        int def_n;
        int max_n;
    };
    const std::vector<Spec> specs = {
        {"oracle", 4, 6},   {"digraphs", 4, 6}, {"characters", 7, 8},
        {"bipartite", 5, 6}, {"trees", 7, 8},    {"alpha-coefficient", 0, 0},
    };

    std::vector<SuiteReport> reports;
    bool matched = false;
    for (const auto& spec : specs) {
        if (vo.suite != "all" && vo.suite != spec.name) continue;
        matched = true;
        int n = vo.n == 0 ? spec.def_n : vo.n;
        if (spec.max_n > 0 && n > spec.max_n)
            throw std::invalid_argument("--n for suite " + spec.name + " is capped at " +
                                        std::to_string(spec.max_n));
        if (spec.name == "oracle") {
            reports.push_back(verify_oracle_graphs(n));
        } else if (spec.name == "digraphs") {
            reports.push_back(
                verify_oracle_digraphs(std::min(n, 4), n >= 5 ? 500 : 0, vo.seed));
        } else if (spec.name == "characters") {
            reports.push_back(verify_characters(n));
        } else if (spec.name == "bipartite") {
            reports.push_back(verify_bipartite(n));
        } else if (spec.name == "trees") {
            reports.push_back(verify_trees(n));
        } else {
            reports.push_back(verify_alpha_coefficient());
        }
    }
    if (vo.suite == "all" || vo.suite == "linearity" || vo.suite == "crosschecks") {
        if (vo.suite != "all") matched = true;
        if (vo.suite == "all" || vo.suite == "linearity")
            reports.push_back(verify_row_linearity(1000, 5, vo.seed));
        if (vo.suite == "all" || vo.suite == "crosschecks")
            reports.push_back(verify_crosschecks(500, 7, vo.seed));
    }
    if (!matched) throw std::invalid_argument("unknown suite '" + vo.suite + "'");

    bool any_failed = false;
    for (const auto& rep : reports) {
        std::cout << (rep.passed() ? "PASS" : "FAIL") << " suite=" << rep.suite
                  << " checked=" << rep.checked << " failed=" << rep.failed;
        if (!rep.note.empty()) std::cout << " | " << rep.note;
        std::cout << "\n";
        if (!rep.passed()) {
            std::cout << "  first counterexample: " << rep.first_counterexample << "\n";
            any_failed = true;
        }
    }
    return any_failed ? 3 : 0;
}

struct CyclesOptions {
    InputOptions in;
    int vertex = 0;
    std::vector<int> edge;
};

int cmd_cycles(const CyclesOptions& co) {
    auto g = load_graph(co.in);
    if ((co.vertex != 0) == !co.edge.empty())
        throw std::invalid_argument("give exactly one of --vertex / --edge");
    std::vector<CycleRecord> cycles;
    if (std::holds_alternative<Graph>(g)) {
        const Graph& gr = std::get<Graph>(g);
        cycles = co.vertex != 0 ? cycles_through_vertex(gr, co.vertex - 1)
                                : cycles_through_edge(gr, co.edge[0] - 1, co.edge[1] - 1);
    } else {
        const Digraph& dg = std::get<Digraph>(g);
        cycles = co.vertex != 0 ? dicycles_through_vertex(dg, co.vertex - 1)
                                : dicycles_through_arc(dg, co.edge[0] - 1, co.edge[1] - 1);
    }
    std::cout << "vertices,length\n";
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            std::cout << (i ? "-" : "") << c.vertices[i] + 1;
        std::cout << "," << c.length() << "\n";
    }
    return 0;
}

int cmd_chars(int n) {
    if (n < 1 || n > 12) throw std::invalid_argument("--n must be in [1, 12]");
    const auto parts = partitions_of(n);
    std::cout << "k";
    for (const auto& p : parts) {
        std::cout << ",";
        for (std::size_t i = 0; i < p.size(); ++i) std::cout << (i ? "+" : "") << p[i];
    }
    std::cout << "\n";
    for (int k = 1; k <= n; ++k) {
        std::cout << k;
        for (const auto& p : parts) {
            CycleType ct;
            ct.parts = p;
            std::cout << "," << hook_character(n, k, ct).get_str();
        }
        std::cout << "\n";
    }
    return 0;
}

struct BenchOptions {
    std::string family = "complete";
    int max_n = 8;
    std::uint64_t seed = kDefaultSeed;
};

Graph bench_graph(const std::string& family, int n, Rng& rng) {
    std::vector<std::pair<int, int>> edges;
    if (family == "path") {
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    } else if (family == "cycle") {
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        if (n >= 3) edges.emplace_back(0, n - 1);
    } else if (family == "complete") {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.coin()) edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

int cmd_bench(const BenchOptions& bo) {
    if (bo.max_n < 3 || bo.max_n > kCliVertexLimit)
        throw std::invalid_argument("--max-n must be in [3, " + std::to_string(kCliVertexLimit) +
                                    "]");
    Rng rng(bo.seed);
    const MatrixParams params = MatrixParams::laplacian();
    std::cout << "n,method,milliseconds\n";
    for (int n = 3; n <= bo.max_n; ++n) {
        const Graph g = bench_graph(bo.family, n, rng);
        const int k = (n + 1) / 2;
        using clock = std::chrono::steady_clock;

        auto t0 = clock::now();
        const Poly po = hook_poly_bruteforce(build_matrix(g, params), k);
        auto t1 = clock::now();
        EvalContext ctx(g, params);
        const Poly pr = ctx.phi(0, k);
        auto t2 = clock::now();
        if (po != pr) throw std::logic_error("bench: oracle and recursion disagree");

        auto ms = [](auto d) {
            return std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(d)
                .count();
        };
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.3f", ms(t1 - t0));
        std::cout << n << ",oracle," << buf << "\n";
        std::snprintf(buf, sizeof buf, "%.3f", ms(t2 - t1));
        std::cout << n << ",recursion," << buf << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hook immanants and hook immanantal polynomials of beta*D + gamma*A"};
    app.require_subcommand(1);

    ComputeOptions poly_opts;
    auto* poly_cmd = app.add_subcommand("poly", "hook immanantal polynomial Phi_k");
    add_compute_options(poly_cmd, poly_opts);

    ComputeOptions imm_opts;
    auto* imm_cmd = app.add_subcommand("imm", "hook immanant d_k");
    add_compute_options(imm_cmd, imm_opts);

    VerifyOptions verify_opts;
    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("--suite", verify_opts.suite,
                           "oracle | digraphs | characters | bipartite | trees | "
                           "alpha-coefficient | linearity | crosschecks | all")
        ->capture_default_str();
    verify_cmd->add_option("--n", verify_opts.n, "size bound (per-suite default and cap)");
    verify_cmd->add_option("--seed", verify_opts.seed, "seed for randomized suites")
        ->capture_default_str();

    CyclesOptions cycles_opts;
    auto* cycles_cmd = app.add_subcommand("cycles", "list simple cycles through a vertex or edge");
    add_input_options(cycles_cmd, cycles_opts.in);
    cycles_cmd->add_option("--vertex", cycles_opts.vertex, "anchor vertex (1-based)");
    cycles_cmd->add_option("--edge", cycles_opts.edge, "anchor edge/arc u v (1-based)")
        ->expected(2);

    int chars_n = 0;
    auto* chars_cmd = app.add_subcommand("chars", "hook character table of S_n as CSV");
    chars_cmd->add_option("--n", chars_n, "symmetric group degree")->required();

    BenchOptions bench_opts;
    auto* bench_cmd = app.add_subcommand("bench", "time oracle vs memoized recursion");
    bench_cmd->add_option("--family", bench_opts.family, "path | cycle | complete | random")
        ->check(CLI::IsMember({"path", "cycle", "complete", "random"}))
        ->capture_default_str();
    bench_cmd->add_option("--max-n", bench_opts.max_n, "largest size")->capture_default_str();
    bench_cmd->add_option("--seed", bench_opts.seed, "seed for the random family")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (poly_cmd->parsed()) return cmd_poly(poly_opts);
        if (imm_cmd->parsed()) return cmd_imm(imm_opts);
        if (verify_cmd->parsed()) return cmd_verify(verify_opts);
        if (cycles_cmd->parsed()) return cmd_cycles(cycles_opts);
        if (chars_cmd->parsed()) return cmd_chars(chars_n);
        if (bench_cmd->parsed()) return cmd_bench(bench_opts);
        return 1;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const SizeLimitError& e) {
        std::cerr << "size limit: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
