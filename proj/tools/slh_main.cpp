#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "slh/instances.hpp"
#include "slh/io.hpp"
#include "slh/metrics.hpp"
#include "slh/oracle.hpp"
#include "slh/solver.hpp"

namespace {

using namespace slh;

constexpr int kExitHamiltonian = 0;
constexpr int kExitError = 1;
constexpr int kExitLikelyNonHamiltonian = 2;
constexpr int kExitCertifiedNonHamiltonian = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    if (format == "edgelist") return parse_edge_list(text);
    return parse_tsplib_hcp(text).graph;
}

int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::HamiltonianCycle: return kExitHamiltonian;
        case Verdict::LikelyNonHamiltonian: return kExitLikelyNonHamiltonian;
        case Verdict::CertifiedNonHamiltonian: return kExitCertifiedNonHamiltonian;
    }
    return kExitError;
}

struct SolveOutput {
    SolveResult result;
    std::string trace;
};

SolveOutput run_solve(const Graph& g, int budget_exp, const std::string& initial_path,
                      bool want_trace) {
    SolverConfig cfg;
    cfg.budget_exponent = budget_exp;
    std::ostringstream trace;
    if (want_trace) {
        cfg.trace_sink = [&](const TraceEvent& ev) { trace << ev.format() << "\n"; };
    }
    std::optional<std::vector<int>> initial;
    if (!initial_path.empty() && initial_path != "identity") {
        Cycle t = read_tour(read_file(initial_path));
        initial = t.seq;
    }
    SolveOutput out{solve(g, cfg, std::move(initial)), trace.str()};
    return out;
}

void print_solve_report(const SolveResult& res) {
    std::cout << "verdict: " << verdict_name(res.verdict);
    if (res.verdict == Verdict::CertifiedNonHamiltonian) {
        std::cout << " (" << res.presolve.describe() << ")";
    }
    std::cout << "\n";
    std::cout << "stage: " << res.stats.stage_reached << "\n";
    std::cout << "gaps: " << res.stats.gaps_at_exit << "\n";
    std::cout << "orderings: " << res.stats.orderings_listed << "\n";
    std::cout << "generators: " << res.stats.generators_applied << "\n";
    if (res.stats.budget_exhausted) std::cout << "budget: exhausted\n";
}

int cmd_solve(const std::string& path, const std::string& format, int budget_exp,
              const std::string& initial, const std::string& trace_path,
              const std::string& tour_path) {
    Graph g = load_graph(path, format);
    SolveOutput out = run_solve(g, budget_exp, initial, !trace_path.empty());
    print_solve_report(out.result);
    if (!trace_path.empty()) write_file(trace_path, out.trace);
    if (!tour_path.empty() && out.result.verdict == Verdict::HamiltonianCycle) {
        write_file(tour_path, write_tour(*out.result.cycle, "slh-tour"));
    }
    return exit_code_for(out.result.verdict);
}

int cmd_generate(const std::string& family, int n, int k, uint64_t seed,
                 int64_t scramble_seed, const std::string& out_path) {
    Graph g;
    std::string name;
    if (family == "gp") {
        g = gen_generalized_petersen(n, k);
        name = "gp-" + std::to_string(n) + "-" + std::to_string(k);
    } else if (family == "flower") {
        g = gen_flower_snark(n);
        name = "flower-" + std::to_string(n);
    } else if (family == "sheehan") {
        g = gen_sheehan(n);
        name = "sheehan-" + std::to_string(n);
    } else if (family == "cubic") {
        g = gen_random_cubic(n, seed);
        name = "cubic-" + std::to_string(n) + "-s" + std::to_string(seed);
    } else {
        throw std::runtime_error("unknown family '" + family + "'");
    }
    if (scramble_seed >= 0) {
        g = relabel_random(g, static_cast<uint64_t>(scramble_seed));
        name += "-r" + std::to_string(scramble_seed);
    }
    write_file(out_path, write_tsplib_hcp(g, name));
    std::cout << "wrote " << out_path << " (" << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges)\n";
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& tour_path,
               const std::string& format) {
    Graph g = load_graph(graph_path, format);
    Cycle c = read_tour(read_file(tour_path));
    if (verify_hamiltonian_cycle(g, c)) {
        std::cout << "valid tour\n";
        return 0;
    }
    std::cout << "invalid tour\n";
    return 2;
}

int cmd_count(const std::string& graph_path, const std::string& format, uint64_t limit,
              uint64_t node_budget) {
    Graph g = load_graph(graph_path, format);
    auto res = enumerate_hamiltonian_cycles(g, limit, node_budget);
    if (res.completed) {
        std::cout << res.count << "\n";
    } else {
        std::cout << ">=" << res.count << " (incomplete)\n";
    }
    return 0;
}

int cmd_bench(const std::string& manifest_path, const std::string& out_path,
              int budget_exp) {
    std::istringstream manifest(read_file(manifest_path));
    std::vector<std::string> paths;
    std::string line;
    while (std::getline(manifest, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        paths.push_back(line);
    }
    std::string csv = "instance,verdict,stage,gaps,orderings,generators,seconds\n";
    for (const std::string& p : paths) {
        Graph g = load_graph(p, "tsplib");
        auto t0 = std::chrono::steady_clock::now();
        SolverConfig cfg;
        cfg.budget_exponent = budget_exp;
        SolveResult res = solve(g, cfg);
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (res.verdict == Verdict::HamiltonianCycle &&
            !verify_hamiltonian_cycle(g, *res.cycle)) {
            throw std::runtime_error("bench: reported cycle failed verification");
        }
        char secbuf[32];
        std::snprintf(secbuf, sizeof(secbuf), "%.3f", secs);
        csv += p + "," + verdict_name(res.verdict) + "," +
               std::to_string(res.stats.stage_reached) + "," +
               std::to_string(res.stats.gaps_at_exit) + "," +
               std::to_string(res.stats.orderings_listed) + "," +
               std::to_string(res.stats.generators_applied) + "," + secbuf + "\n";
    }
    write_file(out_path, csv);
    std::cout << "bench: " << paths.size() << " instances -> " << out_path << "\n";
    return 0;
}

// --- trace rendering ---

TransformSpec parse_trace_move(const std::string& line, int line_no) {
    // Fields look like: step=3 stage=1 move=F3 x=2 y=9 a=5 b=7 c=1 d=4 ...
    std::istringstream iss(line);
    std::string tok;
    TransformSpec sp;
    bool seen_move = false;
    while (iss >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) continue;
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key == "move") {
            seen_move = true;
            const std::pair<const char*, MoveKind> kinds[] = {
                {"C2a", MoveKind::C2a}, {"C2b", MoveKind::C2b}, {"C3", MoveKind::C3},
                {"F2", MoveKind::F2},   {"F3", MoveKind::F3},   {"F4a", MoveKind::F4a},
                {"F4b", MoveKind::F4b}, {"F5", MoveKind::F5},   {"O4", MoveKind::O4},
            };
            bool ok = false;
            for (auto [nm, kd] : kinds) {
                if (val == nm) {
                    sp.kind = kd;
                    ok = true;
                }
            }
            if (!ok) throw ParseError(line_no, "unknown move kind '" + val + "'");
        } else if (key.size() == 1 && std::string("xyabcdefghj").find(key[0]) != std::string::npos) {
            int v = std::stoi(val) - 1;
            switch (key[0]) {
                case 'x': sp.x = v; break;
                case 'y': sp.y = v; break;
                case 'a': sp.a = v; break;
                case 'b': sp.b = v; break;
                case 'c': sp.c = v; break;
                case 'd': sp.d = v; break;
                case 'e': sp.e = v; break;
                case 'f': sp.f = v; break;
                case 'g': sp.g = v; break;
                case 'h': sp.h = v; break;
                case 'j': sp.j = v; break;
            }
        }
    }
    if (!seen_move) throw ParseError(line_no, "trace line without move field");
    return sp;
}

void render_frame(std::string& svg, const CircleOrdering& o, double cx, double cy,
                  double radius, const std::string& label) {
    const int n = o.size();
    auto coord = [&](int pos) {
        double ang = 2.0 * 3.14159265358979 * pos / n - 3.14159265358979 / 2;
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%.2f %.2f", cx + radius * std::cos(ang),
                      cy + radius * std::sin(ang));
        return std::string(buf);
    };
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "<text x=\"%.2f\" y=\"%.2f\" font-size=\"12\" font-family=\"monospace\">",
                  cx - radius, cy - radius - 12.0);
    svg += buf;
    svg += label + "</text>\n";
    // Circle adjacencies: snakes solid, gaps dashed red.
    for (int i = 0; i < n; ++i) {
        int u = o.at(i), v = o.at(o.next(i));
        bool snake = o.graph().has_edge(u, v);
        std::snprintf(buf, sizeof(buf),
                      "<path d=\"M %s A %.2f %.2f 0 0 1 %s\" fill=\"none\" stroke=\"%s\" "
                      "stroke-width=\"%s\"%s/>\n",
                      coord(i).c_str(), radius, radius, coord(i + 1 == n ? 0 : i + 1).c_str(),
                      snake ? "#1a7f37" : "#cf222e", snake ? "2.5" : "1.5",
                      snake ? "" : " stroke-dasharray=\"4 3\"");
        svg += buf;
    }
    // Ladders as chords.
    for (auto [u, v] : o.graph().edges()) {
        if (o.circle_adjacent(u, v)) continue;
        std::snprintf(buf, sizeof(buf),
                      "<path d=\"M %s L %s\" stroke=\"#8b949e\" stroke-width=\"0.8\"/>\n",
                      coord(o.position_of(u)).c_str(), coord(o.position_of(v)).c_str());
        svg += buf;
    }
    // Vertices and external labels.
    for (int i = 0; i < n; ++i) {
        double ang = 2.0 * 3.14159265358979 * i / n - 3.14159265358979 / 2;
        double px = cx + radius * std::cos(ang), py = cy + radius * std::sin(ang);
        std::snprintf(buf, sizeof(buf),
                      "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"3\" fill=\"#0969da\"/>\n", px, py);
        svg += buf;
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%.2f\" y=\"%.2f\" font-size=\"9\" font-family=\"monospace\" "
                      "text-anchor=\"middle\">%d</text>\n",
                      px + 10 * std::cos(ang), py + 10 * std::sin(ang) + 3, o.at(i) + 1);
        svg += buf;
    }
}

int cmd_render(const std::string& graph_path, const std::string& trace_path,
               const std::string& format, const std::string& initial,
               const std::string& out_path, int max_frames) {
    Graph g = load_graph(graph_path, format);
    std::vector<int> seq;
    if (!initial.empty() && initial != "identity") {
        seq = read_tour(read_file(initial)).seq;
    } else {
        seq.resize(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) seq[i] = i;
    }
    CircleOrdering o = make_ordering(g, seq);

    std::vector<std::pair<std::string, TransformSpec>> steps;
    std::istringstream tr(read_file(trace_path));
    std::string line;
    int ln = 0;
    while (std::getline(tr, line)) {
        ++ln;
        if (line.empty()) continue;
        steps.emplace_back(line, parse_trace_move(line, ln));
    }
    int frames = std::min<int>(static_cast<int>(steps.size()), max_frames - 1);

    const double radius = 90, pad = 40;
    const double cell = 2 * radius + 2 * pad;
    std::string svg;
    char buf[128];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\">\n",
                  cell, cell * (frames + 1));
    svg += buf;
    render_frame(svg, o, cell / 2, pad + radius, radius, "initial gaps=" +
                                                             std::to_string(o.gap_count()));
    for (int i = 0; i < frames; ++i) {
        o = apply_move(o, steps[i].second);
        std::string label = "step " + std::to_string(i + 1) + " " +
                            move_kind_name(steps[i].second.kind) +
                            " gaps=" + std::to_string(o.gap_count());
        render_frame(svg, o, cell / 2, (i + 1) * cell + pad + radius, radius, label);
    }
    svg += "</svg>\n";
    write_file(out_path, svg);
    std::cout << "wrote " << out_path << " (" << (frames + 1) << " frames)\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"snakes-and-ladders Hamiltonian cycle solver"};
    app.require_subcommand(1);

    std::string path, format = "tsplib", initial = "identity";
    std::string trace_path, tour_path, out_path;
    int budget_exp = 3;

    auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
    solve_cmd->add_option("path", path, "instance file")->required();
    solve_cmd->add_option("--format", format, "tsplib|edgelist");
    solve_cmd->add_option("--initial", initial, "identity or a tour file");
    solve_cmd->add_option("--budget-exp", budget_exp, "ordering-list cap exponent");
    solve_cmd->add_option("--trace", trace_path, "write the move trace here");
    solve_cmd->add_option("--tour-out", tour_path, "write the found tour here");

    std::string family;
    int gen_n = 0, gen_k = 2;
    uint64_t gen_seed = 1;
    int64_t scramble_seed = -1;
    auto* gen_cmd = app.add_subcommand("generate", "generate an instance family member");
    gen_cmd->add_option("family", family, "gp|flower|sheehan|cubic")->required();
    gen_cmd->add_option("--n", gen_n, "family size parameter")->required();
    gen_cmd->add_option("--k", gen_k, "inner step for gp");
    gen_cmd->add_option("--seed", gen_seed, "seed for cubic");
    gen_cmd->add_option("--scramble-seed", scramble_seed, "relabel with this seed");
    gen_cmd->add_option("-o,--out", out_path, "output file")->required();

    std::string tour_file;
    auto* verify_cmd = app.add_subcommand("verify", "verify a tour against a graph");
    verify_cmd->add_option("graph", path, "graph file")->required();
    verify_cmd->add_option("tour", tour_file, "tour file")->required();
    verify_cmd->add_option("--format", format, "tsplib|edgelist");

    uint64_t limit = 10, node_budget = UINT64_MAX;
    auto* count_cmd = app.add_subcommand("count", "exhaustively count Hamiltonian cycles");
    count_cmd->add_option("graph", path, "graph file")->required();
    count_cmd->add_option("--limit", limit, "cycles to keep");
    count_cmd->add_option("--node-budget", node_budget, "search node cap");
    count_cmd->add_option("--format", format, "tsplib|edgelist");

    auto* bench_cmd = app.add_subcommand("bench", "run a manifest of instances");
    bench_cmd->add_option("manifest", path, "file with one instance path per line")
        ->required();
    bench_cmd->add_option("-o,--out", out_path, "CSV output path")->required();
    bench_cmd->add_option("--budget-exp", budget_exp, "ordering-list cap exponent");

    int max_frames = 64;
    auto* render_cmd = app.add_subcommand("render", "render a trace as SVG frames");
    render_cmd->add_option("graph", path, "graph file")->required();
    render_cmd->add_option("trace", trace_path, "trace file")->required();
    render_cmd->add_option("--format", format, "tsplib|edgelist");
    render_cmd->add_option("--initial", initial, "identity or a tour file");
    render_cmd->add_option("-o,--out", out_path, "SVG output path")->required();
    render_cmd->add_option("--max-frames", max_frames, "frame cap including the initial");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(path, format, budget_exp, initial, trace_path, tour_path);
        }
        if (gen_cmd->parsed()) {
            return cmd_generate(family, gen_n, gen_k, gen_seed, scramble_seed, out_path);
        }
        if (verify_cmd->parsed()) return cmd_verify(path, tour_file, format);
        if (count_cmd->parsed()) return cmd_count(path, format, limit, node_budget);
        if (bench_cmd->parsed()) return cmd_bench(path, out_path, budget_exp);
        if (render_cmd->parsed()) {
            return cmd_render(path, trace_path, format, initial, out_path, max_frames);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
