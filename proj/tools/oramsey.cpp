// Command-line surface: play games, certify budgets, solve small instances,
// export traces. Exit code 0 means PASS / solved.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "oramsey/builder.hpp"
#include "oramsey/dot.hpp"
#include "oramsey/painters.hpp"
#include "oramsey/solver.hpp"
#include "oramsey/verifier.hpp"

namespace {

using namespace oramsey;

// A human colors each proposed edge from stdin; anything but r/b reprompts.
class InteractivePainter : public PainterStrategy {
public:
    Color color(const ColoredGraph& g, Edge e) override {
        std::cout << "round " << g.edge_count() + 1 << ": builder draws " << e.u << "-" << e.v
                  << "  [r/b]? " << std::flush;
        std::string line;
        while (std::getline(std::cin, line)) {
            auto c = color_from_name(line);
            if (c) return *c;
            std::cout << "please answer r or b: " << std::flush;
        }
        fail(ErrorCode::CorruptTrace, "stdin closed during interactive play");
    }
};

TableStore load_tables(const std::string& dir) {
    TableStore store;
    if (dir.empty()) return store;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() != ".table") continue;
        try {
            store.put(load_table(entry.path().string()));
        } catch (const Error&) {
            // unrelated file; ignore
        }
    }
    return store;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) fail(ErrorCode::CorruptTrace, "cannot read " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"online Ramsey laboratory for red P4 versus blue paths"};
    app.require_subcommand(1);

    std::string tables_dir;
    app.add_option("--tables", tables_dir, "directory of .table strategy files");

    auto* play = app.add_subcommand("play", "run one game");
    std::size_t play_n = 10;
    std::string painter_spec = "blocking";
    bool interactive = false;
    std::string play_out;
    play->add_option("--n", play_n, "blue target path order")->required();
    play->add_option("--painter", painter_spec,
                     "blocking | blue | red | random[:seed] | minimax (n <= 7)");
    play->add_flag("--interactive", interactive, "color the edges yourself");
    play->add_option("--out", play_out, "write the trace to a file");

    auto* verify = app.add_subcommand("verify", "certify the builder's budget");
    std::size_t verify_n = 10;
    bool exhaustive = false;
    std::size_t trials = 10000;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    verify->add_option("--n", verify_n, "blue target path order")->required();
    verify->add_flag("--exhaustive", exhaustive, "explore every painter reply sequence");
    verify->add_option("--trials", trials, "sampled mode: number of random games");
    verify->add_option("--seed", seed, "sampled mode: RNG seed");
    verify->add_option("--threads", threads, "exhaustive fan-out width (0 = auto)");

    auto* solve = app.add_subcommand("solve", "exact online Ramsey number");
    std::size_t solve_m = 4, solve_n = 5, max_budget = 12;
    std::string emit_table;
    solve->add_option("--m", solve_m, "red target path order")->required();
    solve->add_option("--n", solve_n, "blue target path order")->required();
    solve->add_option("--max-budget", max_budget, "deepest budget to try");
    solve->add_option("--emit-table", emit_table, "write the winning strategy table");

    auto* exp = app.add_subcommand("export", "render a recorded trace");
    std::string trace_file, format = "dot";
    exp->add_option("--trace", trace_file, "trace file in the line format")->required();
    exp->add_option("--format", format, "dot | text");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*play) {
            TableStore tables = load_tables(tables_dir);
            PaperBuilder builder(play_n, tables);
            GameConfig cfg{4, play_n, round_budget(play_n)};
            std::unique_ptr<PainterStrategy> painter;
            if (interactive) {
                painter = std::make_unique<InteractivePainter>();
            } else if (painter_spec == "minimax") {
                painter = std::make_unique<MinimaxPainter>(cfg);
            } else {
                painter = make_painter(painter_spec);
                if (!painter) {
                    std::cerr << "unknown painter: " << painter_spec << "\n";
                    return 2;
                }
            }
            GameTrace t = run_game(builder, *painter, cfg);
            std::string text = trace_to_text(t);
            if (!play_out.empty()) {
                std::ofstream f(play_out, std::ios::binary);
                f << text;
            }
            std::cout << text;
            std::cout << "# " << status_to_string(t.status) << " within budget " << cfg.budget
                      << "\n";
            return t.status.verdict == Verdict::BudgetExceeded ? 1 : 0;
        }
        if (*verify) {
            TableStore tables = load_tables(tables_dir);
            VerificationReport report;
            if (exhaustive) {
                report = verify_exhaustive(verify_n, tables, {threads, 8});
            } else {
                report = verify_sampled(verify_n, trials, seed, tables);
            }
            std::cout << report.to_text() << "\n";
            std::cout << report.to_machine();
            std::cout << "worst_trace:\n" << trace_to_text(report.worst);
            return report.pass ? 0 : 1;
        }
        if (*solve) {
            SolveResult r = solve_value(solve_m, solve_n, max_budget, !emit_table.empty());
            if (r.value) {
                std::cout << "r(P" << solve_m << ",P" << solve_n << ") = " << *r.value
                          << "  (nodes=" << r.nodes_expanded << ")\n";
                if (!emit_table.empty() && r.table) {
                    save_table(*r.table, emit_table);
                    std::cout << "table: " << emit_table << " (" << r.table->entries.size()
                              << " states)\n";
                }
                return 0;
            }
            std::cout << "no winning strategy within budget " << max_budget
                      << "  (nodes=" << r.nodes_expanded << ")\n";
            return 1;
        }
        if (*exp) {
            GameTrace t = trace_from_text(slurp(trace_file));
            if (format == "dot") std::cout << export_dot(t);
            else if (format == "text") std::cout << trace_to_text(t);
            else {
                std::cerr << "unknown format: " << format << "\n";
                return 2;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
