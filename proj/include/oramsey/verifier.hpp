#pragma once

// Adversarial certification of the Builder's budget: explores the full
// binary tree of painter replies (or a seeded sample of it) and reports the
// worst case. Exhaustive mode fans the tree out across threads by reply
// prefix; the merged report is identical to a serial run.

#include <future>
#include <random>
#include <sstream>
#include <thread>

#include "oramsey/builder.hpp"
#include "oramsey/game.hpp"
#include "oramsey/painters.hpp"

namespace oramsey {

struct VerificationReport {
    std::size_t n = 0;
    std::size_t budget = 0;
    bool exhaustive = true;
    std::size_t trials = 0; // sampled mode
    std::uint64_t seed = 0; // sampled mode
    std::size_t max_rounds = 0;
    std::uint64_t branches = 0; // leaves explored (with early termination)
    bool pass = false;
    GameTrace worst; // lexicographically first among maximal-round leaves

    std::string to_text() const {
        std::ostringstream out;
        out << "verify n=" << n << " budget=" << budget << " mode="
            << (exhaustive ? "exhaustive" : "sampled") << "\n";
        if (!exhaustive) out << "trials=" << trials << " seed=" << seed << "\n";
        out << "branches=" << branches << "\n";
        out << "max_rounds=" << max_rounds << "\n";
        out << "verdict=" << (pass ? "PASS" : "FAIL") << "\n";
        return out.str();
    }

    std::string to_machine() const {
        std::ostringstream out;
        out << "n=" << n << "\n"
            << "budget=" << budget << "\n"
            << "mode=" << (exhaustive ? "exhaustive" : "sampled") << "\n";
        if (!exhaustive) out << "trials=" << trials << "\n" << "seed=" << seed << "\n";
        out << "branches=" << branches << "\n"
            << "max_rounds=" << max_rounds << "\n"
            << "verdict=" << (pass ? "PASS" : "FAIL") << "\n";
        return out.str();
    }
};

namespace detail {

struct DfsResult {
    std::uint64_t branches = 0;
    std::size_t max_rounds = 0;
    bool all_decided = true; // every leaf RedWin/BlueWin within budget
    std::vector<Round> worst; // first deepest leaf in red-before-blue order
};

// Depth-first over painter replies; red explored before blue, so the first
// deepest leaf found is the lexicographically least reply string.
inline void verify_dfs(const PaperBuilder& plan, const ColoredGraph& board,
                       std::vector<Round>& rounds, const GameConfig& cfg, DfsResult& out) {
    GameStatus st = status(board, cfg, rounds.size());
    if (st.over()) {
        ++out.branches;
        if (st.verdict == Verdict::BudgetExceeded) out.all_decided = false;
        if (rounds.size() > out.max_rounds) {
            out.max_rounds = rounds.size();
            out.worst = rounds;
        }
        return;
    }
    PaperBuilder probe = plan;
    Edge e = probe.propose(board);
    for (Color c : {Color::Red, Color::Blue}) {
        PaperBuilder next = plan;
        ColoredGraph child = board;
        Edge drawn = next.propose(child); // deterministic: same edge as the probe
        (void)drawn;
        child.ensure_vertex(std::max(e.u, e.v));
        child.add_edge(e.u, e.v, c);
        next.observe(child, e, c);
        rounds.push_back({rounds.size() + 1, e, c});
        verify_dfs(next, child, rounds, cfg, out);
        rounds.pop_back();
    }
}

// Enumerates all (plan, board) states at the given depth for fan-out.
struct PrefixState {
    PaperBuilder plan;
    ColoredGraph board;
    std::vector<Round> rounds;
};

inline void collect_prefixes(const PaperBuilder& plan, const ColoredGraph& board,
                             std::vector<Round>& rounds, const GameConfig& cfg,
                             std::size_t depth, std::vector<PrefixState>& out,
                             DfsResult& leaves) {
    GameStatus st = status(board, cfg, rounds.size());
    if (st.over()) {
        ++leaves.branches;
        if (st.verdict == Verdict::BudgetExceeded) leaves.all_decided = false;
        if (rounds.size() > leaves.max_rounds) {
            leaves.max_rounds = rounds.size();
            leaves.worst = rounds;
        }
        return;
    }
    if (depth == 0) {
        out.push_back({plan, board, rounds});
        return;
    }
    PaperBuilder probe = plan;
    Edge e = probe.propose(board);
    for (Color c : {Color::Red, Color::Blue}) {
        PaperBuilder next = plan;
        ColoredGraph child = board;
        Edge drawn = next.propose(child);
        (void)drawn;
        child.ensure_vertex(std::max(e.u, e.v));
        child.add_edge(e.u, e.v, c);
        next.observe(child, e, c);
        rounds.push_back({rounds.size() + 1, e, c});
        collect_prefixes(next, child, rounds, cfg, depth - 1, out, leaves);
        rounds.pop_back();
    }
}

} // namespace detail

inline GameStatus replayed_status(const GameConfig& cfg, const std::vector<Round>& rounds) {
    GameTrace t{cfg, rounds, {}};
    return replay(t);
}

struct VerifyOptions {
    unsigned threads = 0; // 0: hardware_concurrency
    std::size_t split_depth = 8; // prefix levels distributed across workers
};

inline VerificationReport verify_exhaustive(std::size_t n, TableStore& tables,
                                            VerifyOptions opts = {}) {
    GameConfig cfg{4, n, round_budget(n)};
    VerificationReport report;
    report.n = n;
    report.budget = cfg.budget;
    report.exhaustive = true;
    if (cfg.budget > 33)
        fail(ErrorCode::TooLarge,
             "reply tree beyond exhaustive reach; use sampled verification");

    PaperBuilder root(n, tables);
    ColoredGraph empty;
    std::vector<Round> rounds;

    unsigned threads = opts.threads ? opts.threads : std::thread::hardware_concurrency();
    if (threads <= 1 || cfg.budget <= opts.split_depth + 2) {
        detail::DfsResult res;
        detail::verify_dfs(root, empty, rounds, cfg, res);
        report.branches = res.branches;
        report.max_rounds = res.max_rounds;
        report.pass = res.all_decided && res.max_rounds <= cfg.budget;
        report.worst = {cfg, res.worst, replayed_status(cfg, res.worst)};
        return report;
    }

    std::vector<detail::PrefixState> prefixes;
    detail::DfsResult shallow;
    detail::collect_prefixes(root, empty, rounds, cfg, opts.split_depth, prefixes, shallow);

    std::vector<detail::DfsResult> results(prefixes.size());
    std::atomic<std::size_t> cursor{0};
    auto worker = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= prefixes.size()) return;
            detail::PrefixState& ps = prefixes[i];
            detail::verify_dfs(ps.plan, ps.board, ps.rounds, cfg, results[i]);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // deterministic merge in prefix (lexicographic) order
    detail::DfsResult total = shallow;
    for (const auto& res : results) {
        total.branches += res.branches;
        total.all_decided = total.all_decided && res.all_decided;
        if (res.max_rounds > total.max_rounds) {
            total.max_rounds = res.max_rounds;
            total.worst = res.worst;
        }
    }
    report.branches = total.branches;
    report.max_rounds = total.max_rounds;
    report.pass = total.all_decided && total.max_rounds <= cfg.budget;
    report.worst = {cfg, total.worst, replayed_status(cfg, total.worst)};
    return report;
}

inline VerificationReport verify_sampled(std::size_t n, std::size_t trials, std::uint64_t seed,
                                         TableStore& tables) {
    GameConfig cfg{4, n, round_budget(n)};
    VerificationReport report;
    report.n = n;
    report.budget = cfg.budget;
    report.exhaustive = false;
    report.trials = trials;
    report.seed = seed;
    report.pass = true;
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < trials; ++trial) {
        PaperBuilder builder(n, tables);
        RandomPainter painter(rng());
        GameTrace t = run_game(builder, painter, cfg);
        ++report.branches;
        if (t.status.verdict == Verdict::BudgetExceeded) report.pass = false;
        if (t.rounds.size() > report.max_rounds) {
            report.max_rounds = t.rounds.size();
            report.worst = t;
        }
    }
    return report;
}

} // namespace oramsey
