#pragma once

// The constructive Builder. The target decomposes into a base construction
// (the 5k staged pipeline, the 5k+2 variant with a spliced red edge, or a
// solver-extracted table for small orders) plus six-round path extensions.
// Every "has to be blue" edge is asserted forceable when drawn: coloring it
// red would complete a red P4, which also ends the game in Builder's favor.

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oramsey/game.hpp"
#include "oramsey/graph.hpp"
#include "oramsey/solver.hpp"
#include "oramsey/strategy_table.hpp"

namespace oramsey {

// ceil((7(n-1)+2)/5) as exact integer arithmetic.
inline std::size_t round_budget(std::size_t n) { return (7 * n - 1) / 5; }

struct TargetDecomposition {
    enum class Base { FiveK, FiveKPlus2, Small };
    Base base = Base::Small;
    std::size_t k = 0; // FiveK / FiveKPlus2
    std::size_t small_order = 0; // Small
    std::size_t base_order = 0;
    std::size_t base_budget = 0;
    std::size_t lemma_count = 0;
    std::size_t budget = 0; // base_budget + 6*lemma_count == round_budget(n)
};

inline TargetDecomposition decompose_target(std::size_t n) {
    if (n < 4) fail(ErrorCode::TargetTooSmall, "blue target must have order >= 4");
    TargetDecomposition d;
    d.budget = round_budget(n);
    auto small = [&](std::size_t n0, std::size_t lemmas) {
        d.base = TargetDecomposition::Base::Small;
        d.small_order = n0;
        d.base_order = n0;
        d.base_budget = round_budget(n0);
        d.lemma_count = lemmas;
    };
    auto five_k = [&](std::size_t k, std::size_t lemmas) {
        d.base = TargetDecomposition::Base::FiveK;
        d.k = k;
        d.base_order = 5 * k;
        d.base_budget = 7 * k - 1;
        d.lemma_count = lemmas;
    };
    auto five_k2 = [&](std::size_t k, std::size_t lemmas) {
        d.base = TargetDecomposition::Base::FiveKPlus2;
        d.k = k;
        d.base_order = 5 * k + 2;
        d.base_budget = 7 * k + 2;
        d.lemma_count = lemmas;
    };
    switch (n) {
    case 4: small(4, 0); break;
    case 5: small(5, 0); break;
    case 6: small(6, 0); break;
    case 7: small(7, 0); break;
    case 8: small(4, 1); break;
    case 9: small(5, 1); break;
    case 11: small(7, 1); break;
    case 13: small(5, 2); break;
    default:
        switch (n % 5) {
        case 0: five_k(n / 5, 0); break;
        case 2: five_k2((n - 2) / 5, 0); break;
        case 4: five_k((n - 4) / 5, 1); break;
        case 1: five_k2((n - 6) / 5, 1); break;
        case 3: five_k((n - 8) / 5, 2); break;
        }
        break;
    }
    if (d.base_order + 4 * d.lemma_count != n || d.base_budget + 6 * d.lemma_count != d.budget)
        fail(ErrorCode::PlanDesync, "decomposition arithmetic broke for n=" + std::to_string(n));
    return d;
}

// Strategy tables for the small bases, keyed by blue target order. Missing
// tables are solved on demand (all supported orders are cheap).
class TableStore {
public:
    std::shared_ptr<const StrategyTable> ensure(std::size_t blue_order) {
        auto it = tables_.find(blue_order);
        if (it != tables_.end()) return it->second;
        if (blue_order > 7)
            fail(ErrorCode::UnsupportedTarget,
                 "no strategy table for blue order " + std::to_string(blue_order));
        auto table = std::make_shared<StrategyTable>(
            extract_strategy(4, blue_order, round_budget(blue_order)));
        tables_[blue_order] = table;
        return table;
    }

    void put(StrategyTable table) {
        tables_[table.blue_order] = std::make_shared<StrategyTable>(std::move(table));
    }

    bool has(std::size_t blue_order) const { return tables_.count(blue_order) > 0; }

private:
    std::map<std::size_t, std::shared_ptr<const StrategyTable>> tables_;
};

enum class GadgetKind {
    G1, G2, G3, G4, G5, G6, G7, G8, G9, G10, G11, G12,
    G13, G14, G15, G16, G17, G18,
};

inline const char* gadget_kind_name(GadgetKind k) {
    static const char* names[] = {"G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9",
                                  "G10", "G11", "G12", "G13", "G14", "G15", "G16", "G17", "G18"};
    return names[static_cast<int>(k)];
}

// Connection role of a finished gadget.
enum class GadgetClass {
    UChain, // blue P5/P7/P10 with both ends next to a red edge (G4,G5,G8..G17)
    GSeven, // G7/G18: blue P4/P6 plus red P3 at v1v2v3
    GOne, // bad unit VI kept as-is
    GTwo, // bad unit VII kept as-is
    GThree, // plain blue path (G3, possibly stretched)
    GSix, // blue path with one red-incident end (G6, possibly stretched)
};

struct DrawnEdge {
    Edge e;
    Color c;
};

struct Gadget {
    GadgetKind kind = GadgetKind::G3;
    GadgetClass cls = GadgetClass::GThree;
    int weight = 1; // structural units represented (2 for G10..G12)
    std::vector<VertexId> blue_path; // realized path, orientation fixed
    // G7 roles (v4 may be a shrunk segment inside blue_path):
    VertexId v0 = 0, v1 = 0, v2 = 0, v3 = 0;
    std::array<VertexId, 6> w{}; // G1: w0..w5 / G2: w6..w10 in w[0..4]
    VertexId outsider = 0; // GSix: the red-attached vertex off the path
    std::vector<DrawnEdge> edges; // complete edge set, creation order
};

// Tally over the finished gadget store.
struct Ledger {
    std::array<int, 18> kind_count{};
    int c = 0; // (c4+c5+c8+c9) + 2(c10+c11+c12), pseudo kinds included
    int c_prime = 0; // c + c1 + c2 + c7
    int t = 0; // u-chain length
    int unit_total = 0; // sum of structural-unit weights

    int count(GadgetKind k) const { return kind_count[static_cast<int>(k)]; }
};

namespace detail {

// Template fidelity: the recorded edge set of a gadget must match its kind's
// template exactly (role-wise, color-exact). Stretched variants differ only in
// the blue-path interior length.
inline void check_gadget_template(const Gadget& g) {
    std::vector<std::pair<Edge, Color>> expect;
    auto blue = [&](VertexId a, VertexId b) { expect.push_back({Edge(a, b), Color::Blue}); };
    auto red = [&](VertexId a, VertexId b) { expect.push_back({Edge(a, b), Color::Red}); };
    auto path_blue = [&](const std::vector<VertexId>& p, std::size_t from, std::size_t to) {
        for (std::size_t i = from; i + 1 <= to; ++i) blue(p[i], p[i + 1]);
    };
    const auto& p = g.blue_path;
    switch (g.kind) {
    case GadgetKind::G1:
        blue(g.w[0], g.w[1]);
        red(g.w[1], g.w[2]);
        blue(g.w[2], g.w[3]);
        red(g.w[4], g.w[5]);
        break;
    case GadgetKind::G2:
        blue(g.w[0], g.w[1]);
        red(g.w[1], g.w[2]);
        red(g.w[3], g.w[4]);
        break;
    case GadgetKind::G3:
        path_blue(p, 0, p.size() - 1);
        break;
    case GadgetKind::G4:
        // p = p0, B..A, p4 with red chords p0-A and B-p4.
        path_blue(p, 0, p.size() - 1);
        red(p.front(), p[p.size() - 2]);
        red(p[1], p.back());
        break;
    case GadgetKind::G5:
        // p = A..B, p4, p0 with red A-p0 and p4-p5 (outsider).
        path_blue(p, 0, p.size() - 1);
        red(p.front(), p.back());
        red(p[p.size() - 2], g.outsider);
        break;
    case GadgetKind::G6:
        // p = A..B, p4, p5 with red A-outsider.
        path_blue(p, 0, p.size() - 1);
        red(p.front(), g.outsider);
        break;
    case GadgetKind::G7:
    case GadgetKind::G18:
        // p = v0, v1, [v4...], v3; red P3 v1 v2 v3.
        path_blue(p, 0, p.size() - 1);
        red(g.v1, g.v2);
        red(g.v2, g.v3);
        break;
    case GadgetKind::G8:
        // p = a1, a0, b4, b3, a2; red a1-a2.
        path_blue(p, 0, p.size() - 1);
        red(p.front(), p.back());
        break;
    case GadgetKind::G9:
        // p = a0, a1, b4, b3, a2; red a1-a2 and a0-b4.
        path_blue(p, 0, p.size() - 1);
        red(p[1], p.back());
        red(p[0], p[2]);
        break;
    case GadgetKind::G10:
        // p = p1,p0,p3,p2,r8,q1,q0,r9,q3,q2; reds p1-p2, q1-q2, p3-r8, r8-r9.
        path_blue(p, 0, p.size() - 1);
        red(p[0], p[3]);
        red(p[5], p[9]);
        red(p[2], p[4]);
        red(p[4], p[7]);
        break;
    case GadgetKind::G11:
        // p = q1,q0,p0,p1,r8,p3,p2,r9,q3,q2; reds p1-p2, q1-q2, r8-r9.
        path_blue(p, 0, p.size() - 1);
        red(p[3], p[6]);
        red(p[0], p[9]);
        red(p[4], p[7]);
        break;
    case GadgetKind::G12:
        // p = q0,q1,p0,p1,r8,p3,p2,r9,q3,q2; reds p1-p2, q1-q2, r8-r9, p0-q0.
        path_blue(p, 0, p.size() - 1);
        red(p[3], p[6]);
        red(p[1], p[9]);
        red(p[4], p[7]);
        red(p[0], p[2]);
        break;
    case GadgetKind::G13:
        // p = z3,z4,z5,z6,z7,z1,z2; red z2-z3.
        path_blue(p, 0, p.size() - 1);
        red(p.back(), p.front());
        break;
    case GadgetKind::G14:
        // p = z3,z4,z5,z6,z7,z2,z1; reds z2-z3, z1-z7.
        path_blue(p, 0, p.size() - 1);
        red(p[5], p[0]);
        red(p[6], p[4]);
        break;
    case GadgetKind::G15:
        // p = z5,z4,z3,z6,z7,z1,z2; reds z2-z3, z5-z6.
        path_blue(p, 0, p.size() - 1);
        red(p[6], p[2]);
        red(p[0], p[3]);
        break;
    case GadgetKind::G16:
        // p = z2,z1,z5,z4,z3,z6,z7; reds z2-z3, z5-z6, z1-z7.
        path_blue(p, 0, p.size() - 1);
        red(p[0], p[4]);
        red(p[2], p[5]);
        red(p[1], p[6]);
        break;
    case GadgetKind::G17:
        // p = z3,z6,z7,z2,z1,z4,z5; reds z2-z3, z3-z4, z5-z6.
        path_blue(p, 0, p.size() - 1);
        red(p[3], p[0]);
        red(p[0], p[5]);
        red(p[6], p[1]);
        break;
    }
    if (expect.size() != g.edges.size())
        fail(ErrorCode::ContractViolation,
             std::string(gadget_kind_name(g.kind)) + " edge count mismatch: recorded " +
                 std::to_string(g.edges.size()) + " expected " + std::to_string(expect.size()));
    for (const auto& [e, c] : expect) {
        bool found = false;
        for (const auto& d : g.edges)
            if (d.e == e && d.c == c) {
                found = true;
                break;
            }
        if (!found)
            fail(ErrorCode::ContractViolation, std::string(gadget_kind_name(g.kind)) +
                                                   " missing edge " + std::to_string(e.u) + "-" +
                                                   std::to_string(e.v));
    }
}

} // namespace detail

// Six-round micro-script: grows a blue path (order >= 2) by four vertices or
// forces a red P4 along the way. Reusable outside the full Builder.
class LemmaScript {
public:
    void start(std::vector<VertexId> path) {
        if (path.size() < 2)
            fail(ErrorCode::PlanDesync, "lemma extension needs a path of order >= 2");
        main_ = std::move(path);
        st_ = St::P3a;
    }

    bool active() const { return st_ != St::Idle && st_ != St::DoneSt; }
    bool finished() const { return st_ == St::DoneSt; }
    const std::vector<VertexId>& path() const { return main_; }

    struct Proposal {
        Edge e;
        bool forced = false;
    };

    Proposal propose(const ColoredGraph& g) const {
        const VertexId f1 = static_cast<VertexId>(g.vertex_count());
        const VertexId f2 = f1 + 1;
        const VertexId x = main_.front();
        const VertexId y = main_.back();
        switch (st_) {
        case St::P3a: return {Edge(f1, f2), false};
        case St::P3b: return {Edge(v_[1], f1), false};
        case St::P4bb: return {Edge(v_[2], f1), false};
        case St::P4rr: return {Edge(v_[2], f1), false};
        case St::P4br: return {Edge(v_[2], f1), false};
        case St::P4rb: return {Edge(v_[0], f1), false};
        case St::Bbb1: return {Edge(x, a_[0]), false};
        case St::Bbb2: return {Edge(y, a_[0]), false};
        case St::Bbb3: return {Edge(y, a_[3]), true};
        case St::Bbr1: return {Edge(x, a_[2]), false};
        case St::BbrB1: return {Edge(y, a_[3]), false};
        case St::BbrB2: return {Edge(y, f1), true};
        case St::BbrR1: return {Edge(y, a_[3]), true};
        case St::BbrR2: return {Edge(a_[3], a_[0]), true};
        case St::Brb1: return {Edge(x, a_[1]), false};
        case St::BrbB1: return {Edge(y, a_[2]), false};
        case St::BrbB2: return {Edge(y, a_[3]), true};
        case St::BrbR1: return {Edge(y, a_[2]), true};
        case St::BrbR2: return {Edge(x, a_[0]), true};
        case St::Brr1: return {Edge(y, a_[3]), true};
        case St::Brr2: return {Edge(a_[1], f1), true};
        case St::Brr3: return {Edge(a_[3], v5_), true};
        case St::Idle:
        case St::DoneSt: break;
        }
        fail(ErrorCode::PlanDesync, "lemma script proposed from a terminal state");
    }

    // Advances on the painter's color. Callers stop driving the script when
    // the game ends (a forced edge colored red).
    void observe(Edge e, Color c) {
        switch (st_) {
        case St::P3a:
            v_[0] = e.u;
            v_[1] = e.v;
            c1_ = c;
            st_ = St::P3b;
            return;
        case St::P3b:
            v_[2] = (e.u == v_[1]) ? e.v : e.u;
            c2_ = c;
            if (c1_ == Color::Blue && c2_ == Color::Blue) st_ = St::P4bb;
            else if (c1_ == Color::Red && c2_ == Color::Red) st_ = St::P4rr;
            else if (c1_ == Color::Blue) st_ = St::P4br;
            else st_ = St::P4rb;
            return;
        case St::P4bb:
            v_[3] = other(e, v_[2]);
            a_ = {v_[0], v_[1], v_[2], v_[3]};
            st_ = (c == Color::Blue) ? St::Bbb1 : St::Bbr1;
            return;
        case St::P4rr:
            v_[3] = other(e, v_[2]);
            // red reply completes a red P4; blue gives pattern brr reversed
            a_ = {v_[3], v_[2], v_[1], v_[0]};
            st_ = St::Brr1;
            return;
        case St::P4br:
            v_[3] = other(e, v_[2]);
            a_ = {v_[0], v_[1], v_[2], v_[3]};
            st_ = (c == Color::Blue) ? St::Brb1 : St::Brr1;
            return;
        case St::P4rb:
            v_[3] = other(e, v_[0]);
            if (c == Color::Blue) a_ = {v_[3], v_[0], v_[1], v_[2]}; // brb
            else a_ = {v_[2], v_[1], v_[0], v_[3]}; // brr
            st_ = (c == Color::Blue) ? St::Brb1 : St::Brr1;
            return;
        case St::Bbb1:
            if (c == Color::Blue) finish(reversed(main_), {a_[0], a_[1], a_[2], a_[3]});
            else st_ = St::Bbb2;
            return;
        case St::Bbb2:
            if (c == Color::Blue) finish(main_, {a_[0], a_[1], a_[2], a_[3]});
            else st_ = St::Bbb3;
            return;
        case St::Bbb3:
            finish(main_, {a_[3], a_[2], a_[1], a_[0]});
            return;
        case St::Bbr1:
            st_ = (c == Color::Blue) ? St::BbrB1 : St::BbrR1;
            return;
        case St::BbrB1:
            if (c == Color::Blue) finish_prefix({a_[0], a_[1], a_[2]}, main_, {a_[3]});
            else st_ = St::BbrB2;
            return;
        case St::BbrB2:
            finish_prefix({a_[0], a_[1], a_[2]}, main_, {other(e, main_.back())});
            return;
        case St::BbrR1:
            st_ = St::BbrR2;
            return;
        case St::BbrR2:
            finish(main_, {a_[3], a_[0], a_[1], a_[2]});
            return;
        case St::Brb1:
            st_ = (c == Color::Blue) ? St::BrbB1 : St::BrbR1;
            return;
        case St::BrbB1:
            if (c == Color::Blue) finish_prefix({a_[0], a_[1]}, main_, {a_[2], a_[3]});
            else st_ = St::BrbB2;
            return;
        case St::BrbB2:
            finish_prefix({a_[0], a_[1]}, main_, {a_[3], a_[2]});
            return;
        case St::BrbR1:
            st_ = St::BrbR2;
            return;
        case St::BrbR2:
            finish_prefix({a_[1], a_[0]}, main_, {a_[2], a_[3]});
            return;
        case St::Brr1:
            st_ = St::Brr2;
            return;
        case St::Brr2:
            v5_ = other(e, a_[1]);
            st_ = St::Brr3;
            return;
        case St::Brr3: {
            std::vector<VertexId> grown{a_[0], a_[1], v5_, a_[3]};
            std::vector<VertexId> rev = reversed(main_);
            grown.insert(grown.end(), rev.begin(), rev.end());
            main_ = std::move(grown);
            st_ = St::DoneSt;
            return;
        }
        case St::Idle:
        case St::DoneSt: break;
        }
        fail(ErrorCode::PlanDesync, "lemma script observed from a terminal state");
    }

private:
    enum class St {
        Idle, P3a, P3b, P4bb, P4rr, P4br, P4rb,
        Bbb1, Bbb2, Bbb3,
        Bbr1, BbrB1, BbrB2, BbrR1, BbrR2,
        Brb1, BrbB1, BrbB2, BrbR1, BrbR2,
        Brr1, Brr2, Brr3,
        DoneSt,
    };

    static VertexId other(Edge e, VertexId v) { return e.u == v ? e.v : e.u; }

    static std::vector<VertexId> reversed(std::vector<VertexId> p) {
        std::reverse(p.begin(), p.end());
        return p;
    }

    void finish(std::vector<VertexId> base, std::array<VertexId, 4> tail) {
        base.insert(base.end(), tail.begin(), tail.end());
        main_ = std::move(base);
        st_ = St::DoneSt;
    }

    void finish_prefix(std::vector<VertexId> head, const std::vector<VertexId>& mid,
                       std::vector<VertexId> tail) {
        head.insert(head.end(), mid.begin(), mid.end());
        head.insert(head.end(), tail.begin(), tail.end());
        main_ = std::move(head);
        st_ = St::DoneSt;
    }

    St st_ = St::Idle;
    std::vector<VertexId> main_;
    std::array<VertexId, 4> v_{};
    std::array<VertexId, 4> a_{};
    VertexId v5_ = 0;
    Color c1_ = Color::Red, c2_ = Color::Red;
};

} // namespace oramsey

#include "oramsey/builder_machine.hpp"
