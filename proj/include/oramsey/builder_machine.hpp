#pragma once

// PaperBuilder: the staged phase machine. Unit creation assembles structural
// units reacting to the painter's colors, extension grows each unit into one
// of the finished gadgets, connection chains the gadgets into one long blue
// path (splicing the kept red edge in the 5k+2 variant), and the lemma phase
// grows the path four vertices per six rounds until the target is reached.
// Included from builder.hpp.

#include <numeric>

namespace oramsey {

enum class BuildPhase { Base, Preamble, UnitCreation, Extension, Connection, Lemma, Finished };

struct RoundTag {
    BuildPhase phase;
    bool forced;
};

class PaperBuilder : public BuilderStrategy {
public:
    PaperBuilder(std::size_t blue_order, TableStore& tables)
        : decomp_(decompose_target(blue_order)) {
        if (decomp_.base == TargetDecomposition::Base::Small) {
            table_ = tables.ensure(decomp_.small_order);
            st_ = St::TablePlay;
        } else if (decomp_.base == TargetDecomposition::Base::FiveK) {
            k_ = decomp_.k;
            st_ = St::UcNewP3;
        } else {
            k_ = decomp_.k;
            st_ = St::PreProbe;
        }
    }

    Edge propose(const ColoredGraph& g) override {
        pending_ = compute(g);
        if (pending_.forced) {
            bool forceable;
            VertexId hi = std::max(pending_.e.u, pending_.e.v);
            if (hi >= g.vertex_count()) {
                ColoredGraph scratch = g;
                scratch.ensure_vertex(hi);
                forceable = would_create_red_p4(scratch, pending_.e.u, pending_.e.v);
            } else {
                forceable = would_create_red_p4(g, pending_.e.u, pending_.e.v);
            }
            if (!forceable)
                fail(ErrorCode::PlanDesync, "edge claimed forced but red would be safe");
            ++forced_checked_;
        }
        return pending_.e;
    }

    void observe(const ColoredGraph& g, Edge e, Color c) override {
        tags_.push_back({phase(), pending_.forced});
        if (pending_.forced && c == Color::Red) {
            st_ = St::Done; // red P4 on the board; the engine ends the game
            return;
        }
        dispatch(g, e, c);
    }

    // --- introspection -----------------------------------------------------

    const TargetDecomposition& decomposition() const { return decomp_; }
    const std::vector<Gadget>& gadgets() const { return gadgets_; }
    const std::vector<VertexId>& main_path() const { return main_path_; }
    const std::vector<RoundTag>& round_tags() const { return tags_; }
    std::size_t forced_checked() const { return forced_checked_; }
    bool blue_edges_all_on_path() const { return blue_on_path_; }

    BuildPhase phase() const {
        switch (st_) {
        case St::TablePlay: return BuildPhase::Base;
        case St::PreProbe:
        case St::S3RZ47:
        case St::S3NrA:
        case St::S3NrB:
        case St::S3NrRR:
        case St::S3NrRR_R1:
        case St::S3NrRR_R2:
        case St::S3NrRR_R3:
        case St::S3NrRR_B:
        case St::S3NrBR:
        case St::S3NrBR_B:
        case St::S3NrBR_B2:
        case St::S3NrBR_R:
        case St::S3NrBR_R2:
        case St::S3NrBR_R3: return BuildPhase::Preamble;
        case St::UcNewP3:
        case St::UcP3b:
        case St::UcRrExt:
        case St::UcBrProbe:
        case St::UcBrV36e:
        case St::UcBrV36:
        case St::UcLastProbe: return BuildPhase::UnitCreation;
        case St::ExtIP1:
        case St::ExtIP2:
        case St::ExtIG4a:
        case St::ExtIG4b:
        case St::ExtIRb:
        case St::ExtIG5:
        case St::ExtIIa:
        case St::ExtIIb:
        case St::ExtIIIj:
        case St::ExtIIIg7:
        case St::ExtIIIv04:
        case St::ExtIIIg9:
        case St::ExtIVt1:
        case St::ExtIVt2:
        case St::ExtIVg10a:
        case St::ExtIVg10b:
        case St::ExtIVg10c:
        case St::ExtIVg10d:
        case St::ExtIVbb1:
        case St::ExtIVbb2:
        case St::ExtIVprobe:
        case St::ExtIVg12:
        case St::ExtV1:
        case St::ExtV2:
        case St::ExtVprobe: return BuildPhase::Extension;
        case St::ConnForced:
        case St::ConnC2aProbe:
        case St::ConnC2aFin:
        case St::ConnC2aV5a:
        case St::ConnC2aV5b:
        case St::ConnC2azProbe:
        case St::ConnC2azFin:
        case St::ConnC2azMid:
        case St::ConnC2azProbe2:
        case St::ConnC2azFin2:
        case St::ConnZ36G3a:
        case St::ConnZ36G3b:
        case St::ConnZ36G3m:
        case St::ConnZ36G3f1:
        case St::ConnZ36G3f2:
        case St::ConnC1a1:
        case St::ConnC1a2:
        case St::ConnC1a3:
        case St::ConnC1b1:
        case St::ConnC1b2: return BuildPhase::Connection;
        case St::LemmaSt: return BuildPhase::Lemma;
        case St::Done: return BuildPhase::Finished;
        }
        return BuildPhase::Finished;
    }

    Ledger ledger() const {
        Ledger l;
        for (const Gadget& g : gadgets_) {
            ++l.kind_count[static_cast<int>(g.kind)];
            if (g.cls == GadgetClass::UChain) {
                l.c += g.weight;
                ++l.t;
            }
            l.unit_total += g.weight;
        }
        l.c_prime = l.c + l.count(GadgetKind::G1) + l.count(GadgetKind::G2) +
                    l.count(GadgetKind::G7) + l.count(GadgetKind::G18);
        return l;
    }

private:
    enum class St {
        TablePlay,
        PreProbe,
        S3RZ47,
        S3NrA,
        S3NrB,
        S3NrRR,
        S3NrRR_R1,
        S3NrRR_R2,
        S3NrRR_R3,
        S3NrRR_B,
        S3NrBR,
        S3NrBR_B,
        S3NrBR_B2,
        S3NrBR_R,
        S3NrBR_R2,
        S3NrBR_R3,
        UcNewP3,
        UcP3b,
        UcRrExt,
        UcBrProbe,
        UcBrV36e,
        UcBrV36,
        UcLastProbe,
        ExtIP1,
        ExtIP2,
        ExtIG4a,
        ExtIG4b,
        ExtIRb,
        ExtIG5,
        ExtIIa,
        ExtIIb,
        ExtIIIj,
        ExtIIIg7,
        ExtIIIv04,
        ExtIIIg9,
        ExtIVt1,
        ExtIVt2,
        ExtIVg10a,
        ExtIVg10b,
        ExtIVg10c,
        ExtIVg10d,
        ExtIVbb1,
        ExtIVbb2,
        ExtIVprobe,
        ExtIVg12,
        ExtV1,
        ExtV2,
        ExtVprobe,
        ConnForced,
        ConnC2aProbe,
        ConnC2aFin,
        ConnC2aV5a,
        ConnC2aV5b,
        ConnC2azProbe,
        ConnC2azFin,
        ConnC2azMid,
        ConnC2azProbe2,
        ConnC2azFin2,
        ConnZ36G3a,
        ConnZ36G3b,
        ConnZ36G3m,
        ConnZ36G3f1,
        ConnZ36G3f2,
        ConnC1a1,
        ConnC1a2,
        ConnC1a3,
        ConnC1b1,
        ConnC1b2,
        LemmaSt,
        Done,
    };

    struct Unit {
        enum class Kind { I, II, III, IV, V } kind = Kind::I;
        std::vector<VertexId> path; // I: odd blue path
        std::array<VertexId, 4> w{}; // II: w0..w3 (w0w1 blue, w1w2 w2w3 red)
        std::array<VertexId, 5> t{}; // III: a0,a1 blue; a1,a2 red; b3,b4 blue
        std::array<VertexId, 4> pa{}, pb{}; // IV: two brb paths
        std::array<VertexId, 2> rr{}; // IV: red edge
        std::array<VertexId, 2> red{}; // V: the lone red edge
        std::vector<DrawnEdge> edges;
        int weight() const { return kind == Kind::IV ? 2 : 1; }
    };

    struct BadUnit {
        enum class Kind { None, V, VI, VII } kind = Kind::None;
        std::array<VertexId, 2> red{}; // V and VI's extra red edge
        std::array<VertexId, 4> p4{}; // VI: brb path w0..w3
        std::array<VertexId, 5> vii{}; // VII: w6..w10
        std::vector<DrawnEdge> edges;
    };

    struct Proposal {
        Edge e;
        bool forced = false;
    };

    static VertexId other(Edge e, VertexId v) { return e.u == v ? e.v : e.u; }

    static std::vector<VertexId> reversed(std::vector<VertexId> p) {
        std::reverse(p.begin(), p.end());
        return p;
    }

    template <typename... Parts>
    static std::vector<VertexId> join(const Parts&... parts) {
        std::vector<VertexId> out;
        (out.insert(out.end(), parts.begin(), parts.end()), ...);
        return out;
    }

    // ------------------------------------------------------------------ propose

    Proposal compute(const ColoredGraph& g) const {
        const VertexId f1 = static_cast<VertexId>(g.vertex_count());
        const VertexId f2 = f1 + 1;
        switch (st_) {
        case St::TablePlay: return {apply_table_move(*table_, g), false};
        case St::PreProbe: return {Edge(f1, f2), false};
        case St::S3RZ47: return {Edge(probe_[0].v, f1), false};
        case St::S3NrA: return {Edge(probe_[0].v, f1), false};
        case St::S3NrB: return {Edge(z3_, probe_[1].u), false};
        case St::S3NrRR: return {Edge(zz_[5], zz_[6]), false};
        case St::S3NrRR_R1: return {Edge(zz_[1], zz_[4]), true};
        case St::S3NrRR_R2: return {Edge(zz_[2], zz_[7]), true};
        case St::S3NrRR_R3: return {Edge(zz_[3], zz_[6]), true};
        case St::S3NrRR_B: return {Edge(zz_[2], zz_[7]), true};
        case St::S3NrBR: return {Edge(zz_[5], zz_[6]), false};
        case St::S3NrBR_B: return {Edge(zz_[1], zz_[7]), false};
        case St::S3NrBR_B2: return {Edge(zz_[2], zz_[7]), true};
        case St::S3NrBR_R: return {Edge(zz_[3], zz_[6]), true};
        case St::S3NrBR_R2: return {Edge(zz_[1], zz_[7]), false};
        case St::S3NrBR_R3: return {Edge(zz_[1], zz_[5]), true};
        case St::UcNewP3: return {Edge(f1, f2), false};
        case St::UcP3b: return {Edge(uc_v2_, f1), false};
        case St::UcRrExt: return {Edge(uc_v3_, f1), true};
        case St::UcBrProbe: return {Edge(f1, f2), false};
        case St::UcBrV36e: return {Edge(uc_redend_, f1), false};
        case St::UcBrV36: return {Edge(uc_redend_, f1), false};
        case St::UcLastProbe: return {Edge(f1, f2), false};
        case St::ExtIP1: return {Edge(cur_.path.front(), f1), false};
        case St::ExtIP2: return {Edge(cur_.path.back(), f1), false};
        case St::ExtIG4a: return {Edge(ei_p0_, cur_.path.back()), true};
        case St::ExtIG4b: return {Edge(cur_.path.front(), ei_p4_), true};
        case St::ExtIRb: return {Edge(ei_p4_, f1), false};
        case St::ExtIG5: return {Edge(ei_p0_, ei_p4_), true};
        case St::ExtIIa: return {Edge(cur_.w[1], f1), true};
        case St::ExtIIb: return {Edge(cur_.w[3], eii_v4_), true};
        case St::ExtIIIj: return {Edge(cur_.t[2], cur_.t[3]), false};
        case St::ExtIIIg7: return {Edge(cur_.t[1], cur_.t[4]), true};
        case St::ExtIIIv04: return {Edge(cur_.t[0], cur_.t[4]), false};
        case St::ExtIIIg9: return {Edge(cur_.t[1], cur_.t[4]), true};
        case St::ExtIVt1: return {Edge(cur_.pa[3], cur_.rr[0]), false};
        case St::ExtIVt2: return {Edge(cur_.pb[3], cur_.rr[1]), eiv_t1_red_};
        case St::ExtIVg10a: return {Edge(cur_.pa[0], cur_.pa[3]), true};
        case St::ExtIVg10b: return {Edge(cur_.pa[2], cur_.rr[0]), true};
        case St::ExtIVg10c: return {Edge(cur_.pb[1], cur_.rr[0]), true};
        case St::ExtIVg10d: return {Edge(cur_.pb[0], cur_.rr[1]), true};
        case St::ExtIVbb1: return {Edge(cur_.pa[1], cur_.rr[0]), true};
        case St::ExtIVbb2: return {Edge(cur_.pa[2], cur_.rr[1]), true};
        case St::ExtIVprobe: return {Edge(cur_.pa[0], cur_.pb[0]), false};
        case St::ExtIVg12: return {Edge(cur_.pa[0], cur_.pb[1]), true};
        case St::ExtV1: return {Edge(cur_.red[1], f1), false};
        case St::ExtV2: return {Edge(ev_x2_, f1), true};
        case St::ExtVprobe: return {Edge(f1, f2), false};
        case St::ConnForced: return {conn_forced_[conn_idx_], true};
        case St::ConnC2aProbe: return {Edge(c2_g7().v2, c2_partner().blue_path.back()), false};
        case St::ConnC2aFin: return {Edge(c2_g7().v3, c2_partner().blue_path.front()), true};
        case St::ConnC2aV5a: return {Edge(c2_g7().v3, f1), true};
        case St::ConnC2aV5b: return {Edge(c2_partner().blue_path.back(), c2a_v5_), true};
        case St::ConnC2azProbe: return {Edge(zpair_[0], c2_partner().blue_path.back()), false};
        case St::ConnC2azFin: return {Edge(c2_g7().v3, c2_partner().blue_path.front()), true};
        case St::ConnC2azMid: return {Edge(c2_g7().v3, c2_partner().blue_path.front()), true};
        case St::ConnC2azProbe2: return {Edge(zpair_[1], c2_g7().blue_path.front()), false};
        case St::ConnC2azFin2: return {Edge(zpair_[1], c2_partner().blue_path.back()), true};
        case St::ConnZ36G3a: return {Edge(zpair_[0], z36_partner().blue_path.front()), false};
        case St::ConnZ36G3b: return {Edge(zpair_[1], z36_partner().blue_path.back()), false};
        case St::ConnZ36G3m: return {Edge(zpair_[0], f1), true};
        case St::ConnZ36G3f1: return {Edge(zpair_[1], z36_partner().blue_path.back()), true};
        case St::ConnZ36G3f2: return {Edge(zpair_[1], f1), true};
        case St::ConnC1a1: return {Edge(c1_gadget().blue_path.front(), seed_.front()), false};
        case St::ConnC1a2: return {Edge(c1_gadget().blue_path.front(), seed_.back()), false};
        case St::ConnC1a3: return {Edge(c1_gadget().blue_path.back(), seed_.back()), true};
        case St::ConnC1b1: return {Edge(c1_gadget().blue_path.front(), seed_.front()), false};
        case St::ConnC1b2: return {Edge(c1_gadget().blue_path.back(), seed_.front()), true};
        case St::LemmaSt: {
            auto p = lemma_.propose(g);
            return {p.e, p.forced};
        }
        case St::Done: break;
        }
        fail(ErrorCode::PlanDesync, "builder asked to move after its plan finished");
    }

    // ------------------------------------------------------------------ observe

    void dispatch(const ColoredGraph& g, Edge e, Color c) {
        switch (st_) {
        case St::TablePlay: {
            auto [order, witness] = longest_blue_path(g);
            if (order >= decomp_.base_order) {
                main_path_ = witness;
                begin_lemmas(g);
            }
            return;
        }

        // ---- preamble (5k+2): disjoint probes until a red or three blues
        case St::PreProbe: {
            if (c == Color::Red) {
                zpair_ = {e.u, e.v};
                has_zpair_ = true;
                if (probe_count_ == 0) {
                    st_ = St::UcNewP3;
                } else if (probe_count_ == 1) {
                    // the blue probe is the first edge of the unit in progress
                    uc_v1_ = probe_[0].u;
                    uc_v2_ = probe_[0].v;
                    uc_c1_ = Color::Blue;
                    uc_edges_ = {{probe_[0], Color::Blue}};
                    st_ = St::UcP3b;
                } else {
                    st_ = St::S3RZ47;
                }
                return;
            }
            probe_[probe_count_++] = e;
            if (probe_count_ == 3) {
                pre_edges_ = {{probe_[0], Color::Blue},
                              {probe_[1], Color::Blue},
                              {probe_[2], Color::Blue}};
                st_ = St::S3NrA;
            }
            return;
        }
        case St::S3RZ47: {
            // two blue probes z3z4, z5z6 on the board; e = (z4, z7)
            VertexId z7 = other(e, probe_[0].v);
            if (c == Color::Red) {
                Unit u;
                u.kind = Unit::Kind::III;
                u.t = {probe_[0].u, probe_[0].v, z7, probe_[1].u, probe_[1].v};
                u.edges = {{probe_[0], Color::Blue}, {e, Color::Red}, {probe_[1], Color::Blue}};
                unit_done(g, std::move(u));
            } else {
                Unit u;
                u.kind = Unit::Kind::I;
                u.path = {probe_[0].u, probe_[0].v, z7};
                u.edges = {{probe_[0], Color::Blue}, {e, Color::Blue}};
                resume_edge_ = probe_[1]; // z5z6 starts the next unit
                unit_done(g, std::move(u));
            }
            return;
        }

        // ---- preamble: no red in three rounds
        case St::S3NrA:
            z3_ = other(e, probe_[0].v);
            s3nr_c1_ = c;
            pre_edges_.push_back({e, c});
            st_ = St::S3NrB;
            return;
        case St::S3NrB: {
            pre_edges_.push_back({e, c});
            Color c2 = c;
            if (s3nr_c1_ == Color::Blue && c2 == Color::Blue) {
                // blue P5 z1..z5 acts as a type-I unit; third probe starts the next one
                Unit u;
                u.kind = Unit::Kind::I;
                u.path = {probe_[0].u, probe_[0].v, z3_, probe_[1].u, probe_[1].v};
                u.edges = {{probe_[0], Color::Blue},
                           {Edge(probe_[0].v, z3_), Color::Blue},
                           {Edge(z3_, probe_[1].u), Color::Blue},
                           {probe_[1], Color::Blue}};
                pre_edges_.clear();
                resume_edge_ = probe_[2];
                unit_done(g, std::move(u));
                return;
            }
            // zz_[1..7] mirror the construction roles; probe3 supplies z6z7
            if (s3nr_c1_ == Color::Red && c2 == Color::Red) {
                zz_ = {0, probe_[0].u, probe_[0].v, z3_, probe_[1].u, probe_[1].v,
                       probe_[2].u, probe_[2].v};
                st_ = St::S3NrRR;
            } else if (s3nr_c1_ == Color::Red) {
                // z2z3 red, z3z4 blue: reference orientation
                zz_ = {0, probe_[0].u, probe_[0].v, z3_, probe_[1].u, probe_[1].v,
                       probe_[2].u, probe_[2].v};
                st_ = St::S3NrBR;
            } else {
                // mirror: swap the two joined probes
                zz_ = {0, probe_[1].v, probe_[1].u, z3_, probe_[0].v, probe_[0].u,
                       probe_[2].u, probe_[2].v};
                st_ = St::S3NrBR;
            }
            return;
        }
        case St::S3NrRR:
            pre_edges_.push_back({e, c});
            st_ = (c == Color::Red) ? St::S3NrRR_R1 : St::S3NrRR_B;
            return;
        case St::S3NrRR_R1:
            pre_edges_.push_back({e, c});
            st_ = St::S3NrRR_R2;
            return;
        case St::S3NrRR_R2:
            pre_edges_.push_back({e, c});
            st_ = St::S3NrRR_R3;
            return;
        case St::S3NrRR_R3:
            pre_edges_.push_back({e, c});
            register_pseudo_uchain(g, GadgetKind::G17,
                                   {zz_[3], zz_[6], zz_[7], zz_[2], zz_[1], zz_[4], zz_[5]});
            return;
        case St::S3NrRR_B: {
            pre_edges_.push_back({e, c});
            Gadget gd;
            gd.kind = GadgetKind::G18;
            gd.cls = GadgetClass::GSeven;
            gd.weight = 1;
            gd.v0 = zz_[1];
            gd.v1 = zz_[2];
            gd.v2 = zz_[3];
            gd.v3 = zz_[4];
            gd.blue_path = {zz_[1], zz_[2], zz_[7], zz_[6], zz_[5], zz_[4]};
            gd.edges = pre_edges_;
            pre_edges_.clear();
            ++good_;
            register_gadget(std::move(gd));
            after_unit_step(g);
            return;
        }
        case St::S3NrBR:
            pre_edges_.push_back({e, c});
            st_ = (c == Color::Blue) ? St::S3NrBR_B : St::S3NrBR_R;
            return;
        case St::S3NrBR_B:
            pre_edges_.push_back({e, c});
            if (c == Color::Blue)
                register_pseudo_uchain(g, GadgetKind::G13,
                                       {zz_[3], zz_[4], zz_[5], zz_[6], zz_[7], zz_[1], zz_[2]});
            else
                st_ = St::S3NrBR_B2;
            return;
        case St::S3NrBR_B2:
            pre_edges_.push_back({e, c});
            register_pseudo_uchain(g, GadgetKind::G14,
                                   {zz_[3], zz_[4], zz_[5], zz_[6], zz_[7], zz_[2], zz_[1]});
            return;
        case St::S3NrBR_R:
            pre_edges_.push_back({e, c});
            st_ = St::S3NrBR_R2;
            return;
        case St::S3NrBR_R2:
            pre_edges_.push_back({e, c});
            if (c == Color::Blue)
                register_pseudo_uchain(g, GadgetKind::G15,
                                       {zz_[5], zz_[4], zz_[3], zz_[6], zz_[7], zz_[1], zz_[2]});
            else
                st_ = St::S3NrBR_R3;
            return;
        case St::S3NrBR_R3:
            pre_edges_.push_back({e, c});
            register_pseudo_uchain(g, GadgetKind::G16,
                                   {zz_[2], zz_[1], zz_[5], zz_[4], zz_[3], zz_[6], zz_[7]});
            return;

        // ---- unit creation
        case St::UcNewP3:
            uc_v1_ = e.u;
            uc_v2_ = e.v;
            uc_c1_ = c;
            uc_edges_ = {{e, c}};
            st_ = St::UcP3b;
            return;
        case St::UcP3b: {
            uc_v3_ = other(e, uc_v2_);
            uc_edges_.push_back({e, c});
            Color c2 = c;
            if (uc_c1_ == Color::Blue && c2 == Color::Blue) {
                Unit u;
                u.kind = Unit::Kind::I;
                u.path = {uc_v1_, uc_v2_, uc_v3_};
                u.edges = uc_edges_;
                unit_done(g, std::move(u));
                return;
            }
            if (uc_c1_ == Color::Red && c2 == Color::Red) {
                st_ = St::UcRrExt;
                return;
            }
            if (uc_c1_ == Color::Blue) { // br: blue end v1, red end v3
                uc_e1_ = uc_v1_;
                uc_mid_ = uc_v2_;
                uc_redend_ = uc_v3_;
            } else { // rb: reverse
                uc_e1_ = uc_v3_;
                uc_mid_ = uc_v2_;
                uc_redend_ = uc_v1_;
            }
            if (is_last_unit()) st_ = St::UcLastProbe;
            else if (bad_.kind == BadUnit::Kind::None) st_ = St::UcBrProbe;
            else st_ = St::UcBrV36;
            return;
        }
        case St::UcRrExt: {
            // blue reply: brr unit II read backwards from the fresh vertex
            Unit u;
            u.kind = Unit::Kind::II;
            u.w = {other(e, uc_v3_), uc_v3_, uc_v2_, uc_v1_};
            uc_edges_.push_back({e, c});
            u.edges = uc_edges_;
            unit_done(g, std::move(u));
            return;
        }
        case St::UcBrProbe:
            uc_probe_ = {e.u, e.v};
            if (c == Color::Blue) {
                Unit u;
                u.kind = Unit::Kind::III;
                u.t = {uc_e1_, uc_mid_, uc_redend_, e.u, e.v};
                uc_edges_.push_back({e, c});
                u.edges = uc_edges_;
                unit_done(g, std::move(u));
            } else {
                st_ = St::UcBrV36e;
            }
            return;
        case St::UcBrV36e: {
            VertexId v6 = other(e, uc_redend_);
            if (c == Color::Red) {
                Unit u;
                u.kind = Unit::Kind::II;
                u.w = {uc_e1_, uc_mid_, uc_redend_, v6};
                uc_edges_.push_back({e, c});
                u.edges = uc_edges_;
                bad_.kind = BadUnit::Kind::V;
                bad_.red = uc_probe_;
                bad_.edges = {{Edge(uc_probe_[0], uc_probe_[1]), Color::Red}};
                unit_done(g, std::move(u));
            } else {
                bad_.kind = BadUnit::Kind::VI;
                bad_.p4 = {uc_e1_, uc_mid_, uc_redend_, v6};
                bad_.red = uc_probe_;
                uc_edges_.push_back({e, c});
                uc_edges_.push_back({Edge(uc_probe_[0], uc_probe_[1]), Color::Red});
                bad_.edges = uc_edges_;
                after_unit_step(g);
            }
            return;
        }
        case St::UcBrV36: {
            VertexId v6 = other(e, uc_redend_);
            uc_edges_.push_back({e, c});
            if (c == Color::Red) {
                Unit u;
                u.kind = Unit::Kind::II;
                u.w = {uc_e1_, uc_mid_, uc_redend_, v6};
                u.edges = uc_edges_;
                unit_done(g, std::move(u));
            } else if (bad_.kind == BadUnit::Kind::V) {
                bad_.kind = BadUnit::Kind::VI;
                bad_.p4 = {uc_e1_, uc_mid_, uc_redend_, v6};
                bad_.edges.insert(bad_.edges.end(), uc_edges_.begin(), uc_edges_.end());
                after_unit_step(g);
            } else { // bad VI + new brb quadruple: good unit of type IV
                Unit u;
                u.kind = Unit::Kind::IV;
                u.pa = bad_.p4;
                u.pb = {uc_e1_, uc_mid_, uc_redend_, v6};
                u.rr = bad_.red;
                u.edges = bad_.edges;
                u.edges.insert(u.edges.end(), uc_edges_.begin(), uc_edges_.end());
                bad_ = BadUnit{};
                unit_done(g, std::move(u));
            }
            return;
        }
        case St::UcLastProbe:
            if (c == Color::Blue) {
                Unit u;
                u.kind = Unit::Kind::III;
                u.t = {uc_e1_, uc_mid_, uc_redend_, e.u, e.v};
                uc_edges_.push_back({e, c});
                u.edges = uc_edges_;
                unit_done(g, std::move(u));
            } else {
                bad_.kind = BadUnit::Kind::VII;
                bad_.vii = {uc_e1_, uc_mid_, uc_redend_, e.u, e.v};
                uc_edges_.push_back({e, c});
                bad_.edges = uc_edges_;
                after_unit_step(g);
            }
            return;

        // ---- extension
        case St::ExtIP1:
            ei_p0_ = other(e, cur_.path.front());
            ei_c1_ = c;
            cur_.edges.push_back({e, c});
            st_ = St::ExtIP2;
            return;
        case St::ExtIP2: {
            ei_p4_ = other(e, cur_.path.back());
            cur_.edges.push_back({e, c});
            if (ei_c1_ == Color::Blue && c == Color::Blue) {
                Gadget gd = base_gadget(GadgetKind::G3, GadgetClass::GThree);
                gd.blue_path = join(std::vector<VertexId>{ei_p0_}, cur_.path,
                                    std::vector<VertexId>{ei_p4_});
                register_gadget(std::move(gd));
                next_extension(g);
            } else if (ei_c1_ == Color::Red && c == Color::Red) {
                st_ = St::ExtIG4a;
            } else if (ei_c1_ == Color::Red) {
                st_ = St::ExtIRb; // red at the front end; probe from the back
            } else {
                // mirror so the red probe sits at the front
                std::reverse(cur_.path.begin(), cur_.path.end());
                std::swap(ei_p0_, ei_p4_);
                st_ = St::ExtIRb;
            }
            return;
        }
        case St::ExtIG4a:
            cur_.edges.push_back({e, c});
            st_ = St::ExtIG4b;
            return;
        case St::ExtIG4b: {
            cur_.edges.push_back({e, c});
            Gadget gd = base_gadget(GadgetKind::G4, GadgetClass::UChain);
            gd.blue_path = join(std::vector<VertexId>{ei_p0_}, reversed(cur_.path),
                                std::vector<VertexId>{ei_p4_});
            register_gadget(std::move(gd));
            next_extension(g);
            return;
        }
        case St::ExtIRb: {
            VertexId p5 = other(e, ei_p4_);
            cur_.edges.push_back({e, c});
            if (c == Color::Red) {
                ei_p5_ = p5;
                st_ = St::ExtIG5;
            } else {
                Gadget gd = base_gadget(GadgetKind::G6, GadgetClass::GSix);
                gd.blue_path = join(cur_.path, std::vector<VertexId>{ei_p4_, p5});
                gd.outsider = ei_p0_;
                register_gadget(std::move(gd));
                next_extension(g);
            }
            return;
        }
        case St::ExtIG5: {
            cur_.edges.push_back({e, c});
            Gadget gd = base_gadget(GadgetKind::G5, GadgetClass::UChain);
            gd.blue_path = join(cur_.path, std::vector<VertexId>{ei_p4_, ei_p0_});
            gd.outsider = ei_p5_;
            register_gadget(std::move(gd));
            next_extension(g);
            return;
        }
        case St::ExtIIa:
            eii_v4_ = other(e, cur_.w[1]);
            cur_.edges.push_back({e, c});
            st_ = St::ExtIIb;
            return;
        case St::ExtIIb: {
            cur_.edges.push_back({e, c});
            Gadget gd = base_gadget(GadgetKind::G7, GadgetClass::GSeven);
            gd.v0 = cur_.w[0];
            gd.v1 = cur_.w[1];
            gd.v2 = cur_.w[2];
            gd.v3 = cur_.w[3];
            gd.blue_path = {cur_.w[0], cur_.w[1], eii_v4_, cur_.w[3]};
            register_gadget(std::move(gd));
            next_extension(g);
            return;
        }
        case St::ExtIIIj:
            cur_.edges.push_back({e, c});
            st_ = (c == Color::Red) ? St::ExtIIIg7 : St::ExtIIIv04;
            return;
        case St::ExtIIIg7: {
            cur_.edges.push_back({e, c});
            Gadget gd = base_gadget(GadgetKind::G7, GadgetClass::GSeven);
            gd.v0 = cur_.t[0];
            gd.v1 = cur_.t[1];
            gd.v2 = cur_.t[2];
            gd.v3 = cur_.t[3];
            gd.blue_path = {cur_.t[0], cur_.t[1], cur_.t[4], cur_.t[3]};
            register_gadget(std::move(gd));
            next_extension(g);
            return;
        }
        case St::ExtIIIv04:
            cur_.edges.push_back({e, c});
            if (c == Color::Blue) {
                Gadget gd = base_gadget(GadgetKind::G8, GadgetClass::UChain);
                gd.blue_path = {cur_.t[1], cur_.t[0], cur_.t[4], cur_.t[3], cur_.t[2]};
                register_gadget(std::move(gd));
                next_extension(g);
            } else {
                st_ = St::ExtIIIg9;
            }
            return;
        case St::ExtIIIg9: {
            cur_.edges.push_back({e, c});
            Gadget gd = base_gadget(GadgetKind::G9, GadgetClass::UChain);
            gd.blue_path = {cur_.t[0], cur_.t[1], cur_.t[4], cur_.t[3], cur_.t[2]};
            register_gadget(std::move(gd));
            next_extension(g);
            return;
        }
        case St::ExtIVt1:
            eiv_t1_red_ = (c == Color::Red);
            cur_.edges.push_back({e, c});
            st_ = St::ExtIVt2;
            return;
        case St::ExtIVt2:
            cur_.edges.push_back({e, c});
            if (eiv_t1_red_) {
                // pa-side probe red, pb-side forced blue: G10 as drawn
                st_ = St::ExtIVg10a;
            } else if (c == Color::Red) {
                // mirror: swap the quadruples and the red-edge ends
                std::swap(cur_.pa, cur_.pb);
                std::swap(cur_.rr[0], cur_.rr[1]);
                st_ = St::ExtIVg10a;
            } else {
                st_ = St::ExtIVbb1;
            }
            return;
        case St::ExtIVg10a:
        case St::ExtIVg10b:
        case St::ExtIVg10c:
            cur_.edges.push_back({e, c});
            st_ = st_ == St::ExtIVg10a ? St::ExtIVg10b
                  : st_ == St::ExtIVg10b ? St::ExtIVg10c
                                         : St::ExtIVg10d;
            return;
        case St::ExtIVg10d: {
            cur_.edges.push_back({e, c});
            Gadget gd = base_gadget(GadgetKind::G10, GadgetClass::UChain);
            gd.weight = 2;
            gd.blue_path = {cur_.pa[1], cur_.pa[0], cur_.pa[3], cur_.pa[2], cur_.rr[0],
                            cur_.pb[1], cur_.pb[0], cur_.rr[1], cur_.pb[3], cur_.pb[2]};
            register_gadget(std::move(gd));
            next_extension(g);
            return;
        }
        case St::ExtIVbb1:
            cur_.edges.push_back({e, c});
            st_ = St::ExtIVbb2;
            return;
        case St::ExtIVbb2:
            cur_.edges.push_back({e, c});
            st_ = St::ExtIVprobe;
            return;
        case St::ExtIVprobe:
            cur_.edges.push_back({e, c});
            if (c == Color::Blue) {
                Gadget gd = base_gadget(GadgetKind::G11, GadgetClass::UChain);
                gd.weight = 2;
                gd.blue_path = {cur_.pb[1], cur_.pb[0], cur_.pa[0], cur_.pa[1], cur_.rr[0],
                                cur_.pa[3], cur_.pa[2], cur_.rr[1], cur_.pb[3], cur_.pb[2]};
                register_gadget(std::move(gd));
                next_extension(g);
            } else {
                st_ = St::ExtIVg12;
            }
            return;
        case St::ExtIVg12: {
            cur_.edges.push_back({e, c});
            Gadget gd = base_gadget(GadgetKind::G12, GadgetClass::UChain);
            gd.weight = 2;
            gd.blue_path = {cur_.pb[0], cur_.pb[1], cur_.pa[0], cur_.pa[1], cur_.rr[0],
                            cur_.pa[3], cur_.pa[2], cur_.rr[1], cur_.pb[3], cur_.pb[2]};
            register_gadget(std::move(gd));
            next_extension(g);
            return;
        }
        case St::ExtV1: {
            VertexId x2 = other(e, cur_.red[1]);
            cur_.edges.push_back({e, c});
            if (c == Color::Red) {
                ev_x2_ = x2;
                st_ = St::ExtV2;
            } else {
                ev_x2_ = x2;
                st_ = St::ExtVprobe;
            }
            return;
        }
        case St::ExtV2: {
            // x2x3 forced blue: unit II shape, extend it to G7
            VertexId x3 = other(e, ev_x2_);
            cur_.edges.push_back({e, c});
            cur_.kind = Unit::Kind::II;
            cur_.w = {x3, ev_x2_, cur_.red[1], cur_.red[0]};
            st_ = St::ExtIIa;
            return;
        }
        case St::ExtVprobe:
            cur_.edges.push_back({e, c});
            if (c == Color::Blue) {
                cur_.kind = Unit::Kind::III;
                cur_.t = {ev_x2_, cur_.red[1], cur_.red[0], e.u, e.v};
                st_ = St::ExtIIIj;
            } else {
                Gadget gd = base_gadget(GadgetKind::G2, GadgetClass::GTwo);
                gd.w = {ev_x2_, cur_.red[1], cur_.red[0], e.u, e.v, 0};
                register_gadget(std::move(gd));
                next_extension(g);
            }
            return;

        // ---- connection
        case St::ConnForced:
            ++conn_idx_;
            ++conn_drawn_;
            if (conn_idx_ == conn_forced_.size()) after_forced_prefix(g);
            return;
        case St::ConnC2aProbe:
            ++claim2_drawn_;
            if (c == Color::Blue) st_ = St::ConnC2aFin;
            else st_ = St::ConnC2aV5a;
            return;
        case St::ConnC2aFin:
            ++claim2_drawn_;
            seed_ = join(c2_g7().blue_path, c2_partner().blue_path,
                         std::vector<VertexId>{c2_g7().v2});
            connection_assembled(g);
            return;
        case St::ConnC2aV5a:
            ++claim2_drawn_;
            c2a_v5_ = other(e, c2_g7().v3);
            st_ = St::ConnC2aV5b;
            return;
        case St::ConnC2aV5b:
            ++claim2_drawn_;
            seed_ = join(c2_g7().blue_path, std::vector<VertexId>{c2a_v5_},
                         reversed(c2_partner().blue_path));
            connection_assembled(g);
            return;
        case St::ConnC2azProbe:
            ++claim2_drawn_;
            if (c == Color::Blue) st_ = St::ConnC2azFin;
            else st_ = St::ConnC2azMid;
            return;
        case St::ConnC2azFin:
            ++claim2_drawn_;
            seed_ = join(c2_g7().blue_path, c2_partner().blue_path,
                         std::vector<VertexId>{zpair_[0], c2_g7().v2, zpair_[1]});
            connection_assembled(g);
            return;
        case St::ConnC2azMid:
            ++claim2_drawn_;
            st_ = St::ConnC2azProbe2;
            return;
        case St::ConnC2azProbe2:
            ++claim2_drawn_;
            if (c == Color::Blue) {
                seed_ = join(std::vector<VertexId>{zpair_[0], c2_g7().v2, zpair_[1]},
                             c2_g7().blue_path, c2_partner().blue_path);
                connection_assembled(g);
            } else {
                st_ = St::ConnC2azFin2;
            }
            return;
        case St::ConnC2azFin2:
            ++claim2_drawn_;
            seed_ = join(std::vector<VertexId>{zpair_[0], c2_g7().v2, zpair_[1]},
                         reversed(c2_partner().blue_path), reversed(c2_g7().blue_path));
            connection_assembled(g);
            return;
        case St::ConnZ36G3a:
            if (c == Color::Blue) st_ = St::ConnZ36G3b;
            else st_ = St::ConnZ36G3f1;
            return;
        case St::ConnZ36G3b:
            if (c == Color::Blue) {
                seed_ = join(std::vector<VertexId>{zpair_[0]}, z36_partner().blue_path,
                             std::vector<VertexId>{zpair_[1]});
                connection_assembled(g);
            } else {
                st_ = St::ConnZ36G3m;
            }
            return;
        case St::ConnZ36G3m:
            seed_ = join(std::vector<VertexId>{other(e, zpair_[0]), zpair_[0]},
                         z36_partner().blue_path);
            connection_assembled(g);
            return;
        case St::ConnZ36G3f1:
            st_ = St::ConnZ36G3f2;
            return;
        case St::ConnZ36G3f2:
            seed_ = join(std::vector<VertexId>{other(e, zpair_[1]), zpair_[1]},
                         reversed(z36_partner().blue_path));
            connection_assembled(g);
            return;
        case St::ConnC1a1:
            if (c == Color::Blue) {
                seed_ = join(reversed(seed_), c1_gadget().blue_path);
                claim_done(g);
            } else {
                st_ = St::ConnC1a2;
            }
            return;
        case St::ConnC1a2:
            if (c == Color::Blue) {
                seed_ = join(seed_, c1_gadget().blue_path);
                claim_done(g);
            } else {
                st_ = St::ConnC1a3;
            }
            return;
        case St::ConnC1a3:
            seed_ = join(seed_, reversed(c1_gadget().blue_path));
            claim_done(g);
            return;
        case St::ConnC1b1:
            if (c == Color::Blue) {
                seed_ = join(reversed(seed_), c1_gadget().blue_path);
                claim_done(g);
            } else {
                st_ = St::ConnC1b2;
            }
            return;
        case St::ConnC1b2:
            seed_ = join(reversed(seed_), reversed(c1_gadget().blue_path));
            claim_done(g);
            return;

        case St::LemmaSt:
            lemma_.observe(e, c);
            if (lemma_.finished()) {
                main_path_ = lemma_.path();
                assert_blue_path(g, main_path_);
                ++lemmas_done_;
                if (lemmas_done_ < decomp_.lemma_count) lemma_.start(main_path_);
                else st_ = St::Done;
            }
            return;

        case St::Done: break;
        }
        fail(ErrorCode::PlanDesync, "builder observed a color in a terminal state");
    }

    // ---------------------------------------------------------------- helpers

    bool is_last_unit() const {
        return good_ == static_cast<int>(k_) - 1 && bad_.kind == BadUnit::Kind::None;
    }

    void unit_done(const ColoredGraph& g, Unit u) {
        good_ += u.weight();
        units_.push_back(std::move(u));
        after_unit_step(g);
    }

    void after_unit_step(const ColoredGraph& g) {
        uc_edges_.clear();
        if (good_ >= static_cast<int>(k_)) {
            if (good_ != static_cast<int>(k_))
                fail(ErrorCode::ContractViolation, "unit count overshot k");
            enter_extension(g);
            return;
        }
        if (good_ == static_cast<int>(k_) - 1 && bad_.kind != BadUnit::Kind::None) {
            enter_extension(g);
            return;
        }
        if (resume_edge_) {
            uc_v1_ = resume_edge_->u;
            uc_v2_ = resume_edge_->v;
            uc_c1_ = Color::Blue;
            uc_edges_ = {{*resume_edge_, Color::Blue}};
            resume_edge_.reset();
            st_ = St::UcP3b;
        } else {
            st_ = St::UcNewP3;
        }
    }

    void register_pseudo_uchain(const ColoredGraph& g, GadgetKind kind,
                                std::vector<VertexId> path) {
        Gadget gd;
        gd.kind = kind;
        gd.cls = GadgetClass::UChain;
        gd.weight = 1;
        gd.blue_path = std::move(path);
        gd.edges = pre_edges_;
        pre_edges_.clear();
        ++good_;
        register_gadget(std::move(gd));
        after_unit_step(g);
    }

    void check_unit_contract() const {
        int total = good_;
        bool bad_empty = bad_.kind == BadUnit::Kind::None;
        if (!((total == static_cast<int>(k_) && bad_empty) ||
              (total == static_cast<int>(k_) - 1 && !bad_empty)))
            fail(ErrorCode::ContractViolation,
                 "unit creation ended with " + std::to_string(total) + " units (k=" +
                     std::to_string(k_) + ", bad " + (bad_empty ? "empty" : "set") + ")");
        // vertex-disjointness across units, the bad unit and pseudo gadgets
        std::vector<VertexId> all;
        auto add_edges = [&](const std::vector<DrawnEdge>& es) {
            for (const auto& d : es) {
                all.push_back(d.e.u);
                all.push_back(d.e.v);
            }
        };
        std::vector<std::vector<VertexId>> sets;
        for (const Unit& u : units_) {
            all.clear();
            add_edges(u.edges);
            sets.push_back(all);
        }
        for (const Gadget& gd : gadgets_) {
            all.clear();
            add_edges(gd.edges);
            sets.push_back(all);
        }
        if (bad_.kind != BadUnit::Kind::None) {
            all.clear();
            add_edges(bad_.edges);
            sets.push_back(all);
        }
        for (auto& s : sets) {
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
        }
        std::map<VertexId, int> owner;
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (VertexId v : sets[i]) {
                auto [it, fresh] = owner.emplace(v, static_cast<int>(i));
                if (!fresh)
                    fail(ErrorCode::ContractViolation, "units share vertex " + std::to_string(v));
            }
    }

    Gadget base_gadget(GadgetKind kind, GadgetClass cls) {
        Gadget gd;
        gd.kind = kind;
        gd.cls = cls;
        gd.weight = cur_.weight();
        gd.edges = cur_.edges;
        return gd;
    }

    void register_gadget(Gadget gd) {
        // stretched type-I gadgets keep their kind; templates are parametric
        detail::check_gadget_template(gd);
        gadgets_.push_back(std::move(gd));
    }

    void enter_extension(const ColoredGraph& g) {
        check_unit_contract();
        if (bad_.kind == BadUnit::Kind::VI) {
            Gadget gd;
            gd.kind = GadgetKind::G1;
            gd.cls = GadgetClass::GOne;
            gd.w = {bad_.p4[0], bad_.p4[1], bad_.p4[2], bad_.p4[3], bad_.red[0], bad_.red[1]};
            gd.edges = bad_.edges;
            register_gadget(std::move(gd));
            bad_ = BadUnit{};
        } else if (bad_.kind == BadUnit::Kind::VII) {
            Gadget gd;
            gd.kind = GadgetKind::G2;
            gd.cls = GadgetClass::GTwo;
            gd.w = {bad_.vii[0], bad_.vii[1], bad_.vii[2], bad_.vii[3], bad_.vii[4], 0};
            gd.edges = bad_.edges;
            register_gadget(std::move(gd));
            bad_ = BadUnit{};
        } else if (bad_.kind == BadUnit::Kind::V) {
            Unit u;
            u.kind = Unit::Kind::V;
            u.red = bad_.red;
            u.edges = bad_.edges;
            units_.push_back(std::move(u)); // extends like a unit, already counted via k-1
            bad_ = BadUnit{};
        }
        ext_idx_ = 0;
        next_extension(g);
    }

    void next_extension(const ColoredGraph& g) {
        if (ext_idx_ >= units_.size()) {
            enter_connection(g);
            return;
        }
        cur_ = units_[ext_idx_++];
        switch (cur_.kind) {
        case Unit::Kind::I: st_ = St::ExtIP1; return;
        case Unit::Kind::II: st_ = St::ExtIIa; return;
        case Unit::Kind::III: st_ = St::ExtIIIj; return;
        case Unit::Kind::IV: st_ = St::ExtIVt1; return;
        case Unit::Kind::V: st_ = St::ExtV1; return;
        }
    }

    // Gadget group views used by connection states.
    const Gadget& c2_g7() const { return gadgets_[g7_order_[0]]; }
    const Gadget& c2_partner() const { return gadgets_[claim2_partner_]; }
    const Gadget& z36_partner() const { return gadgets_[z36_partner_]; }
    const Gadget& c1_gadget() const { return gadgets_[g36_queue_[g36_idx_]]; }

    VertexId redirect(VertexId v) {
        if (redirect_active_ && v == redirect_at_ && redirect_used_ < 2)
            return redirect_slot_[redirect_used_++];
        return v;
    }

    void enter_connection(const ColoredGraph& g);
    void after_forced_prefix(const ColoredGraph& g);
    void conn_branch_or_claims(const ColoredGraph& g);
    void connection_assembled(const ColoredGraph& g);
    void claim_done(const ColoredGraph& g);
    void next_claim(const ColoredGraph& g);
    void finish_connection(const ColoredGraph& g);
    void begin_lemmas(const ColoredGraph& g);
    void assert_blue_path(const ColoredGraph& g, const std::vector<VertexId>& p) const;
    void check_connection_contract() const;

    // ---------------------------------------------------------------- data

    TargetDecomposition decomp_;
    std::shared_ptr<const StrategyTable> table_;
    std::size_t k_ = 0;

    St st_ = St::Done;
    Proposal pending_{};
    std::vector<RoundTag> tags_;
    std::size_t forced_checked_ = 0;

    // preamble
    std::array<Edge, 3> probe_{};
    int probe_count_ = 0;
    std::array<VertexId, 2> zpair_{};
    bool has_zpair_ = false;
    VertexId z3_ = 0;
    Color s3nr_c1_ = Color::Red;
    std::array<VertexId, 8> zz_{}; // roles z1..z7 in zz_[1..7]
    std::vector<DrawnEdge> pre_edges_;
    std::optional<Edge> resume_edge_;

    // unit creation
    VertexId uc_v1_ = 0, uc_v2_ = 0, uc_v3_ = 0;
    Color uc_c1_ = Color::Red;
    VertexId uc_e1_ = 0, uc_mid_ = 0, uc_redend_ = 0;
    std::array<VertexId, 2> uc_probe_{};
    std::vector<DrawnEdge> uc_edges_;
    int good_ = 0;
    std::vector<Unit> units_;
    BadUnit bad_;

    // extension
    std::size_t ext_idx_ = 0;
    Unit cur_;
    VertexId ei_p0_ = 0, ei_p4_ = 0, ei_p5_ = 0;
    Color ei_c1_ = Color::Red;
    VertexId eii_v4_ = 0;
    bool eiv_t1_red_ = false;
    VertexId ev_x2_ = 0;

    std::vector<Gadget> gadgets_;

    // connection
    std::vector<Edge> conn_forced_;
    std::size_t conn_idx_ = 0;
    std::size_t conn_drawn_ = 0;
    std::size_t claim2_drawn_ = 0;
    std::size_t z_attach_count_ = 0;
    std::vector<std::size_t> g7_order_;
    std::vector<std::size_t> g36_queue_;
    std::size_t g36_idx_ = 0;
    std::size_t claim2_partner_ = 0;
    bool claim2_active_ = false;
    std::size_t z36_partner_ = 0;
    int conn_branch_ = 0; // 0 none, 1 claim2a, 2 claim2a+z, 3 z36-G3
    int conn_cprime_ = 0;
    std::vector<VertexId> seed_;
    std::vector<VertexId> assembled_;
    bool redirect_active_ = false;
    VertexId redirect_at_ = 0;
    std::array<VertexId, 2> redirect_slot_{};
    int redirect_used_ = 0;
    VertexId c2a_v5_ = 0;
    bool blue_on_path_ = true;

    // lemma phase
    LemmaScript lemma_;
    std::size_t lemmas_done_ = 0;
    std::vector<VertexId> main_path_;
};

} // namespace oramsey

#include "oramsey/builder_connection.hpp"
