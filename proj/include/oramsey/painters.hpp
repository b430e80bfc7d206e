#pragma once

// Painter opponents: the lower-bound blocking painter plus constant and
// seeded-random baselines for fuzzing and cross-checks.

#include <memory>
#include <optional>
#include <random>
#include <string>

#include "oramsey/game.hpp"
#include "oramsey/graph.hpp"

namespace oramsey {

// Red unless that would complete a red P4 or a red cycle. Its red subgraph is
// always a star forest.
inline Color blocking_color(const ColoredGraph& g, Edge e) {
    if (!would_create_red_p4(g, e.u, e.v) && !would_create_red_cycle(g, e.u, e.v))
        return Color::Red;
    return Color::Blue;
}

class BlockingPainter : public PainterStrategy {
public:
    Color color(const ColoredGraph& g, Edge e) override { return blocking_color(g, e); }
};

class ConstantPainter : public PainterStrategy {
public:
    explicit ConstantPainter(Color c) : c_(c) {}
    Color color(const ColoredGraph&, Edge) override { return c_; }

private:
    Color c_;
};

class RandomPainter : public PainterStrategy {
public:
    explicit RandomPainter(std::uint64_t seed) : rng_(static_cast<std::mt19937::result_type>(seed)) {}
    Color color(const ColoredGraph&, Edge) override {
        return (rng_() & 1u) ? Color::Blue : Color::Red;
    }

private:
    std::mt19937 rng_; // bit extraction keeps replies platform-independent
};

// Painter that replays a fixed reply string; used by verifiers and tests.
class ScriptedPainter : public PainterStrategy {
public:
    explicit ScriptedPainter(std::vector<Color> replies) : replies_(std::move(replies)) {}
    Color color(const ColoredGraph&, Edge) override {
        if (next_ >= replies_.size())
            fail(ErrorCode::IllegalBuilderMove, "scripted painter ran out of replies");
        return replies_[next_++];
    }

private:
    std::vector<Color> replies_;
    std::size_t next_ = 0;
};

// Factory for CLI names: blocking | blue | red | random[:seed].
inline std::unique_ptr<PainterStrategy> make_painter(const std::string& spec) {
    std::string name = spec;
    std::optional<std::uint64_t> seed;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        seed = std::stoull(spec.substr(pos + 1));
    }
    if (name == "blocking") return std::make_unique<BlockingPainter>();
    if (name == "blue") return std::make_unique<ConstantPainter>(Color::Blue);
    if (name == "red") return std::make_unique<ConstantPainter>(Color::Red);
    if (name == "random") return std::make_unique<RandomPainter>(seed.value_or(0));
    return nullptr;
}

} // namespace oramsey
