#pragma once

#include "hcolor/coloring.hpp"
#include "hcolor/goodness.hpp"
#include "hcolor/rational.hpp"
#include "hcolor/rng.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace hcolor {

struct ChainState {
    Coloring coloring;
    std::uint64_t step = 0;
    Rng rng;
};

/// What one transition did. `color` is empty when A(v, X) was empty and the
/// chain held.
struct Move {
    Vertex vertex = 0;
    std::optional<Color> color;
};

/// One Glauber transition: v uniform on V, then c uniform on A(v, X_t).
/// Consumes the vertex draw, then the color draw unless A(v, X_t) is empty.
Move step(const Hypergraph& h, ChainState& state);

/// Exact one-step law from x: every (v, color) outcome with its probability
/// 1/(n·|A(v,x)|), or 1/n for a hold when A(v,x) is empty. Enumerates the same
/// menus `step` draws from.
struct Transition {
    Move move;
    Rational probability;
};
std::vector<Transition> one_step_law(const Hypergraph& h, const Coloring& x);

/// Each coordinate independently uniform on {0..q-1}.
Coloring random_initial(std::size_t n, Color q, Rng& rng);
Coloring random_initial(std::size_t n, Color q, std::uint64_t seed);

/// ⌈2n·ln(2n/δ)⌉. Throws DomainError unless 0 < δ < 1 and n >= 1.
std::uint64_t mixing_horizon(std::size_t n, double delta);

/// ⌊n / (4k²e)⌋
std::uint64_t persistence_horizon(std::size_t n, std::size_t k);

struct Checkpoint {
    std::uint64_t t = 0;
    bool proper = false;
    bool good_s1 = false;
    bool good_s2 = false;
    std::size_t min_available = 0;
};

struct TrajectoryDiagnostics {
    std::uint64_t t0 = 0;
    std::vector<Checkpoint> checkpoints;
    /// 2ε-good at every checkpoint with t <= t0.
    bool good_s2_through_t0 = true;
    /// 2ε-good at every checkpoint of the run.
    bool good_s2_throughout = true;
};

struct RunResult {
    ChainState final;
    TrajectoryDiagnostics diagnostics;
};

/// Runs `steps` transitions from x0 with a fresh stream seeded by `seed`.
/// Checkpoints land at t = 0, t0, every `checkpoint_every` steps (0 selects n),
/// and the final step. `params` supplies the base ε; scale 1 and 2 are both checked.
RunResult run(const Hypergraph& h, const Coloring& x0, std::uint64_t steps, std::uint64_t seed,
              const GoodnessParams& params, std::uint64_t checkpoint_every = 0);

/// CSV with header comment `# rng=<algorithm> seed=<seed>` and columns
/// t,proper,good_s1,good_s2,min_avail.
void write_trajectory_csv(std::ostream& out, const TrajectoryDiagnostics& diagnostics, std::uint64_t seed);

} // namespace hcolor
