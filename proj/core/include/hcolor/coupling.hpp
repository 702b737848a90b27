#pragma once

#include "hcolor/dynamics.hpp"

#include <iosfwd>
#include <span>

namespace hcolor {

struct CoupledState {
    Coloring x;
    Coloring y;
    std::uint64_t step = 0;
    Rng rng;

    std::size_t distance() const { return hamming(x, y); }
};

struct CoupledColors {
    std::optional<Color> x;
    std::optional<Color> y;
};

/// Maximal coupling of Uniform(menu_x) and Uniform(menu_y) driven by a single
/// u in [0, 1). With a = |menu_x|, b = |menu_y|, m = max(a, b) and I the
/// common colors (ascending):
///   [0, |I|/m)  both sides take I[⌊u·m⌋]
///   [|I|/m, 1)  each side lays out its leftover mass in order: common colors
///               with 1/a - 1/m each, then its own colors with 1/a each.
/// Leftover intervals never pick the same color on both sides, so
/// P(agree) = |I|/m = Σ_{c∈I} min(1/a, 1/b). An empty menu yields no color.
CoupledColors coupled_colors(std::span<const Color> menu_x, std::span<const Color> menu_y, double u);

struct CoupledMove {
    Vertex vertex = 0;
    CoupledColors colors;
    bool agreed = false;
};

/// Same vertex in both chains, colors from `coupled_colors` with one shared
/// uniform. Consumes the vertex draw, then the uniform.
CoupledMove coupled_step(const Hypergraph& h, CoupledState& state);

struct ContractionReport {
    std::size_t n = 0;
    Color q = 0;
    double bound = 0;       // 1 - 1/(2n)
    double mean_ratio = 0;  // mean of h(X',Y')/h(X,Y)
    double se = 0;
    std::uint64_t samples = 0;
    std::uint64_t discarded = 0;  // drawn pairs or states that were not both 2ε-good, or coalesced
    std::uint64_t attempts = 0;
    std::uint64_t pairs = 0;      // qualifying starting pairs used
    bool sufficient = false;
};

/// Monte Carlo check of E[h'] <= (1 - 1/(2n))h over one-step coupled moves.
/// Starting pairs are drawn independently from Ω and kept only if both are
/// 2ε-good under `params` (scale forced to 2) and distinct. From each kept pair
/// up to `steps_per_pair` consecutive moves are sampled while the pair stays
/// qualifying. Stops after `pairs` qualifying pairs or `max_attempts` draws
/// (0 selects 100·pairs); `sufficient` is false if the target was not met.
ContractionReport contraction_estimate(const Hypergraph& h, const GoodnessParams& params, std::uint64_t pairs,
                                       std::uint64_t steps_per_pair, std::uint64_t seed,
                                       std::uint64_t max_attempts = 0);

struct CouplingTraceRow {
    std::uint64_t t;
    std::size_t hamming;
    bool agreed;
    Vertex vertex;
};

struct CoalescenceResult {
    bool coalesced = false;
    std::uint64_t time = 0;          // coalescence time, or steps run on timeout
    std::size_t final_distance = 0;
    std::vector<CouplingTraceRow> trace;
};

CoalescenceResult coalescence_run(const Hypergraph& h, const Coloring& x0, const Coloring& y0,
                                  std::uint64_t max_steps, std::uint64_t seed, bool record_trace = false);

/// Columns t,hamming,agreed,vertex with an `# rng=` header comment.
void write_coupling_csv(std::ostream& out, const std::vector<CouplingTraceRow>& trace, std::uint64_t seed);

} // namespace hcolor
