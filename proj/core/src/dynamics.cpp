#include "hcolor/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

namespace hcolor {

Move step(const Hypergraph& h, ChainState& state) {
    const auto n = h.vertex_count();
    if (n == 0) {
        ++state.step;
        return {};
    }
    Move move;
    move.vertex = static_cast<Vertex>(state.rng.uniform_below(n));
    const auto menu = available_colors(h, state.coloring, move.vertex);
    if (!menu.empty()) {
        move.color = menu[state.rng.uniform_below(menu.size())];
        state.coloring.set(move.vertex, *move.color);
    }
    ++state.step;
    return move;
}

std::vector<Transition> one_step_law(const Hypergraph& h, const Coloring& x) {
    std::vector<Transition> law;
    const auto n = h.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
        const auto menu = available_colors(h, x, v);
        if (menu.empty()) {
            law.push_back({{v, std::nullopt}, Rational(1, static_cast<long long>(n))});
            continue;
        }
        const Rational p(1, static_cast<long long>(n * menu.size()));
        for (Color c : menu) law.push_back({{v, c}, p});
    }
    return law;
}

Coloring random_initial(std::size_t n, Color q, Rng& rng) {
    if (q < 1) throw DomainError("palette size q must be at least 1");
    std::vector<Color> colors(n);
    for (auto& c : colors) c = static_cast<Color>(rng.uniform_below(q));
    return Coloring(q, std::move(colors));
}

Coloring random_initial(std::size_t n, Color q, std::uint64_t seed) {
    Rng rng(seed);
    return random_initial(n, q, rng);
}

std::uint64_t mixing_horizon(std::size_t n, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
    if (n < 1) throw DomainError("mixing horizon needs n >= 1");
    const double nn = static_cast<double>(n);
    return static_cast<std::uint64_t>(std::ceil(2.0 * nn * std::log(2.0 * nn / delta)));
}

std::uint64_t persistence_horizon(std::size_t n, std::size_t k) {
    const double denom = 4.0 * static_cast<double>(k * k) * std::numbers::e;
    return static_cast<std::uint64_t>(std::floor(static_cast<double>(n) / denom));
}

RunResult run(const Hypergraph& h, const Coloring& x0, std::uint64_t steps, std::uint64_t seed,
              const GoodnessParams& params, std::uint64_t checkpoint_every) {
    if (x0.size() != h.vertex_count()) throw DomainError("initial coloring does not match hypergraph");
    const auto base = params.with_scale(1);
    const auto doubled = params.with_scale(2);
    const std::uint64_t every = checkpoint_every ? checkpoint_every : std::max<std::uint64_t>(1, h.vertex_count());

    RunResult result{ChainState{x0, 0, Rng(seed)}, {}};
    auto& diag = result.diagnostics;
    diag.t0 = persistence_horizon(h.vertex_count(), h.uniformity());

    auto record = [&](const ChainState& s) {
        Checkpoint cp;
        cp.t = s.step;
        cp.proper = is_proper(h, s.coloring);
        cp.good_s1 = is_good(h, s.coloring, base);
        cp.good_s2 = is_good(h, s.coloring, doubled);
        cp.min_available = min_available(h, s.coloring);
        if (!cp.good_s2) {
            diag.good_s2_throughout = false;
            if (cp.t <= diag.t0) diag.good_s2_through_t0 = false;
        }
        diag.checkpoints.push_back(cp);
    };

    auto& state = result.final;
    record(state);
    while (state.step < steps) {
        step(h, state);
        if (state.step % every == 0 || state.step == diag.t0 || state.step == steps) record(state);
    }
    return result;
}

void write_trajectory_csv(std::ostream& out, const TrajectoryDiagnostics& diagnostics, std::uint64_t seed) {
    out << "# rng=" << Rng::algorithm << " seed=" << seed << " t0=" << diagnostics.t0 << '\n';
    out << "t,proper,good_s1,good_s2,min_avail\n";
    for (const auto& cp : diagnostics.checkpoints)
        out << cp.t << ',' << int(cp.proper) << ',' << int(cp.good_s1) << ',' << int(cp.good_s2) << ','
            << cp.min_available << '\n';
}

} // namespace hcolor
