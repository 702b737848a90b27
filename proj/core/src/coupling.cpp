#include "hcolor/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace hcolor {

namespace {

// Position u (measured from the start of the leftover region) within the
// layout: `shared` colors with weight `shared_w`, then `own` colors with `own_w`.
Color pick_leftover(std::span<const Color> shared, double shared_w, std::span<const Color> own, double own_w,
                    double u) {
    if (shared_w > 0) {
        const double span = shared_w * static_cast<double>(shared.size());
        if (u < span) return shared[std::min(shared.size() - 1, static_cast<std::size_t>(u / shared_w))];
        u -= span;
    }
    return own[std::min(own.size() - 1, static_cast<std::size_t>(u / own_w))];
}

} // namespace

CoupledColors coupled_colors(std::span<const Color> menu_x, std::span<const Color> menu_y, double u) {
    std::vector<Color> common, only_x, only_y;
    std::set_intersection(menu_x.begin(), menu_x.end(), menu_y.begin(), menu_y.end(), std::back_inserter(common));
    std::set_difference(menu_x.begin(), menu_x.end(), menu_y.begin(), menu_y.end(), std::back_inserter(only_x));
    std::set_difference(menu_y.begin(), menu_y.end(), menu_x.begin(), menu_x.end(), std::back_inserter(only_y));

    const double a = static_cast<double>(menu_x.size());
    const double b = static_cast<double>(menu_y.size());
    const double m = std::max(a, b);
    CoupledColors out;
    if (m == 0) return out;

    const auto j = static_cast<std::size_t>(u * m);
    if (j < common.size()) {
        if (a > 0) out.x = common[j];
        if (b > 0) out.y = common[j];
        return out;
    }
    const double rest = u - static_cast<double>(common.size()) / m;
    if (a > 0) out.x = pick_leftover(common, 1.0 / a - 1.0 / m, only_x, 1.0 / a, rest);
    if (b > 0) out.y = pick_leftover(common, 1.0 / b - 1.0 / m, only_y, 1.0 / b, rest);
    return out;
}

CoupledMove coupled_step(const Hypergraph& h, CoupledState& state) {
    CoupledMove move;
    const auto n = h.vertex_count();
    if (n == 0) {
        ++state.step;
        move.agreed = true;
        return move;
    }
    move.vertex = static_cast<Vertex>(state.rng.uniform_below(n));
    const auto menu_x = available_colors(h, state.x, move.vertex);
    const auto menu_y = available_colors(h, state.y, move.vertex);
    move.colors = coupled_colors(menu_x, menu_y, state.rng.uniform_real());
    if (move.colors.x) state.x.set(move.vertex, *move.colors.x);
    if (move.colors.y) state.y.set(move.vertex, *move.colors.y);
    move.agreed = state.x[move.vertex] == state.y[move.vertex];
    ++state.step;
    return move;
}

ContractionReport contraction_estimate(const Hypergraph& h, const GoodnessParams& params, std::uint64_t pairs,
                                       std::uint64_t steps_per_pair, std::uint64_t seed,
                                       std::uint64_t max_attempts) {
    const auto qualifying = params.with_scale(2);
    ContractionReport report;
    report.n = h.vertex_count();
    report.q = params.q();
    report.bound = report.n ? 1.0 - 1.0 / (2.0 * static_cast<double>(report.n)) : 0.0;
    if (max_attempts == 0) max_attempts = 100 * std::max<std::uint64_t>(pairs, 1);

    auto qualifies = [&](const Coloring& x, const Coloring& y) {
        return is_good(h, x, qualifying) && is_good(h, y, qualifying);
    };

    Rng draw(seed);
    // Welford accumulation of the one-step ratios.
    double mean = 0, m2 = 0;
    while (report.pairs < pairs && report.attempts < max_attempts) {
        ++report.attempts;
        CoupledState cs{random_initial(report.n, params.q(), draw), random_initial(report.n, params.q(), draw), 0,
                        Rng(derive_seed(seed, report.attempts))};
        if (cs.x == cs.y || !qualifies(cs.x, cs.y)) {
            ++report.discarded;
            continue;
        }
        ++report.pairs;
        for (std::uint64_t s = 0; s < steps_per_pair; ++s) {
            const auto before = cs.distance();
            if (before == 0 || !qualifies(cs.x, cs.y)) {
                ++report.discarded;
                break;
            }
            coupled_step(h, cs);
            const double ratio = static_cast<double>(cs.distance()) / static_cast<double>(before);
            ++report.samples;
            const double d = ratio - mean;
            mean += d / static_cast<double>(report.samples);
            m2 += d * (ratio - mean);
        }
    }
    report.mean_ratio = mean;
    if (report.samples > 1)
        report.se = std::sqrt(m2 / static_cast<double>(report.samples - 1) / static_cast<double>(report.samples));
    report.sufficient = report.pairs >= pairs && report.samples > 1;
    return report;
}

CoalescenceResult coalescence_run(const Hypergraph& h, const Coloring& x0, const Coloring& y0,
                                  std::uint64_t max_steps, std::uint64_t seed, bool record_trace) {
    if (x0.size() != h.vertex_count() || y0.size() != h.vertex_count())
        throw DomainError("coupled colorings do not match hypergraph");
    if (x0.palette_size() != y0.palette_size()) throw DomainError("coupled colorings use different palettes");
    CoupledState cs{x0, y0, 0, Rng(seed)};
    CoalescenceResult result;
    std::size_t d = cs.distance();
    if (record_trace) result.trace.push_back({0, d, true, 0});
    while (d != 0 && cs.step < max_steps) {
        auto move = coupled_step(h, cs);
        d = cs.distance();
        if (record_trace) result.trace.push_back({cs.step, d, move.agreed, move.vertex});
    }
    result.coalesced = d == 0;
    result.time = cs.step;
    result.final_distance = d;
    return result;
}

void write_coupling_csv(std::ostream& out, const std::vector<CouplingTraceRow>& trace, std::uint64_t seed) {
    out << "# rng=" << Rng::algorithm << " seed=" << seed << '\n';
    out << "t,hamming,agreed,vertex\n";
    for (const auto& r : trace) out << r.t << ',' << r.hamming << ',' << int(r.agreed) << ',' << r.vertex << '\n';
}

} // namespace hcolor
