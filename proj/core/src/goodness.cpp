#include "hcolor/goodness.hpp"

#include <cmath>
#include <limits>

namespace hcolor {

GoodnessParams::GoodnessParams(std::size_t k, Color q, std::size_t n, std::size_t max_degree, GoodnessOptions options)
    : k_(k), q_(q), n_(n), max_degree_(max_degree),
      eps_(options.eps.value_or(default_eps(k))), eps_overridden_(options.eps.has_value()),
      c_k_(options.c_k.value_or(200.0 * static_cast<double>(k * k))), c_(options.c), scale_(options.scale) {
    if (k < 2) throw DomainError("uniformity k must be at least 2");
    if (q < 1) throw DomainError("palette size q must be at least 1");
    if (eps_ <= 0) throw DomainError("eps must be positive");
    if (scale_ < 1) throw DomainError("goodness scale must be at least 1");
    compute_thresholds();
}

GoodnessParams::GoodnessParams(const Hypergraph& h, Color q, GoodnessOptions options)
    : GoodnessParams(h.uniformity(), q, h.vertex_count(), h.max_degree(), std::move(options)) {}

Rational GoodnessParams::default_eps(std::size_t k) { return Rational(1, 50 * static_cast<long long>(k * k)); }

GoodnessParams GoodnessParams::with_scale(unsigned s) const {
    if (s < 1) throw DomainError("goodness scale must be at least 1");
    GoodnessParams copy = *this;
    copy.scale_ = s;
    copy.compute_thresholds();
    return copy;
}

std::vector<Rational> GoodnessParams::eps_sequence() const {
    std::vector<Rational> seq;
    for (std::size_t i = 1; i + 2 <= k_; ++i) seq.push_back(pow_rational(eps_, i));
    return seq;
}

Rational GoodnessParams::mu_exact(std::size_t i) const {
    if (i < 1 || i > k_ - 1) throw DomainError("mu index " + std::to_string(i) + " outside [1, k-1]");
    if (i == k_ - 1) return Rational(max_degree_);
    return pow_rational(Rational(scale_) * eps_ * q_, i);
}

std::vector<double> GoodnessParams::mu_vector() const {
    std::vector<double> out;
    for (std::size_t i = 1; i < k_; ++i) out.push_back(mu(i));
    return out;
}

void GoodnessParams::compute_thresholds() {
    thresholds_.clear();
    const BigInt cap = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 1; i + 2 <= k_; ++i) {
        BigInt t = ceil_rational(mu_exact(i));
        thresholds_.push_back(t >= cap ? std::numeric_limits<std::size_t>::max() : t.convert_to<std::size_t>());
    }
}

std::optional<std::size_t> bad_index(const Hypergraph& h, const Coloring& x, const GoodnessParams& params, Vertex v) {
    if (params.k() < 3) return std::nullopt;
    const auto y = edge_color_counts(h, x, v);
    for (std::size_t i = 1; i + 2 <= params.k(); ++i)
        if (y[i - 1] >= params.bad_threshold(i)) return i;
    return std::nullopt;
}

Goodness classify_goodness(const Hypergraph& h, const Coloring& x, const GoodnessParams& params) {
    if (params.k() != h.uniformity()) throw DomainError("goodness params built for a different uniformity");
    Goodness g;
    g.scale = params.scale();
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        if (auto i = bad_index(h, x, params, v)) {
            g.good = false;
            g.vertex = v;
            g.i = *i;
            g.y = edge_color_counts(h, x, v)[*i - 1];
            g.mu = params.mu(*i);
            return g;
        }
    }
    return g;
}

AvailabilityCheck goodness_implies_available(const Hypergraph& h, const Coloring& x, const GoodnessParams& params) {
    if (!is_good(h, x, params)) throw DomainError("availability bound requires a good coloring");
    const Rational keep = (Rational(1) - Rational(params.scale()) * params.eps()) * params.q();
    AvailabilityCheck check;
    check.bound = to_double(keep);
    check.min_available = x.palette_size();
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        const auto a = available_colors(h, x, v).size();
        check.min_available = std::min(check.min_available, a);
        if (Rational(a) < keep) check.violations.push_back(v);
    }
    return check;
}

std::string to_string(Regime r) {
    switch (r) {
    case Regime::jerrum: return "jerrum_regime";
    case Regime::paper: return "paper_regime";
    case Regime::below_threshold: return "below_threshold";
    }
    return "unknown";
}

RegimeReport regime_check(const GoodnessParams& params) {
    RegimeReport r;
    r.jerrum_cutoff = 2 * params.max_degree();
    r.log_threshold = params.c_k() * std::log(static_cast<double>(std::max<std::size_t>(params.n(), 1)));
    r.degree_coefficient = Rational(10 * params.k()) / params.eps();
    r.degree_threshold = to_double(r.degree_coefficient)
                       * std::pow(static_cast<double>(params.max_degree()), 1.0 / static_cast<double>(params.k() - 1));
    const double q = params.q();
    if (params.q() > r.jerrum_cutoff)
        r.verdict = Regime::jerrum;
    else if (q >= std::max(r.log_threshold, r.degree_threshold))
        r.verdict = Regime::paper;
    else
        r.verdict = Regime::below_threshold;
    return r;
}

} // namespace hcolor
