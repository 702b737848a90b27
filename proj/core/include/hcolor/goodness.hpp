#pragma once

#include "hcolor/coloring.hpp"
#include "hcolor/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hcolor {

struct GoodnessOptions {
    /// Replaces the default ε = 1/(50k²). Recorded as an override in reports.
    std::optional<Rational> eps;
    /// C_k in the log n color threshold; default 200k².
    std::optional<double> c_k;
    /// c in the persistence horizon t* = e^{cμ_1/2}.
    double c = 1.0;
    /// s in s·ε-goodness: thresholds become (sεq)^i.
    unsigned scale = 1;
};

/// ε, the μ-sequence and the regime inputs for one (k, q, n, Δ).
///
/// μ_i = (s·ε·q)^i for 1 <= i <= k-2 and μ_{k-1} = Δ. Thresholds are kept as
/// exact rationals; since every y is an integer, y >= μ_i is evaluated as
/// y >= ceil(μ_i), which is exact.
class GoodnessParams {
public:
    GoodnessParams(std::size_t k, Color q, std::size_t n, std::size_t max_degree, GoodnessOptions options = {});
    GoodnessParams(const Hypergraph& h, Color q, GoodnessOptions options = {});

    std::size_t k() const noexcept { return k_; }
    Color q() const noexcept { return q_; }
    std::size_t n() const noexcept { return n_; }
    std::size_t max_degree() const noexcept { return max_degree_; }
    unsigned scale() const noexcept { return scale_; }
    double c() const noexcept { return c_; }
    double c_k() const noexcept { return c_k_; }

    const Rational& eps() const noexcept { return eps_; }
    bool eps_overridden() const noexcept { return eps_overridden_; }
    static Rational default_eps(std::size_t k);

    /// Copy with a different goodness scale s.
    GoodnessParams with_scale(unsigned s) const;

    /// (ε, ε², ..., ε^{k-2}), unscaled.
    std::vector<Rational> eps_sequence() const;

    /// μ_i at the current scale, 1 <= i <= k-1.
    Rational mu_exact(std::size_t i) const;
    double mu(std::size_t i) const { return to_double(mu_exact(i)); }
    /// (μ_1, ..., μ_{k-1}).
    std::vector<double> mu_vector() const;

    /// Smallest integer y with y >= μ_i, saturated to SIZE_MAX. 1 <= i <= k-2.
    std::size_t bad_threshold(std::size_t i) const { return thresholds_.at(i - 1); }

private:
    void compute_thresholds();

    std::size_t k_;
    Color q_;
    std::size_t n_;
    std::size_t max_degree_;
    Rational eps_;
    bool eps_overridden_;
    double c_k_;
    double c_;
    unsigned scale_;
    std::vector<std::size_t> thresholds_;
};

/// Witness of badness: y_{v,i} >= μ_i.
struct Goodness {
    bool good = true;
    Vertex vertex = 0;
    std::size_t i = 0;
    std::size_t y = 0;
    double mu = 0;
    unsigned scale = 1;
};

/// Lowest i with y_{v,i} >= μ_i for this vertex, if any (the event "v is not good").
std::optional<std::size_t> bad_index(const Hypergraph& h, const Coloring& x, const GoodnessParams& params, Vertex v);

/// Good, or the first witness ordered by (v, i).
Goodness classify_goodness(const Hypergraph& h, const Coloring& x, const GoodnessParams& params);

inline bool is_good(const Hypergraph& h, const Coloring& x, const GoodnessParams& params) {
    return classify_goodness(h, x, params).good;
}

struct AvailabilityCheck {
    std::size_t min_available = 0;
    /// (1 - sε)·q
    double bound = 0;
    /// Vertices with |A(v,X)| < (1 - sε)q. Non-empty means a bug.
    std::vector<Vertex> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// For a good X: every vertex keeps at least (1 - sε)q available colors.
/// Throws DomainError when X is not good at the params' scale.
AvailabilityCheck goodness_implies_available(const Hypergraph& h, const Coloring& x, const GoodnessParams& params);

enum class Regime { jerrum, paper, below_threshold };
std::string to_string(Regime r);

struct RegimeReport {
    Regime verdict;
    /// q > 2Δ hands off to the q > 2Δ analysis.
    std::size_t jerrum_cutoff;
    /// C_k · ln n
    double log_threshold;
    /// 10k/ε (equals 500k³ at the default ε)
    Rational degree_coefficient;
    /// 10k/ε · Δ^{1/(k-1)}
    double degree_threshold;
};

RegimeReport regime_check(const GoodnessParams& params);

} // namespace hcolor
