#pragma once

#include "hcolor/goodness.hpp"
#include "hcolor/rational.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace hcolor {

/// Colorings as base-q integers: vertex v is the digit of weight q^v.
using Code = std::uint64_t;

struct EnumerationOptions {
    std::uint64_t budget = 100'000'000;  // max |Ω| = q^n scanned
    unsigned threads = 0;                // 0 = hardware concurrency
};

Code encode(const Coloring& x);
Coloring decode(Code code, std::size_t n, Color q);

/// q^n; throws BudgetExceeded when it exceeds `budget`.
std::uint64_t state_space_size(std::size_t n, Color q, std::uint64_t budget);

struct EnumerationResult {
    std::size_t n = 0;
    Color q = 0;
    std::uint64_t omega_size = 0;
    std::vector<Code> proper;   // ascending
    std::vector<bool> good;     // per proper coloring; empty unless params were given

    std::size_t count() const noexcept { return proper.size(); }
    /// Index in `proper`, or nullopt when the code is not a proper coloring.
    std::optional<std::size_t> index_of(Code code) const;
};

/// Exhaustive scan of Ω. With params, also flags which proper colorings are good.
EnumerationResult enumerate_proper(const Hypergraph& h, Color q, const GoodnessParams* params = nullptr,
                                   const EnumerationOptions& options = {});

/// ½ Σ_x |dist(x) - uniform_Q(x)| for dist indexed by code over all of Ω.
/// Throws DomainError when dist has the wrong length or does not sum to 1 within 1e-12.
double exact_tvd(const EnumerationResult& q_set, std::span<const double> dist);

/// Same distance for the empirical law counts/Σcounts, evaluated in exact
/// integer arithmetic.
Rational exact_tvd_counts(const EnumerationResult& q_set, std::span<const std::uint64_t> counts);

/// ½ Σ |a - b| over equal-length probability vectors.
double total_variation(std::span<const double> a, std::span<const double> b);

struct MoveGraph {
    std::vector<Code> nodes;                           // = enumeration.proper
    std::vector<std::vector<std::uint32_t>> adjacency; // sorted neighbor indices
    std::vector<std::uint32_t> component;              // component id per node
    std::vector<std::size_t> component_sizes;          // indexed by component id
    std::size_t giant = 0;                             // id of the largest component
    std::uint64_t closure_violations = 0;              // moves that left Q; must be 0
    std::optional<std::size_t> good_total;
    std::optional<std::size_t> good_in_giant;

    std::size_t giant_size() const { return component_sizes.empty() ? 0 : component_sizes[giant]; }
    double giant_fraction() const;
    bool symmetric() const;
};

/// Γ_Q: X ~ Y iff they differ at exactly one vertex v and Y(v) ∈ A(v, X).
MoveGraph move_graph(const Hypergraph& h, Color q, const GoodnessParams* params = nullptr,
                     const EnumerationOptions& options = {});

/// Counts over Ω for the events "v is not good" (per vertex) and "e is monochromatic" (per edge).
struct EventTable {
    std::uint64_t omega_size = 0;
    std::uint64_t proper_count = 0;
    std::vector<std::uint64_t> omega_bad_vertex;
    std::vector<std::uint64_t> proper_bad_vertex;
    std::vector<std::uint64_t> omega_mono_edge;
};
EventTable event_table(const Hypergraph& h, const GoodnessParams& params, const EnumerationOptions& options = {});

struct EventProbabilities {
    Rational pr_omega_av;
    std::optional<Rational> pr_q_av;   // empty when Q is empty
    std::vector<Rational> pr_omega_be; // per edge
};
EventProbabilities event_probabilities(const Hypergraph& h, const GoodnessParams& params, Vertex v,
                                       const EnumerationOptions& options = {});

struct LllEdgeReport {
    EdgeId edge = 0;
    std::size_t dependent = 0;  // |{f ≠ e : f ∩ e ≠ ∅}|
    double weight = 0;          // θ · (1-θ)^dependent
    bool holds = false;         // p <= weight, exactly
};

struct LllPremiseReport {
    Rational p;                  // q^{1-k}
    Rational theta;              // 2/q^{k-1}
    bool theta_at_most_half = false;
    double k_delta_theta = 0;    // kΔθ
    double exp_chain = 0;        // θ·e^{-2kΔθ}
    bool exp_chain_holds = false;
    std::vector<LllEdgeReport> edges;
    bool holds = false;          // every edge holds and θ <= 1/2
};
LllPremiseReport lll_premise_check(const Hypergraph& h, Color q);

struct HssReport {
    Vertex vertex = 0;
    std::size_t neighborhood_size = 0;
    bool premise_holds = false;
    bool q_empty = false;
    Rational lhs;   // Pr_Q(A_v)
    Rational rhs;   // Pr_Ω(A_v) · (1-θ)^{-|N_v|}
    bool holds = false;
    std::optional<double> ratio;  // lhs/rhs when rhs > 0
    /// Premise held, Q non-empty, and the inequality failed.
    bool violation() const noexcept { return premise_holds && !q_empty && !holds; }
};
HssReport hss_transfer_check(const Hypergraph& h, const GoodnessParams& params, Vertex v,
                             const EnumerationOptions& options = {});
std::vector<HssReport> hss_transfer_sweep(const Hypergraph& h, const GoodnessParams& params,
                                          const EnumerationOptions& options = {});

struct TailBound {
    std::size_t i = 0;
    double mu = 0;
    double base = 0;           // e·C(k-1,i)·(i/q)^{k-1-i}·Δ/μ_i
    double value = 0;          // base^{μ_i}
    double log10_value = 0;
    bool vacuous = false;      // value >= 1
    double pow10_mu = 0;       // 10^{-2μ_i}
    double pow10_eps = 0;      // 10^{-2εq}
    double union_bound = 0;    // (k-2)·10^{-2εq}
    double exp_eps = 0;        // e^{-εq}
};
/// Tail bound on Pr_Ω(y_{v,i} >= μ_i) with Δ from params. Throws DomainError unless 1 <= i <= k-2.
TailBound appendix_b_bound(const GoodnessParams& params, std::size_t i);

/// Σ_{j >= threshold} C(d,j) p^j (1-p)^{d-j}
Rational binomial_tail(std::size_t d, const Rational& p, std::size_t threshold);

/// One code per line, ascending.
void write_codes(std::ostream& out, std::span<const Code> codes);

} // namespace hcolor
