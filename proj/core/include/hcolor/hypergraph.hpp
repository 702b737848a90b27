#pragma once

#include "hcolor/error.hpp"
#include "hcolor/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hcolor {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

struct Violation {
    enum class Kind { arity, vertex_range, duplicate_vertex, simplicity, incidence, degree };

    Kind kind;
    std::size_t edge = 0;
    std::size_t other_edge = 0;     // simplicity only
    std::vector<Vertex> vertices;   // shared vertices, duplicated vertex, or offending id
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::string summary() const;
};

/// Checks a raw edge list against the k-uniform simple hypergraph invariants.
/// Every violation is reported; nothing throws.
ValidationReport validate(std::size_t n, std::size_t k, std::span<const std::vector<Vertex>> edges);

class InvalidHypergraph : public Error {
public:
    explicit InvalidHypergraph(ValidationReport report)
        : Error("invalid hypergraph: " + report.summary()), report_(std::move(report)) {}

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

/// Simple k-uniform hypergraph. Immutable once built; vertices within an edge
/// are stored in ascending order, edges in the order given.
class Hypergraph {
public:
    Hypergraph() = default;

    /// Validates and builds. Throws InvalidHypergraph on any violation.
    static Hypergraph from_edges(std::size_t n, std::size_t k, std::vector<std::vector<Vertex>> edges);

    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t uniformity() const noexcept { return k_; }
    std::size_t edge_count() const noexcept { return k_ ? vertices_.size() / k_ : 0; }
    std::size_t max_degree() const noexcept { return max_degree_; }
    std::size_t degree(Vertex v) const { return incident(v).size(); }

    std::span<const Vertex> edge(EdgeId e) const {
        return {vertices_.data() + static_cast<std::size_t>(e) * k_, k_};
    }
    std::span<const EdgeId> incident(Vertex v) const {
        return {incidence_.data() + offsets_.at(v), offsets_[v + 1] - offsets_[v]};
    }

    std::vector<std::vector<Vertex>> edge_list() const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t k_ = 2;
    std::size_t max_degree_ = 0;
    std::vector<Vertex> vertices_;          // m*k, edge-major
    std::vector<std::size_t> offsets_{0};   // CSR offsets into incidence_
    std::vector<EdgeId> incidence_;
};

/// Re-derives every invariant of a built hypergraph, including incidence
/// consistency and the cached maximum degree.
ValidationReport validate(const Hypergraph& h);

/// Edge ids f with f ∩ e ≠ ∅ for some edge e containing v, ascending.
/// Throws DomainError for v out of range.
std::vector<EdgeId> neighborhood(const Hypergraph& h, Vertex v);

/// Edge ids f ≠ e with f ∩ e ≠ ∅, ascending.
std::vector<EdgeId> intersecting_edges(const Hypergraph& h, EdgeId e);

struct GeneratorOptions {
    std::size_t max_degree = 1;
    /// Stop once this many edges are accepted. Without a target the generator
    /// runs until the rejection cap is hit (a saturated instance).
    std::optional<std::size_t> target_edges;
    /// Consecutive-rejection cap; 0 selects 1000 * (target edges, or n*Δ/k when untargeted).
    std::size_t max_consecutive_rejections = 0;
};

struct GeneratorStats {
    std::uint64_t draws = 0;
    std::uint64_t rejected_simplicity = 0;
    std::uint64_t rejected_degree = 0;
    std::size_t rejection_cap = 0;
    std::size_t accepted = 0;
};

class GenerationError : public Error {
public:
    GenerationError(const std::string& what, GeneratorStats stats)
        : Error(what), stats_(stats) {}
    const GeneratorStats& stats() const noexcept { return stats_; }

private:
    GeneratorStats stats_;
};

struct GeneratedHypergraph {
    Hypergraph graph;
    GeneratorStats stats;
};

/// Rejection sampler: draw a uniform k-subset, keep it iff it meets every
/// accepted edge in at most one vertex and no member would exceed max_degree.
/// n < k yields the empty hypergraph. Throws GenerationError when a target
/// edge count cannot be reached within the rejection cap.
GeneratedHypergraph generate_random_simple(std::size_t n, std::size_t k, const GeneratorOptions& options,
                                           std::uint64_t seed);

inline Hypergraph generate_random_simple(std::size_t n, std::size_t k, std::size_t max_degree, std::uint64_t seed) {
    GeneratorOptions options;
    options.max_degree = max_degree;
    return generate_random_simple(n, k, options, seed).graph;
}

/// d edges of size k sharing vertex 0 and otherwise disjoint; n = 1 + d(k-1).
Hypergraph sunflower(std::size_t d, std::size_t k);

} // namespace hcolor
