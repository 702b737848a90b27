#include "hcolor/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hcolor {

namespace {

std::string join(std::span<const Vertex> vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(vs[i]);
    }
    return out;
}

std::uint64_t pair_key(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
}

} // namespace

std::string ValidationReport::summary() const {
    if (ok()) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i].message;
    }
    return os.str();
}

ValidationReport validate(std::size_t n, std::size_t k, std::span<const std::vector<Vertex>> edges) {
    ValidationReport report;
    std::vector<bool> well_formed(edges.size(), false);

    for (std::size_t j = 0; j < edges.size(); ++j) {
        const auto& e = edges[j];
        bool fine = true;
        if (e.size() != k) {
            report.violations.push_back({Violation::Kind::arity, j, 0, {},
                "edge " + std::to_string(j) + " has " + std::to_string(e.size()) + " vertices, expected "
                    + std::to_string(k)});
            fine = false;
        }
        for (Vertex v : e) {
            if (v >= n) {
                report.violations.push_back({Violation::Kind::vertex_range, j, 0, {v},
                    "edge " + std::to_string(j) + " has vertex " + std::to_string(v) + " outside [0, "
                        + std::to_string(n) + ")"});
                fine = false;
            }
        }
        std::vector<Vertex> sorted(e);
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 1; i < sorted.size(); ++i) {
            if (sorted[i] == sorted[i - 1] && (i == 1 || sorted[i - 2] != sorted[i])) {
                report.violations.push_back({Violation::Kind::duplicate_vertex, j, 0, {sorted[i]},
                    "edge " + std::to_string(j) + " has duplicate vertex " + std::to_string(sorted[i])});
                fine = false;
            }
        }
        well_formed[j] = fine;
    }

    // Two edges violate simplicity iff they share a vertex pair; index every
    // pair to find the colliding edge pairs without an O(m^2) scan.
    std::unordered_map<std::uint64_t, std::size_t> owner;
    std::set<std::pair<std::size_t, std::size_t>> reported;
    for (std::size_t j = 0; j < edges.size(); ++j) {
        if (!well_formed[j]) continue;
        const auto& e = edges[j];
        for (std::size_t a = 0; a < e.size(); ++a) {
            for (std::size_t b = a + 1; b < e.size(); ++b) {
                auto [it, fresh] = owner.try_emplace(pair_key(e[a], e[b]), j);
                if (fresh || it->second == j) continue;
                const std::size_t i = it->second;
                if (!reported.emplace(i, j).second) continue;
                std::vector<Vertex> lhs(edges[i]), rhs(e), shared;
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(), std::back_inserter(shared));
                report.violations.push_back({Violation::Kind::simplicity, i, j, shared,
                    "simplicity: edges " + std::to_string(i) + "," + std::to_string(j) + " share {" + join(shared)
                        + "}"});
            }
        }
    }
    return report;
}

Hypergraph Hypergraph::from_edges(std::size_t n, std::size_t k, std::vector<std::vector<Vertex>> edges) {
    if (k < 2) {
        ValidationReport r;
        r.violations.push_back({Violation::Kind::arity, 0, 0, {}, "uniformity k must be at least 2"});
        throw InvalidHypergraph(std::move(r));
    }
    auto report = validate(n, k, edges);
    if (!report.ok()) throw InvalidHypergraph(std::move(report));

    Hypergraph h;
    h.n_ = n;
    h.k_ = k;
    h.vertices_.reserve(edges.size() * k);
    std::vector<std::size_t> degree(n, 0);
    for (auto& e : edges) {
        std::sort(e.begin(), e.end());
        for (Vertex v : e) {
            h.vertices_.push_back(v);
            ++degree[v];
        }
    }
    h.offsets_.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) h.offsets_[v + 1] = h.offsets_[v] + degree[v];
    h.incidence_.resize(h.offsets_[n]);
    std::vector<std::size_t> cursor(h.offsets_.begin(), h.offsets_.end() - 1);
    for (std::size_t j = 0; j < edges.size(); ++j)
        for (Vertex v : edges[j]) h.incidence_[cursor[v]++] = static_cast<EdgeId>(j);
    h.max_degree_ = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
    return h;
}

std::vector<std::vector<Vertex>> Hypergraph::edge_list() const {
    std::vector<std::vector<Vertex>> out;
    out.reserve(edge_count());
    for (EdgeId e = 0; e < edge_count(); ++e) {
        auto s = edge(e);
        out.emplace_back(s.begin(), s.end());
    }
    return out;
}

ValidationReport validate(const Hypergraph& h) {
    const auto edges = h.edge_list();
    auto report = validate(h.vertex_count(), h.uniformity(), edges);

    std::size_t max_deg = 0;
    for (Vertex v = 0; v < h.vertex_count(); ++v) {
        max_deg = std::max(max_deg, h.degree(v));
        for (EdgeId e : h.incident(v)) {
            auto s = h.edge(e);
            if (e >= edges.size() || std::find(s.begin(), s.end(), v) == s.end())
                report.violations.push_back({Violation::Kind::incidence, e, 0, {v},
                    "incidence of vertex " + std::to_string(v) + " lists edge " + std::to_string(e)
                        + " which does not contain it"});
        }
    }
    for (EdgeId e = 0; e < edges.size(); ++e) {
        for (Vertex v : edges[e]) {
            if (v >= h.vertex_count()) continue;
            auto inc = h.incident(v);
            if (std::find(inc.begin(), inc.end(), e) == inc.end())
                report.violations.push_back({Violation::Kind::incidence, e, 0, {v},
                    "edge " + std::to_string(e) + " missing from incidence of vertex " + std::to_string(v)});
        }
    }
    if (max_deg != h.max_degree())
        report.violations.push_back({Violation::Kind::degree, 0, 0, {},
            "cached max degree " + std::to_string(h.max_degree()) + " differs from " + std::to_string(max_deg)});
    return report;
}

std::vector<EdgeId> neighborhood(const Hypergraph& h, Vertex v) {
    if (v >= h.vertex_count())
        throw DomainError("vertex " + std::to_string(v) + " out of range [0, " + std::to_string(h.vertex_count()) + ")");
    std::vector<EdgeId> out;
    for (EdgeId e : h.incident(v))
        for (Vertex w : h.edge(e))
            for (EdgeId f : h.incident(w)) out.push_back(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<EdgeId> intersecting_edges(const Hypergraph& h, EdgeId e) {
    if (e >= h.edge_count()) throw DomainError("edge " + std::to_string(e) + " out of range");
    std::vector<EdgeId> out;
    for (Vertex w : h.edge(e))
        for (EdgeId f : h.incident(w))
            if (f != e) out.push_back(f);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

// Floyd's algorithm: a uniform k-subset of {0..n-1} with exactly k draws.
std::vector<Vertex> random_subset(std::size_t n, std::size_t k, Rng& rng) {
    std::vector<Vertex> chosen;
    chosen.reserve(k);
    for (std::size_t j = n - k; j < n; ++j) {
        auto t = static_cast<Vertex>(rng.uniform_below(j + 1));
        if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
            chosen.push_back(t);
        else
            chosen.push_back(static_cast<Vertex>(j));
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

} // namespace

GeneratedHypergraph generate_random_simple(std::size_t n, std::size_t k, const GeneratorOptions& options,
                                           std::uint64_t seed) {
    if (k < 2) throw DomainError("uniformity k must be at least 2");
    if (options.max_degree < 1) throw DomainError("target max degree must be at least 1");

    GeneratorStats stats;
    if (n < k) {
        if (options.target_edges.value_or(0) > 0)
            throw GenerationError("no " + std::to_string(k) + "-subset of " + std::to_string(n) + " vertices exists",
                                  stats);
        return {Hypergraph::from_edges(n, k, {}), stats};
    }

    const std::size_t expected =
        options.target_edges.value_or(std::max<std::size_t>(1, n * options.max_degree / k));
    stats.rejection_cap = options.max_consecutive_rejections
                            ? options.max_consecutive_rejections
                            : 1000 * std::max<std::size_t>(1, expected);

    Rng rng(seed);
    std::vector<std::vector<Vertex>> edges;
    std::vector<std::size_t> degree(n, 0);
    std::unordered_set<std::uint64_t> used_pairs;
    std::size_t consecutive = 0;

    while (!options.target_edges || edges.size() < *options.target_edges) {
        if (consecutive >= stats.rejection_cap) {
            if (options.target_edges) {
                stats.accepted = edges.size();
                throw GenerationError("target of " + std::to_string(*options.target_edges)
                                          + " edges unreachable: stopped at " + std::to_string(edges.size())
                                          + " after " + std::to_string(consecutive) + " consecutive rejections",
                                      stats);
            }
            break;
        }
        ++stats.draws;
        auto cand = random_subset(n, k, rng);

        bool degree_ok = std::all_of(cand.begin(), cand.end(),
                                     [&](Vertex v) { return degree[v] < options.max_degree; });
        if (!degree_ok) {
            ++stats.rejected_degree;
            ++consecutive;
            continue;
        }
        bool simple = true;
        for (std::size_t a = 0; a < k && simple; ++a)
            for (std::size_t b = a + 1; b < k && simple; ++b)
                simple = !used_pairs.contains(pair_key(cand[a], cand[b]));
        if (!simple) {
            ++stats.rejected_simplicity;
            ++consecutive;
            continue;
        }

        consecutive = 0;
        for (std::size_t a = 0; a < k; ++a) {
            ++degree[cand[a]];
            for (std::size_t b = a + 1; b < k; ++b) used_pairs.insert(pair_key(cand[a], cand[b]));
        }
        edges.push_back(std::move(cand));
    }
    stats.accepted = edges.size();
    return {Hypergraph::from_edges(n, k, std::move(edges)), stats};
}

Hypergraph sunflower(std::size_t d, std::size_t k) {
    if (d < 1 || k < 2) throw DomainError("sunflower needs d >= 1 and k >= 2");
    std::vector<std::vector<Vertex>> edges;
    Vertex next = 1;
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Vertex> e{0};
        for (std::size_t i = 1; i < k; ++i) e.push_back(next++);
        edges.push_back(std::move(e));
    }
    return Hypergraph::from_edges(1 + d * (k - 1), k, std::move(edges));
}

} // namespace hcolor
