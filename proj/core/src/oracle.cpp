#include "hcolor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <thread>

namespace hcolor {

namespace {

unsigned worker_count(const EnumerationOptions& options, std::uint64_t work) {
    unsigned t = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    // Small spaces are not worth a thread each.
    return static_cast<unsigned>(std::clamp<std::uint64_t>(work / 4096, 1, t));
}

// Splits [0, total) into contiguous ranges, runs fn(chunk, begin, end) on a
// worker each, and returns after all finish. Chunk order is range order.
template <class Fn>
void for_each_range(std::uint64_t total, unsigned workers, Fn fn) {
    if (workers <= 1) {
        fn(0u, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::jthread> pool;
    const std::uint64_t per = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t begin = std::min(total, w * per), end = std::min(total, begin + per);
        pool.emplace_back([=, &fn] { fn(w, begin, end); });
    }
}

// Visits every coloring with code in [begin, end) in increasing code order,
// updating one Coloring in place.
template <class Visit>
void scan(std::size_t n, Color q, std::uint64_t begin, std::uint64_t end, Visit visit) {
    if (begin >= end) return;
    Coloring x = decode(begin, n, q);
    std::vector<Color> digits(x.colors().begin(), x.colors().end());
    for (Code code = begin; code < end; ++code) {
        visit(code, x);
        for (std::size_t v = 0; v < n; ++v) {
            if (++digits[v] < q) {
                x.set(static_cast<Vertex>(v), digits[v]);
                break;
            }
            digits[v] = 0;
            x.set(static_cast<Vertex>(v), 0);
        }
    }
}

std::vector<std::uint64_t> powers(std::size_t n, Color q) {
    std::vector<std::uint64_t> pw(n + 1, 1);
    for (std::size_t v = 1; v <= n; ++v) pw[v] = pw[v - 1] * q;
    return pw;
}

} // namespace

Code encode(const Coloring& x) {
    Code code = 0;
    for (std::size_t v = x.size(); v-- > 0;) code = code * x.palette_size() + x[static_cast<Vertex>(v)];
    return code;
}

Coloring decode(Code code, std::size_t n, Color q) {
    std::vector<Color> colors(n);
    for (std::size_t v = 0; v < n; ++v) {
        colors[v] = static_cast<Color>(code % q);
        code /= q;
    }
    return Coloring(q, std::move(colors));
}

std::uint64_t state_space_size(std::size_t n, Color q, std::uint64_t budget) {
    std::uint64_t size = 1;
    for (std::size_t v = 0; v < n; ++v) {
        if (size > budget / q)
            throw BudgetExceeded(std::to_string(q) + "^" + std::to_string(n) + " states exceed the budget of "
                                 + std::to_string(budget));
        size *= q;
    }
    if (size > budget) throw BudgetExceeded("state space exceeds the budget of " + std::to_string(budget));
    return size;
}

std::optional<std::size_t> EnumerationResult::index_of(Code code) const {
    auto it = std::lower_bound(proper.begin(), proper.end(), code);
    if (it == proper.end() || *it != code) return std::nullopt;
    return static_cast<std::size_t>(it - proper.begin());
}

EnumerationResult enumerate_proper(const Hypergraph& h, Color q, const GoodnessParams* params,
                                   const EnumerationOptions& options) {
    EnumerationResult result;
    result.n = h.vertex_count();
    result.q = q;
    result.omega_size = state_space_size(result.n, q, options.budget);

    const unsigned workers = worker_count(options, result.omega_size);
    std::vector<std::vector<Code>> found(workers);
    std::vector<std::vector<bool>> good(workers);
    for_each_range(result.omega_size, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        scan(result.n, q, begin, end, [&](Code code, const Coloring& x) {
            if (!is_proper(h, x)) return;
            found[w].push_back(code);
            if (params) good[w].push_back(is_good(h, x, *params));
        });
    });
    for (unsigned w = 0; w < workers; ++w) {
        result.proper.insert(result.proper.end(), found[w].begin(), found[w].end());
        result.good.insert(result.good.end(), good[w].begin(), good[w].end());
    }
    return result;
}

double exact_tvd(const EnumerationResult& q_set, std::span<const double> dist) {
    if (dist.size() != q_set.omega_size)
        throw DomainError("distribution has " + std::to_string(dist.size()) + " entries, expected |Omega| = "
                          + std::to_string(q_set.omega_size));
    long double total = 0;
    for (double p : dist) {
        if (p < 0) throw DomainError("distribution has a negative entry");
        total += p;
    }
    if (std::abs(total - 1.0L) > 1e-12L) throw DomainError("distribution is not normalized within 1e-12");
    if (q_set.count() == 0) throw DomainError("no proper colorings: uniform law on Q undefined");

    const long double u = 1.0L / static_cast<long double>(q_set.count());
    long double sum = 0;
    std::size_t next = 0;
    for (Code code = 0; code < dist.size(); ++code) {
        const bool in_q = next < q_set.proper.size() && q_set.proper[next] == code;
        if (in_q) ++next;
        sum += std::abs(static_cast<long double>(dist[code]) - (in_q ? u : 0.0L));
    }
    return static_cast<double>(sum / 2);
}

Rational exact_tvd_counts(const EnumerationResult& q_set, std::span<const std::uint64_t> counts) {
    if (counts.size() != q_set.omega_size) throw DomainError("count vector does not cover Omega");
    if (q_set.count() == 0) throw DomainError("no proper colorings: uniform law on Q undefined");
    __extension__ using Wide = unsigned __int128;
    const Wide qsize = q_set.count();
    Wide total = 0;
    for (auto c : counts) total += c;
    if (total == 0) throw DomainError("empty sample");

    // 2·R·|Q|·TVD = Σ_{x∈Q} |c_x|Q| - R| + Σ_{x∉Q} c_x|Q|
    Wide numerator_sum = 0;
    std::size_t next = 0;
    for (Code code = 0; code < counts.size(); ++code) {
        const Wide scaled = static_cast<Wide>(counts[code]) * qsize;
        if (next < q_set.proper.size() && q_set.proper[next] == code) {
            ++next;
            numerator_sum += scaled > total ? scaled - total : total - scaled;
        } else {
            numerator_sum += scaled;
        }
    }
    auto big = [](Wide w) {
        BigInt b = static_cast<std::uint64_t>(w >> 64);
        b <<= 64;
        b += static_cast<std::uint64_t>(w);
        return b;
    };
    return Rational(big(numerator_sum), 2 * big(total) * big(qsize));
}

double total_variation(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DomainError("distributions over different supports");
    long double sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += std::abs(static_cast<long double>(a[i]) - b[i]);
    return static_cast<double>(sum / 2);
}

double MoveGraph::giant_fraction() const {
    return nodes.empty() ? 0.0 : static_cast<double>(giant_size()) / static_cast<double>(nodes.size());
}

bool MoveGraph::symmetric() const {
    for (std::uint32_t i = 0; i < adjacency.size(); ++i)
        for (std::uint32_t j : adjacency[i])
            if (!std::binary_search(adjacency[j].begin(), adjacency[j].end(), i)) return false;
    return true;
}

MoveGraph move_graph(const Hypergraph& h, Color q, const GoodnessParams* params, const EnumerationOptions& options) {
    const auto q_set = enumerate_proper(h, q, params, options);
    const auto n = h.vertex_count();
    const auto pw = powers(n, q);

    MoveGraph g;
    g.nodes = q_set.proper;
    g.adjacency.resize(g.nodes.size());

    std::vector<std::uint32_t> parent(g.nodes.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };

    for (std::uint32_t i = 0; i < g.nodes.size(); ++i) {
        const Coloring x = decode(g.nodes[i], n, q);
        for (Vertex v = 0; v < n; ++v) {
            for (Color c : available_colors(h, x, v)) {
                if (c == x[v]) continue;
                const Code y = g.nodes[i] - x[v] * pw[v] + c * pw[v];
                auto j = q_set.index_of(y);
                if (!j) {
                    ++g.closure_violations;
                    continue;
                }
                g.adjacency[i].push_back(static_cast<std::uint32_t>(*j));
                const auto ri = find(i), rj = find(static_cast<std::uint32_t>(*j));
                if (ri != rj) parent[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
        std::sort(g.adjacency[i].begin(), g.adjacency[i].end());
    }

    // Component ids in order of first appearance.
    std::vector<std::int64_t> id_of_root(g.nodes.size(), -1);
    g.component.resize(g.nodes.size());
    for (std::uint32_t i = 0; i < g.nodes.size(); ++i) {
        const auto r = find(i);
        if (id_of_root[r] < 0) {
            id_of_root[r] = static_cast<std::int64_t>(g.component_sizes.size());
            g.component_sizes.push_back(0);
        }
        g.component[i] = static_cast<std::uint32_t>(id_of_root[r]);
        ++g.component_sizes[g.component[i]];
    }
    if (!g.component_sizes.empty())
        g.giant = static_cast<std::size_t>(
            std::max_element(g.component_sizes.begin(), g.component_sizes.end()) - g.component_sizes.begin());

    if (params) {
        std::size_t total = 0, inside = 0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            if (!q_set.good[i]) continue;
            ++total;
            inside += g.component[i] == g.giant;
        }
        g.good_total = total;
        g.good_in_giant = inside;
    }
    return g;
}

EventTable event_table(const Hypergraph& h, const GoodnessParams& params, const EnumerationOptions& options) {
    const auto n = h.vertex_count();
    const auto m = h.edge_count();
    EventTable table;
    table.omega_size = state_space_size(n, params.q(), options.budget);

    const unsigned workers = worker_count(options, table.omega_size);
    std::vector<EventTable> partial(workers);
    for (auto& p : partial) {
        p.omega_bad_vertex.assign(n, 0);
        p.proper_bad_vertex.assign(n, 0);
        p.omega_mono_edge.assign(m, 0);
    }
    for_each_range(table.omega_size, workers, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        auto& p = partial[w];
        std::vector<bool> bad(n);
        scan(n, params.q(), begin, end, [&](Code, const Coloring& x) {
            bool proper = true;
            for (EdgeId e = 0; e < m; ++e) {
                auto s = h.edge(e);
                const Color c = x[s.front()];
                if (std::all_of(s.begin() + 1, s.end(), [&](Vertex u) { return x[u] == c; })) {
                    ++p.omega_mono_edge[e];
                    proper = false;
                }
            }
            p.proper_count += proper;
            for (Vertex v = 0; v < n; ++v) {
                if (!bad_index(h, x, params, v)) continue;
                ++p.omega_bad_vertex[v];
                if (proper) ++p.proper_bad_vertex[v];
            }
        });
    });
    table.omega_bad_vertex.assign(n, 0);
    table.proper_bad_vertex.assign(n, 0);
    table.omega_mono_edge.assign(m, 0);
    for (const auto& p : partial) {
        table.proper_count += p.proper_count;
        for (std::size_t v = 0; v < n; ++v) {
            table.omega_bad_vertex[v] += p.omega_bad_vertex[v];
            table.proper_bad_vertex[v] += p.proper_bad_vertex[v];
        }
        for (std::size_t e = 0; e < m; ++e) table.omega_mono_edge[e] += p.omega_mono_edge[e];
    }
    return table;
}

namespace {

Rational ratio(std::uint64_t a, std::uint64_t b) { return Rational(BigInt(a), BigInt(b)); }

EventProbabilities probabilities_from(const EventTable& t, Vertex v) {
    EventProbabilities p;
    p.pr_omega_av = ratio(t.omega_bad_vertex.at(v), t.omega_size);
    if (t.proper_count) p.pr_q_av = ratio(t.proper_bad_vertex[v], t.proper_count);
    for (auto c : t.omega_mono_edge) p.pr_omega_be.push_back(ratio(c, t.omega_size));
    return p;
}

HssReport hss_from(const Hypergraph& h, const GoodnessParams& params, const EventTable& t, bool premise, Vertex v) {
    HssReport r;
    r.vertex = v;
    r.neighborhood_size = neighborhood(h, v).size();
    r.premise_holds = premise;
    const auto p = probabilities_from(t, v);
    const BigInt qk = pow_int(params.q(), h.uniformity() - 1);
    // (1-θ)^{-|N_v|} = (q^{k-1} / (q^{k-1} - 2))^{|N_v|}
    const Rational inflate = qk > 2 ? pow_rational(Rational(qk, qk - 2), r.neighborhood_size) : Rational(0);
    r.rhs = p.pr_omega_av * inflate;
    if (!p.pr_q_av) {
        r.q_empty = true;
        return r;
    }
    r.lhs = *p.pr_q_av;
    r.holds = qk > 2 ? r.lhs <= r.rhs : false;
    if (r.rhs > 0) r.ratio = to_double(r.lhs / r.rhs);
    return r;
}

} // namespace

EventProbabilities event_probabilities(const Hypergraph& h, const GoodnessParams& params, Vertex v,
                                       const EnumerationOptions& options) {
    if (v >= h.vertex_count()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    return probabilities_from(event_table(h, params, options), v);
}

LllPremiseReport lll_premise_check(const Hypergraph& h, Color q) {
    const auto k = h.uniformity();
    const BigInt qk = pow_int(q, k - 1);
    LllPremiseReport r;
    r.p = Rational(BigInt(1), qk);
    r.theta = Rational(BigInt(2), qk);
    r.theta_at_most_half = r.theta <= Rational(1, 2);
    const double theta = to_double(r.theta);
    r.k_delta_theta = static_cast<double>(k * h.max_degree()) * theta;
    r.exp_chain = theta * std::exp(-2.0 * r.k_delta_theta);
    r.exp_chain_holds = r.exp_chain >= to_double(r.p);

    bool all = true;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        LllEdgeReport er;
        er.edge = e;
        er.dependent = intersecting_edges(h, e).size();
        er.weight = theta * std::pow(1.0 - theta, static_cast<double>(er.dependent));
        // p <= θ(1-θ)^d  <=>  q^{(k-1)d} <= 2(q^{k-1} - 2)^d
        er.holds = qk >= 2 && pow_int(qk, er.dependent) <= 2 * pow_int(qk - 2, er.dependent);
        all = all && er.holds;
        r.edges.push_back(er);
    }
    r.holds = all && r.theta_at_most_half;
    return r;
}

HssReport hss_transfer_check(const Hypergraph& h, const GoodnessParams& params, Vertex v,
                             const EnumerationOptions& options) {
    if (v >= h.vertex_count()) throw DomainError("vertex " + std::to_string(v) + " out of range");
    const bool premise = lll_premise_check(h, params.q()).holds;
    return hss_from(h, params, event_table(h, params, options), premise, v);
}

std::vector<HssReport> hss_transfer_sweep(const Hypergraph& h, const GoodnessParams& params,
                                          const EnumerationOptions& options) {
    const bool premise = lll_premise_check(h, params.q()).holds;
    const auto table = event_table(h, params, options);
    std::vector<HssReport> out;
    for (Vertex v = 0; v < h.vertex_count(); ++v) out.push_back(hss_from(h, params, table, premise, v));
    return out;
}

TailBound appendix_b_bound(const GoodnessParams& params, std::size_t i) {
    const auto k = params.k();
    if (i < 1 || i + 2 > k) throw DomainError("tail bound index i must satisfy 1 <= i <= k-2");
    TailBound b;
    b.i = i;
    b.mu = params.mu(i);
    const double q = params.q();
    double choose = 1;
    for (std::size_t j = 1; j <= i; ++j) choose = choose * static_cast<double>(k - 1 - i + j) / static_cast<double>(j);
    b.base = std::numbers::e * choose * std::pow(static_cast<double>(i) / q, static_cast<double>(k - 1 - i))
           * static_cast<double>(params.max_degree()) / b.mu;
    b.log10_value = b.base > 0 ? b.mu * std::log10(b.base) : -std::numeric_limits<double>::infinity();
    b.value = std::pow(10.0, b.log10_value);
    b.vacuous = b.log10_value >= 0;
    const double eps_q = to_double(params.eps() * params.q());
    b.pow10_mu = std::pow(10.0, -2.0 * b.mu);
    b.pow10_eps = std::pow(10.0, -2.0 * eps_q);
    b.union_bound = static_cast<double>(k - 2) * b.pow10_eps;
    b.exp_eps = std::exp(-eps_q);
    return b;
}

Rational binomial_tail(std::size_t d, const Rational& p, std::size_t threshold) {
    Rational total = 0;
    BigInt choose = 1;  // C(d, j)
    for (std::size_t j = 0; j <= d; ++j) {
        if (j > 0) choose = choose * (d - j + 1) / j;
        if (j >= threshold) total += Rational(choose) * pow_rational(p, j) * pow_rational(1 - p, d - j);
    }
    return total;
}

void write_codes(std::ostream& out, std::span<const Code> codes) {
    for (Code c : codes) out << c << '\n';
}

} // namespace hcolor
