#include "generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "errors.hpp"
#include "measures.hpp"
#include "random.hpp"

namespace em {

namespace {

struct GrowingGraph {
    std::int32_t n = 0;
    std::vector<Edge> edges;
    std::vector<std::int32_t> degree;  // by label - 1

    void ensure_node(std::int32_t label) {
        while (n < label) {
            ++n;
            degree.push_back(0);
        }
    }
    void add_edge(std::int32_t u, std::int32_t v) {
        ensure_node(std::max(u, v));
        edges.emplace_back(std::min(u, v), std::max(u, v));
        degree[u - 1]++;
        degree[v - 1]++;
    }
    bool has_edge(std::int32_t u, std::int32_t v) const {
        const Edge e{std::min(u, v), std::max(u, v)};
        return std::find(edges.begin(), edges.end(), e) != edges.end();
    }
    Graph freeze() const { return Graph::build(n, edges); }
};

}  // namespace

ZkTrace zk_graph(std::int32_t steps) {
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    GrowingGraph g;
    g.add_edge(1, 2);
    std::vector<ZkStep> records;
    records.reserve(static_cast<std::size_t>(steps));
    std::int32_t max_degree = 1;
    for (std::int32_t t = 0; t < steps; ++t) {
        const std::int32_t m = max_degree;
        const std::int32_t c = m + 1;
        g.ensure_node(c);
        const std::int32_t d = g.degree[c - 1];
        const std::int32_t add = m + 1 - d;
        for (std::int32_t label = c + 1; label <= c + add; ++label) g.add_edge(c, label);
        max_degree = c;  // node c now has degree c
        records.push_back({m, c, add});
    }
    return ZkTrace{g.freeze(), steps, std::move(records)};
}

namespace {

std::int64_t isqrt64(std::int64_t x) {
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

}  // namespace

std::int64_t zk_edge_count_formula(std::int32_t steps) {
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    // floor(k/r) = (floor(k*sqrt(5)) - k) / 2, exactly, since k*sqrt(5) is
    // irrational and floor(k*sqrt(5)) = isqrt(5k^2).
    std::int64_t sum = 0;
    for (std::int64_t k = 1; k <= static_cast<std::int64_t>(steps) + 2; ++k)
        sum += (isqrt64(5 * k * k) - k) / 2;
    return sum;
}

Graph zk_graph_randomized(std::int32_t steps, std::uint64_t seed) {
    if (steps < 0) throw std::invalid_argument("steps must be non-negative");
    Rng rng(seed);
    GrowingGraph g;
    g.add_edge(1, 2);
    std::vector<bool> core{true, false};  // node 1 has degree 1 == its label
    auto is_core = [&](std::int32_t v) { return core[static_cast<std::size_t>(v) - 1]; };
    for (std::int32_t t = 0; t < steps; ++t) {
        const std::int32_t m = *std::max_element(g.degree.begin(), g.degree.end());
        // candidate: uniform among supportive nodes of maximal degree
        std::int32_t best = 0;
        std::vector<std::int32_t> candidates;
        for (std::int32_t v = 1; v <= g.n; ++v) {
            if (is_core(v)) continue;
            if (g.degree[v - 1] > best) {
                best = g.degree[v - 1];
                candidates.clear();
            }
            if (g.degree[v - 1] == best) candidates.push_back(v);
        }
        const std::int32_t c = candidates[rng.below(candidates.size())];
        std::int32_t need = m + 1 - g.degree[c - 1];
        // existing supportive nodes not yet adjacent to the candidate, in
        // random order, then freshly created nodes
        std::vector<std::int32_t> eligible;
        for (std::int32_t v = 1; v <= g.n; ++v)
            if (v != c && !is_core(v) && !g.has_edge(c, v)) eligible.push_back(v);
        for (std::size_t i = eligible.size(); i > 1; --i)
            std::swap(eligible[i - 1], eligible[rng.below(i)]);
        for (const auto v : eligible) {
            if (need == 0) break;
            g.add_edge(c, v);
            --need;
        }
        while (need > 0) {
            const std::int32_t fresh = g.n + 1;
            g.add_edge(c, fresh);
            core.push_back(false);
            --need;
        }
        core[static_cast<std::size_t>(c) - 1] = true;
    }
    return g.freeze();
}

Graph digit_graph(const DigitStream& bits, std::int32_t n, DigitGraphMode mode) {
    if (bits.base != 2) throw std::invalid_argument("digit graph needs a base-2 stream");
    if (n < 1) throw std::invalid_argument("node count must be positive");
    const std::int64_t cells = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t required = (mode == DigitGraphMode::upper_triangle)
                                      ? cells
                                      : static_cast<std::int64_t>(n) * n;
    if (bits.count() < required)
        throw std::invalid_argument("insufficient digits: need " + std::to_string(required) +
                                    ", have " + std::to_string(bits.count()));
    std::vector<Edge> edges;
    std::int64_t k = 0;
    for (std::int32_t i = 1; i <= n; ++i) {
        for (std::int32_t j = i + 1; j <= n; ++j, ++k) {
            const std::int64_t pos = (mode == DigitGraphMode::upper_triangle)
                                         ? k
                                         : static_cast<std::int64_t>(i - 1) * n + (j - 1);
            if (bits.digits[static_cast<std::size_t>(pos)]) edges.emplace_back(i, j);
        }
    }
    return Graph::build(n, edges);
}

Graph er_graph(std::int32_t n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (std::int32_t i = 1; i <= n; ++i)
        for (std::int32_t j = i + 1; j <= n; ++j)
            if (rng.bernoulli(p)) edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

Graph er_graph_exact(std::int32_t n, std::int64_t edges_wanted, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("node count must be positive");
    const std::int64_t cells = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (edges_wanted < 0 || edges_wanted > cells)
        throw std::invalid_argument("edge count out of range");
    Rng rng(seed);
    // Floyd's sampling: uniform m-subset of pair slots
    std::unordered_set<std::int64_t> chosen;
    for (std::int64_t j = cells - edges_wanted; j < cells; ++j) {
        const std::int64_t r = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(j) + 1));
        chosen.insert(chosen.count(r) ? j : r);
    }
    std::vector<std::int64_t> slots(chosen.begin(), chosen.end());
    std::sort(slots.begin(), slots.end());
    std::vector<Edge> edges;
    edges.reserve(slots.size());
    for (const auto slot : slots) {
        // invert the row-major upper-triangle index
        std::int64_t rem = slot;
        std::int32_t i = 1;
        while (rem >= n - i) {
            rem -= n - i;
            ++i;
        }
        edges.emplace_back(i, static_cast<std::int32_t>(i + 1 + rem));
    }
    return Graph::build(n, edges);
}

Graph ba_graph(std::int32_t n, std::int32_t m, std::uint64_t seed) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < m + 1) throw std::invalid_argument("n must be at least m+1");
    Rng rng(seed);
    std::vector<Edge> edges;
    std::vector<std::int32_t> chances;  // node label repeated once per degree
    for (std::int32_t i = 1; i <= m + 1; ++i)
        for (std::int32_t j = i + 1; j <= m + 1; ++j) edges.emplace_back(i, j);
    for (std::int32_t i = 1; i <= m + 1; ++i)
        for (std::int32_t r = 0; r < m; ++r) chances.push_back(i);
    for (std::int32_t v = m + 2; v <= n; ++v) {
        std::set<std::int32_t> targets;
        while (std::cmp_less(targets.size(), m))
            targets.insert(chances[rng.below(chances.size())]);
        for (const auto t : targets) {
            edges.emplace_back(t, v);
            chances.push_back(t);
            chances.push_back(v);
        }
    }
    return Graph::build(n, edges);
}

Graph regular_ring_graph(std::int32_t n, std::int32_t k) {
    if (k < 0 || k % 2 != 0) throw std::invalid_argument("k must be even and non-negative");
    if (n <= k) throw std::invalid_argument("n must exceed k");
    std::vector<Edge> edges;
    for (std::int32_t i = 1; i <= n; ++i) {
        for (std::int32_t d = 1; d <= k / 2; ++d) {
            const std::int32_t j = (i - 1 + d) % n + 1;
            edges.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    return Graph::build(n, edges);
}

CorrelationMatrix CorrelationMatrix::make(double a, double b, double c, double d) {
    if (std::abs(a + b - 1.0) > 1e-12 || std::abs(c + d - 1.0) > 1e-12)
        throw std::invalid_argument("correlation matrix rows must sum to 1 within 1e-12");
    return CorrelationMatrix{{a, b}, {c, d}};
}

std::pair<std::vector<double>, std::vector<double>> correlated_pair(const CorrelationMatrix& m,
                                                                    std::int64_t count,
                                                                    std::uint64_t seed) {
    if (count < 2) throw std::invalid_argument("count must be >= 2");
    Rng rng(seed);
    std::vector<double> y1, y2;
    y1.reserve(static_cast<std::size_t>(count));
    y2.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        const double x1 = rng.normal();
        const double x2 = rng.normal();
        y1.push_back(m.row0[0] * x1 + m.row0[1] * x2);
        y2.push_back(m.row1[0] * x1 + m.row1[1] * x2);
    }
    return {std::move(y1), std::move(y2)};
}

double pearson_correlation(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("need two equal samples");
    const double n = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
        syy += (y[i] - my) * (y[i] - my);
    }
    return sxy / std::sqrt(sxx * syy);
}

namespace {

// Truncated geometric over degree values 1..K with weight q^(i-1).
std::vector<double> geometric_family(std::int32_t bins, double q) {
    std::vector<double> p(static_cast<std::size_t>(bins));
    double w = 1.0, sum = 0.0;
    for (auto& x : p) {
        x = w;
        sum += w;
        w *= q;
    }
    for (auto& x : p) x /= sum;
    return p;
}

double family_entropy(std::int32_t bins, double q) {
    double h = 0.0;
    for (const double p : geometric_family(bins, q))
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

std::vector<std::int64_t> largest_remainder_counts(std::int32_t n, const std::vector<double>& p) {
    std::vector<std::int64_t> counts(p.size(), 0);
    std::vector<std::pair<double, std::size_t>> rema;
    std::int64_t assigned = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double exact = p[i] * n;
        counts[i] = static_cast<std::int64_t>(std::floor(exact));
        assigned += counts[i];
        rema.emplace_back(exact - std::floor(exact), i);
    }
    std::sort(rema.begin(), rema.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });
    for (std::size_t i = 0; assigned < n; ++i, ++assigned) counts[rema[i].second]++;
    return counts;
}

double counts_entropy(const std::vector<std::int64_t>& counts) {
    std::int64_t total = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
    double h = 0.0;
    for (const auto c : counts) {
        if (c == 0) continue;
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

double empirical_entropy(const DegreeSequence& d) {
    std::map<std::int32_t, std::int64_t> hist;
    for (const auto v : d) hist[v]++;
    double h = 0.0;
    for (const auto& [_, c] : hist) {
        const double p = static_cast<double>(c) / static_cast<double>(d.size());
        h -= p * std::log2(p);
    }
    return h;
}

void decrement_one_maximal(DegreeSequence& d) {
    const auto it = std::max_element(d.begin(), d.end());
    if (*it > 0) (*it)--;
}

}  // namespace

DegreeSequence targeted_degree_sequence(std::int32_t n, double target_bits, double tol,
                                        std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    if (tol <= 0.0) throw std::invalid_argument("tolerance must be positive");
    if (target_bits < 0.0 || target_bits > std::log2(static_cast<double>(n)))
        throw std::invalid_argument("target entropy must be in [0, log2(n)]");
    const std::int32_t bins = n - 1;  // degree values 1..n-1
    const double max_h = std::log2(static_cast<double>(bins));
    if (target_bits > max_h + 1e-12)
        throw TargetError("target entropy exceeds log2(n-1), the family maximum");

    // Tune the family parameter against the closed-form Eq.(1) entropy.
    double lo = 1e-12, hi = 1.0, q = 1.0;
    if (family_entropy(bins, hi) < target_bits) {
        q = 1.0;
    } else {
        for (int iter = 0; iter < 60; ++iter) {
            q = 0.5 * (lo + hi);
            (family_entropy(bins, q) < target_bits ? lo : hi) = q;
        }
    }

    const auto quantize = [&](const std::vector<double>& p,
                              const std::vector<double>& samples) {
        std::vector<double> cdf(p.size());
        std::partial_sum(p.begin(), p.end(), cdf.begin());
        DegreeSequence d(static_cast<std::size_t>(n));
        for (std::int32_t i = 0; i < n; ++i) {
            const double u = normal_cdf(samples[static_cast<std::size_t>(i)]);
            const auto it = std::lower_bound(cdf.begin(), cdf.end(), u);
            const auto bin = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()),
                                                   p.size() - 1);
            d[static_cast<std::size_t>(i)] = static_cast<std::int32_t>(bin) + 1;
        }
        return d;
    };
    // Stratified fallback: counts fixed by largest remainder, the samples'
    // ranks decide which node lands in which degree class.
    const auto stratify = [&](const std::vector<double>& p,
                              const std::vector<double>& samples) {
        const auto counts = largest_remainder_counts(n, p);
        std::vector<std::size_t> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return samples[a] < samples[b]; });
        DegreeSequence d(static_cast<std::size_t>(n));
        std::size_t at = 0;
        for (std::size_t bin = 0; bin < counts.size(); ++bin)
            for (std::int64_t c = 0; c < counts[bin]; ++c)
                d[order[at++]] = static_cast<std::int32_t>(bin) + 1;
        return d;
    };

    const auto samples = correlated_pair(CorrelationMatrix::make(1, 0, 0, 1), n, seed).first;
    DegreeSequence degrees = quantize(geometric_family(bins, q), samples);
    if (std::abs(empirical_entropy(degrees) - target_bits) > tol) {
        degrees = stratify(geometric_family(bins, q), samples);
        if (std::abs(empirical_entropy(degrees) - target_bits) > tol) {
            // last resort: bisect on the stratified empirical entropy itself
            double qlo = 1e-12, qhi = 1.0;
            bool found = false;
            for (int iter = 0; iter < 80 && !found; ++iter) {
                const double qm = 0.5 * (qlo + qhi);
                const auto trial = stratify(geometric_family(bins, qm), samples);
                const double h = counts_entropy(largest_remainder_counts(
                    n, geometric_family(bins, qm)));
                if (std::abs(h - target_bits) <= tol) {
                    degrees = trial;
                    found = true;
                } else {
                    (h < target_bits ? qlo : qhi) = qm;
                }
            }
            if (!found)
                throw TargetError("target entropy unreachable within the iteration budget");
        }
    }

    // Repair to graphical exactly as specified: parity first, then keep
    // decrementing a maximal entry until the sequence passes.
    std::int64_t sum = std::accumulate(degrees.begin(), degrees.end(), std::int64_t{0});
    if (sum % 2 != 0) decrement_one_maximal(degrees);
    while (!is_graphical(degrees)) decrement_one_maximal(degrees);
    return degrees;
}

}  // namespace em
