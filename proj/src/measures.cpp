#include "measures.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace em {

Distribution Distribution::from_probabilities(std::vector<double> probs) {
    double sum = 0.0;
    for (const double p : probs) {
        if (p < 0.0) throw std::invalid_argument("negative probability");
        if (!std::isfinite(p)) throw std::invalid_argument("non-finite probability");
        sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("probabilities must sum to 1 within 1e-9");
    return Distribution(std::move(probs));
}

Distribution Distribution::from_counts(std::span<const std::int64_t> counts) {
    std::int64_t total = 0;
    for (const auto c : counts) {
        if (c < 0) throw std::invalid_argument("negative count");
        total += c;
    }
    if (total == 0) throw std::invalid_argument("empty count vector");
    std::vector<double> probs;
    probs.reserve(counts.size());
    for (const auto c : counts) probs.push_back(static_cast<double>(c) / static_cast<double>(total));
    return Distribution(std::move(probs));
}

double shannon_entropy(const Distribution& d) {
    double h = 0.0;
    for (const double p : d.probabilities())
        if (p > 0.0) h -= p * std::log2(p);
    return h;
}

double binary_entropy(double p) {
    if (p <= 0.0 || p >= 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

namespace {

double entropy_of_counts(const std::unordered_map<std::string, std::int64_t>& counts,
                         std::int64_t total) {
    double h = 0.0;
    for (const auto& [_, c] : counts) {
        const double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

}  // namespace

double block_entropy(std::span<const std::uint8_t> symbols, std::int32_t block_len, BlockMode mode) {
    if (symbols.empty()) throw std::invalid_argument("entropy of an empty sequence");
    if (block_len < 1) throw std::invalid_argument("block length must be >= 1");
    if (std::cmp_greater(block_len, symbols.size()))
        throw std::invalid_argument("block length exceeds sequence length");
    std::unordered_map<std::string, std::int64_t> counts;
    std::int64_t total = 0;
    const std::size_t L = static_cast<std::size_t>(block_len);
    if (mode == BlockMode::non_overlapping) {
        for (std::size_t i = 0; i + L <= symbols.size(); i += L) {
            counts[std::string(reinterpret_cast<const char*>(symbols.data() + i), L)]++;
            ++total;
        }
    } else {
        for (std::size_t i = 0; i + L <= symbols.size(); ++i) {
            counts[std::string(reinterpret_cast<const char*>(symbols.data() + i), L)]++;
            ++total;
        }
    }
    return entropy_of_counts(counts, total);
}

double block_entropy(std::string_view symbols, std::int32_t block_len, BlockMode mode) {
    return block_entropy(
        std::span<const std::uint8_t>(reinterpret_cast<const std::uint8_t*>(symbols.data()),
                                      symbols.size()),
        block_len, mode);
}

RateProfile entropy_rate_profile(std::span<const std::uint8_t> symbols, std::int32_t max_block_len,
                                 BlockMode mode) {
    if (max_block_len < 1) throw std::invalid_argument("max block length must be >= 1");
    RateProfile profile;
    double best = std::numeric_limits<double>::infinity();
    for (std::int32_t len = 1; len <= max_block_len; ++len) {
        const double rate = block_entropy(symbols, len, mode) / static_cast<double>(len);
        profile.per_symbol.emplace_back(len, rate);
        if (rate < best) {
            best = rate;
            profile.argmin = len;
        }
    }
    return profile;
}

double adjacency_entropy(const Graph& g) {
    if (g.node_count() < 2) throw std::invalid_argument("adjacency entropy needs node_count >= 2");
    return binary_entropy(edge_density(g).value());
}

double degree_sequence_entropy(const Graph& g) {
    std::map<std::int32_t, std::int64_t> counts;
    for (std::int32_t v = 1; v <= g.node_count(); ++v) counts[g.degree(v)]++;
    double h = 0.0;
    const double n = static_cast<double>(g.node_count());
    for (const auto& [_, c] : counts) {
        const double p = static_cast<double>(c) / n;
        h -= p * std::log2(p);
    }
    return h;
}

LzParse lz78_complexity(std::string_view bits) {
    if (bits.empty()) throw std::invalid_argument("LZ78 parse of an empty sequence");
    // binary trie; node 0 is the root
    std::vector<std::array<std::int32_t, 2>> child{{-1, -1}};
    std::int32_t node = 0;
    std::int64_t phrases = 0;
    for (const char c : bits) {
        if (c != '0' && c != '1') throw std::invalid_argument("LZ78 input must be a '0'/'1' string");
        const int b = c - '0';
        if (child[node][b] >= 0) {
            node = child[node][b];
        } else {
            child[node][b] = static_cast<std::int32_t>(child.size());
            child.push_back({-1, -1});
            ++phrases;
            node = 0;
        }
    }
    if (node != 0) ++phrases;  // trailing phrase already present in the dictionary
    LzParse out;
    out.phrase_count = phrases;
    std::int64_t ceil_log = 0;
    while ((std::int64_t{1} << ceil_log) < phrases) ++ceil_log;
    out.compressed_bits = phrases * (ceil_log + 1);
    return out;
}

double clustering_coefficient(const Graph& g) {
    const std::int32_t n = g.node_count();
    double sum = 0.0;
    for (std::int32_t v = 1; v <= n; ++v) {
        const auto nbrs = g.neighbors(v);
        const std::size_t d = nbrs.size();
        if (d < 2) continue;
        std::int64_t links = 0;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++links;
        sum += 2.0 * static_cast<double>(links) / (static_cast<double>(d) * (static_cast<double>(d) - 1.0));
    }
    return sum / static_cast<double>(n);
}

double global_transitivity(const Graph& g) {
    std::int64_t closed = 0, triples = 0;
    for (std::int32_t v = 1; v <= g.node_count(); ++v) {
        const auto nbrs = g.neighbors(v);
        const std::int64_t d = static_cast<std::int64_t>(nbrs.size());
        triples += d * (d - 1) / 2;
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++closed;
    }
    return triples == 0 ? 0.0 : static_cast<double>(closed) / static_cast<double>(triples);
}

std::vector<std::pair<std::int32_t, std::int64_t>> degree_histogram(const Graph& g) {
    std::map<std::int32_t, std::int64_t> counts;
    for (std::int32_t v = 1; v <= g.node_count(); ++v) counts[g.degree(v)]++;
    return {counts.begin(), counts.end()};
}

GraphFeature GraphFeature::parse(std::string_view name, std::int32_t block_len) {
    GraphFeature f;
    if (name == "adjacency") {
        f.kind = Kind::adjacency;
    } else if (name == "degree-sequence") {
        f.kind = Kind::degree_sequence;
    } else if (name == "block") {
        if (block_len < 1) throw std::invalid_argument("block feature needs a block length >= 1");
        f.kind = Kind::block;
        f.block_len = block_len;
    } else if (name == "compression" || name == "compress") {
        f.kind = Kind::compression;
    } else if (name == "clustering") {
        f.kind = Kind::clustering;
    } else {
        throw std::invalid_argument("unknown graph feature: " + std::string(name));
    }
    return f;
}

std::string GraphFeature::tag() const {
    switch (kind) {
        case Kind::adjacency: return "adjacency";
        case Kind::degree_sequence: return "degree-sequence";
        case Kind::block: return "block(" + std::to_string(block_len) + ")";
        case Kind::compression: return "compression";
        case Kind::clustering: return "clustering";
    }
    return "?";
}

EntropyReport graph_entropy(const Graph& g, GraphFeature feature) {
    EntropyReport report;
    report.feature = feature.tag();
    report.parameters.emplace_back("nodes", std::to_string(g.node_count()));
    report.parameters.emplace_back("edges", std::to_string(g.edge_count()));
    switch (feature.kind) {
        case GraphFeature::Kind::adjacency:
            report.value = adjacency_entropy(g);
            break;
        case GraphFeature::Kind::degree_sequence:
            report.value = degree_sequence_entropy(g);
            break;
        case GraphFeature::Kind::block: {
            report.value = block_entropy(upper_triangle_bits(g), feature.block_len);
            report.parameters.emplace_back("L", std::to_string(feature.block_len));
            break;
        }
        case GraphFeature::Kind::compression: {
            const std::string bits = upper_triangle_bits(g);
            const auto parse = lz78_complexity(bits);
            report.value = static_cast<double>(parse.compressed_bits) /
                           static_cast<double>(bits.size());
            report.parameters.emplace_back("phrases", std::to_string(parse.phrase_count));
            report.parameters.emplace_back("raw_bits", std::to_string(bits.size()));
            break;
        }
        case GraphFeature::Kind::clustering:
            report.value = clustering_coefficient(g);
            break;
    }
    return report;
}

}  // namespace em
