#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace em {

// Finite probability mass function. Validated on construction: probabilities
// non-negative and summing to 1 within 1e-9.
class Distribution {
public:
    static Distribution from_probabilities(std::vector<double> probs);
    static Distribution from_counts(std::span<const std::int64_t> counts);

    std::span<const double> probabilities() const { return probs_; }

private:
    explicit Distribution(std::vector<double> probs) : probs_(std::move(probs)) {}
    std::vector<double> probs_;
};

// -sum p log2 p, with 0 log 0 = 0.
double shannon_entropy(const Distribution& d);

// Binary entropy of a single frequency.
double binary_entropy(double p);

enum class BlockMode { non_overlapping, sliding };

// Entropy of the empirical distribution over length-L symbol blocks. The
// default splits the sequence into floor(len/L) non-overlapping blocks and
// drops the trailing partial block; sliding mode exists for exploration and
// is excluded from the acceptance checks.
double block_entropy(std::span<const std::uint8_t> symbols, std::int32_t block_len,
                     BlockMode mode = BlockMode::non_overlapping);
double block_entropy(std::string_view symbols, std::int32_t block_len,
                     BlockMode mode = BlockMode::non_overlapping);

struct RateProfile {
    std::vector<std::pair<std::int32_t, double>> per_symbol;  // (L, H_L / L)
    std::int32_t argmin = 1;
};
RateProfile entropy_rate_profile(std::span<const std::uint8_t> symbols, std::int32_t max_block_len,
                                 BlockMode mode = BlockMode::non_overlapping);

// Binary entropy of the edge frequency over the n(n-1)/2 upper off-diagonal
// cells; a pure function of (node count, edge count).
double adjacency_entropy(const Graph& g);

// Entropy of the empirical frequency distribution of the degree multiset.
double degree_sequence_entropy(const Graph& g);

struct LzParse {
    std::int64_t phrase_count = 0;
    std::int64_t compressed_bits = 0;  // phrase_count * (ceil(log2 phrase_count) + 1)
};

// LZ78 parse of a '0'/'1' string; the compression proxy for algorithmic
// complexity used throughout the experiments.
LzParse lz78_complexity(std::string_view bits);

// Mean local clustering; nodes of degree < 2 contribute 0.
double clustering_coefficient(const Graph& g);

// Global transitivity, 3*triangles / connected triples; reported alongside
// the mean-local coefficient so convergence claims can be located.
double global_transitivity(const Graph& g);

// (degree, count) pairs sorted by degree; counts sum to node_count.
std::vector<std::pair<std::int32_t, std::int64_t>> degree_histogram(const Graph& g);

// Feature selector for graph_entropy. There is deliberately no feature-free
// entry point: every value is tagged with the description it was computed
// from.
struct GraphFeature {
    enum class Kind { adjacency, degree_sequence, block, compression, clustering };
    Kind kind = Kind::adjacency;
    std::int32_t block_len = 0;  // required for Kind::block

    static GraphFeature parse(std::string_view name, std::int32_t block_len = 0);
    std::string tag() const;
};

struct EntropyReport {
    std::string feature;  // tag, e.g. "adjacency", "block(2)"
    double value = 0.0;   // bits, or a ratio for compression/clustering
    std::vector<std::pair<std::string, std::string>> parameters;
};

EntropyReport graph_entropy(const Graph& g, GraphFeature feature);

}  // namespace em
