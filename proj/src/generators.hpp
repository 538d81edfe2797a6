#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "digits.hpp"
#include "graph.hpp"

namespace em {

struct ZkStep {
    std::int32_t max_degree_before = 0;  // M
    std::int32_t candidate = 0;          // node converted to core this step
    std::int32_t edges_added = 0;        // M + 1 - candidate's prior degree
};

struct ZkTrace {
    Graph graph;
    std::int32_t steps = 0;
    std::vector<ZkStep> records;
};

// Deterministic ZK growth: start from the edge 1-2; each step takes the
// current maximum degree M, lets c = M+1, and connects c to the consecutive
// labels c+1 .. c+(M+1-d) where d is c's prior degree, creating nodes as
// needed. Afterwards node c has degree c. This is the ground truth for all
// quantitative ZK checks.
ZkTrace zk_graph(std::int32_t steps);

// Closed form for the ZK edge count: sum_{k=1}^{t+2} floor(k/r) with r the
// golden ratio, evaluated in exact integer arithmetic.
std::int64_t zk_edge_count_formula(std::int32_t steps);

// Same growth semantics, but the conversion candidate is drawn uniformly
// among supportive nodes of maximal degree and attachments go to eligible
// existing supportive nodes in random order before fresh nodes are created.
Graph zk_graph_randomized(std::int32_t steps, std::uint64_t seed);

enum class DigitGraphMode {
    upper_triangle,  // consume exactly n(n-1)/2 bits
    full_matrix,     // consume n*n bits, read only upper-triangle positions
};

// Fill the strict upper triangle of an n x n adjacency matrix row-major with
// consecutive bits of a base-2 stream.
Graph digit_graph(const DigitStream& bits, std::int32_t n,
                  DigitGraphMode mode = DigitGraphMode::upper_triangle);

// G(n, p): every unordered pair independently with probability p.
Graph er_graph(std::int32_t n, double p, std::uint64_t seed);

// Uniform among graphs with exactly the given edge count; used where an
// experiment needs a literally identical edge density.
Graph er_graph_exact(std::int32_t n, std::int64_t edges, std::uint64_t seed);

// Preferential attachment from a complete seed on m+1 nodes; each new node
// attaches m edges to distinct nodes chosen proportionally to degree.
Graph ba_graph(std::int32_t n, std::int32_t m, std::uint64_t seed);

// Circulant graph: every node adjacent to the k/2 nearest neighbours on each
// side. Requires k even and n > k.
Graph regular_ring_graph(std::int32_t n, std::int32_t k);

// 2x2 matrix with rows summing to 1 within 1e-12.
struct CorrelationMatrix {
    double row0[2];
    double row1[2];
    static CorrelationMatrix make(double a, double b, double c, double d);
};

// Componentwise (M.x1, M.x2) over standard-normal sample pairs; the
// empirical correlation of the outputs approximates the inner product of
// M's rows (normalized).
std::pair<std::vector<double>, std::vector<double>> correlated_pair(const CorrelationMatrix& m,
                                                                    std::int64_t count,
                                                                    std::uint64_t seed);

double pearson_correlation(std::span<const double> x, std::span<const double> y);

// Degree sequence whose empirical entropy is within tol of the target:
// a truncated-geometric family over degree values 1..n-1 tuned by bisection,
// sampled through correlated_pair quantiles, then repaired to graphical
// (decrement a maximal entry while the sum is odd or the sequence fails the
// graphicality test). Throws TargetError when the budget runs out.
DegreeSequence targeted_degree_sequence(std::int32_t n, double target_bits, double tol,
                                        std::uint64_t seed);

}  // namespace em
