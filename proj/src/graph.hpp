#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace em {

using Edge = std::pair<std::int32_t, std::int32_t>;  // stored normalized, u < v
using DegreeSequence = std::vector<std::int32_t>;    // indexed by node label - 1

// Exact |E| / C(n,2), kept as a reduced fraction so "same edge density" is a
// literal integer comparison.
struct Ratio {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Ratio&, const Ratio&) = default;
};

// Symmetric 0/1 matrix with zero diagonal.
class BitMatrix {
public:
    explicit BitMatrix(std::int32_t n) : n_(n), cells_(static_cast<std::size_t>(n) * n, 0) {}
    std::int32_t dimension() const { return n_; }
    std::uint8_t at(std::int32_t i, std::int32_t j) const { return cells_[idx(i, j)]; }
    void set(std::int32_t i, std::int32_t j, std::uint8_t v) { cells_[idx(i, j)] = v; }

private:
    std::size_t idx(std::int32_t i, std::int32_t j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }
    std::int32_t n_;
    std::vector<std::uint8_t> cells_;
};

// Simple undirected labelled graph, labels 1..node_count. Immutable once
// built; every operation below is a pure function, so concurrent reads are
// safe. Edges are kept sorted for deterministic iteration.
class Graph {
public:
    // Validates labels, rejects self-loops and duplicates (after u<v
    // normalization). Throws std::invalid_argument.
    static Graph build(std::int32_t node_count, std::span<const Edge> edges);
    static Graph build(std::int32_t node_count, std::initializer_list<Edge> edges);

    // Inverse of upper_triangle_bits: bits fill the strict upper triangle
    // row-major. bits.size() must be n(n-1)/2; characters '0'/'1'.
    static Graph from_upper_triangle(std::int32_t node_count, std::string_view bits);

    // Edge-list text format: first line "# nodes=N", one "u v" line per
    // edge, 1-indexed. Extra comment lines and blank lines are tolerated.
    static Graph parse_edge_list(std::string_view text);
    static Graph read_file(const std::filesystem::path& path);

    std::int32_t node_count() const { return n_; }
    std::int64_t edge_count() const { return static_cast<std::int64_t>(edges_.size()); }
    std::span<const Edge> edges() const { return edges_; }
    std::int32_t degree(std::int32_t label) const { return degrees_[label - 1]; }
    bool has_edge(std::int32_t u, std::int32_t v) const;
    std::span<const std::int32_t> neighbors(std::int32_t label) const { return adjacency_[label - 1]; }

    std::string to_edge_list_text() const;
    void write_file(const std::filesystem::path& path) const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    Graph(std::int32_t n, std::vector<Edge> edges);

    std::int32_t n_;
    std::vector<Edge> edges_;                         // sorted, normalized
    std::vector<std::int32_t> degrees_;               // by label - 1
    std::vector<std::vector<std::int32_t>> adjacency_;  // sorted neighbor lists
};

BitMatrix adjacency_matrix(const Graph& g);
DegreeSequence degree_sequence(const Graph& g);

// Row-major strict upper triangle as an ASCII '0'/'1' string; the adjacency
// description all sequence measures operate on.
std::string upper_triangle_bits(const Graph& g);

// Exact rational |E| / (n(n-1)/2). Requires node_count >= 2.
Ratio edge_density(const Graph& g);

// Erdos-Gallai test. Throws std::invalid_argument on negative entries.
bool is_graphical(std::span<const std::int32_t> seq);

// Havel-Hakimi realization; deterministic (largest residual first, smallest
// label on ties). Throws std::invalid_argument if the sequence is not
// graphical.
Graph realize_graph(std::span<const std::int32_t> seq);

// Exact backtracking with degree/refinement pruning. Refuses graphs beyond
// 30 nodes (LimitError) rather than stalling.
bool are_isomorphic(const Graph& a, const Graph& b);

// Lexicographically minimal row-major upper-triangle bit string over all
// node permutations. Exact; equal iff isomorphic. Refuses graphs beyond 20
// nodes or beyond its internal search budget (LimitError).
std::string canonical_form(const Graph& g);

}  // namespace em
