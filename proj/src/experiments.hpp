#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace em {

struct ExperimentRow {
    std::string series;
    double x = 0.0;
    double y = 0.0;
};

// Textual record of a documented discrepancy or observation; the repo's
// mechanism for reporting claims that simulation cannot assert.
struct Finding {
    std::string id;
    std::string message;
};

struct ExperimentReport {
    std::string kind;
    std::vector<std::pair<std::string, std::string>> params;  // echoed verbatim, in order
    std::uint64_t seed = 0;
    std::string param_hash;
    std::vector<std::string> provenance;  // digit sources feeding the run
    std::vector<ExperimentRow> rows;
    std::vector<std::pair<std::string, double>> summary;
    std::vector<Finding> findings;
};

// Degree histograms of digit graphs built from pi, Champernowne and a prng
// control. `digit_file`, when non-empty, replaces the computed pi stream
// (large digit counts need externally supplied digits).
ExperimentReport run_pi_histogram(std::int64_t digit_count, std::int32_t base, std::int32_t n,
                                  const std::string& digit_file, std::uint64_t seed);

// A regular ring and an exact-edge-count E-R graph with identical (n, |E|);
// adjacency entropies must match exactly while the degree-sequence entropies
// split.
ExperimentReport run_density_entropy_equality(std::int32_t n, std::int32_t k, std::uint64_t seed);

// Degree-sequence entropy of B-A replicates against density-matched E-R
// replicates, with box-plot quartiles per group.
ExperimentReport run_ba_vs_er(std::int32_t n, const std::vector<std::int32_t>& m_values,
                              std::int32_t replicates, std::uint64_t seed);

// Per-step growth curves of the ZK graph; asserts the edge counts against
// the closed form and reports clustering convergence.
ExperimentReport run_zk_growth(std::int32_t t_max);

// Divergence of the two lossless descriptions: adjacency entropy vs
// degree-sequence entropy of the same graph per step.
ExperimentReport run_zk_divergence(std::int32_t t_max);

// LZ78 size of ZK adjacency bits against equal-length constant and
// seeded-random strings.
ExperimentReport run_compression_vs_entropy(std::int32_t t_max, std::uint64_t seed);

// Digit graph from an externally supplied bit file (the bits of interest
// are not computable in-repo). Without a file this is an input error unless
// the caller opts into a labelled prng stand-in.
ExperimentReport run_omega_graph(const std::string& path, std::int32_t n,
                                 bool allow_prng_standin, std::uint64_t seed);

std::string report_csv(const ExperimentReport& report);
std::string report_json(const ExperimentReport& report);
std::string report_svg(const ExperimentReport& report);

// Writes <kind>.csv and <kind>.json (and .svg when requested) under out_dir,
// creating it if needed.
void write_report(const ExperimentReport& report, const std::filesystem::path& out_dir, bool svg);

// Dispatch by kind with JSON-encoded parameters; used by the C API and CLI.
// Writes artifacts when out_dir is non-empty.
ExperimentReport run_experiment_json(const std::string& kind, const std::string& params_json,
                                     std::uint64_t seed, const std::string& out_dir, bool svg);

}  // namespace em
