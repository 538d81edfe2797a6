#include "entropy_mirage/entropy_mirage.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "digits.hpp"
#include "errors.hpp"
#include "experiments.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "measures.hpp"

struct em_graph {
    em::Graph impl;
};

struct em_digit_stream {
    em::DigitStream impl;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

// Runs the body, translating C++ exceptions into status codes.
template <typename Fn>
em_status guarded(Fn&& fn) {
    try {
        fn();
        return EM_OK;
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return EM_ERR_INVALID_ARGUMENT;
    } catch (const em::IoError& e) {
        g_last_error = e.what();
        return EM_ERR_IO;
    } catch (const em::LimitError& e) {
        g_last_error = e.what();
        return EM_ERR_LIMIT;
    } catch (const em::TargetError& e) {
        g_last_error = e.what();
        return EM_ERR_TARGET;
    } catch (const em::CheckFailure& e) {
        g_last_error = e.what();
        return EM_ERR_CHECK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return EM_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return EM_ERR_INTERNAL;
    }
}

em_status require_args(bool ok) {
    if (!ok) {
        g_last_error = "null argument";
        return EM_ERR_INVALID_ARGUMENT;
    }
    return EM_OK;
}

}  // namespace

extern "C" {

const char* em_version(void) { return "1.0.0"; }

const char* em_last_error(void) { return g_last_error.c_str(); }

void em_string_free(char* s) { delete[] s; }

/* ---- graphs -------------------------------------------------------- */

em_status em_graph_build(int32_t node_count, const int32_t* edges, size_t edge_count,
                         em_graph** out) {
    if (auto st = require_args(out && (edges || edge_count == 0))) return st;
    return guarded([&] {
        std::vector<em::Edge> list;
        list.reserve(edge_count);
        for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
        *out = new em_graph{em::Graph::build(node_count, list)};
    });
}

void em_graph_free(em_graph* g) { delete g; }

int32_t em_graph_node_count(const em_graph* g) { return g ? g->impl.node_count() : 0; }

int64_t em_graph_edge_count(const em_graph* g) { return g ? g->impl.edge_count() : 0; }

em_status em_graph_degree_sequence(const em_graph* g, int32_t* out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] {
        const auto degrees = em::degree_sequence(g->impl);
        std::memcpy(out, degrees.data(), degrees.size() * sizeof(int32_t));
    });
}

em_status em_graph_edge_density(const em_graph* g, double* out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] { *out = em::edge_density(g->impl).value(); });
}

em_status em_graph_adjacency_bits(const em_graph* g, char** out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] { *out = dup_string(em::upper_triangle_bits(g->impl)); });
}

em_status em_graph_canonical_form(const em_graph* g, char** out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] { *out = dup_string(em::canonical_form(g->impl)); });
}

em_status em_graphs_isomorphic(const em_graph* a, const em_graph* b, int* out) {
    if (auto st = require_args(a && b && out)) return st;
    return guarded([&] { *out = em::are_isomorphic(a->impl, b->impl) ? 1 : 0; });
}

em_status em_is_graphical(const int32_t* seq, size_t len, int* out) {
    if (auto st = require_args(out && (seq || len == 0))) return st;
    return guarded([&] { *out = em::is_graphical({seq, len}) ? 1 : 0; });
}

em_status em_realize_graph(const int32_t* seq, size_t len, em_graph** out) {
    if (auto st = require_args(out && (seq || len == 0))) return st;
    return guarded([&] { *out = new em_graph{em::realize_graph({seq, len})}; });
}

em_status em_graph_to_text(const em_graph* g, char** out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] { *out = dup_string(g->impl.to_edge_list_text()); });
}

em_status em_graph_from_text(const char* text, em_graph** out) {
    if (auto st = require_args(text && out)) return st;
    return guarded([&] { *out = new em_graph{em::Graph::parse_edge_list(text)}; });
}

em_status em_graph_write_file(const em_graph* g, const char* path) {
    if (auto st = require_args(g && path)) return st;
    return guarded([&] { g->impl.write_file(path); });
}

em_status em_graph_read_file(const char* path, em_graph** out) {
    if (auto st = require_args(path && out)) return st;
    return guarded([&] { *out = new em_graph{em::Graph::read_file(path)}; });
}

/* ---- digit streams -------------------------------------------------- */

em_status em_digits_champernowne(int32_t base, int64_t count, em_digit_stream** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_digit_stream{em::champernowne_digits(base, count)}; });
}

em_status em_digits_pi(int32_t base, int64_t count, em_digit_stream** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_digit_stream{em::pi_digits(base, count)}; });
}

em_status em_digits_prng(int32_t base, int64_t count, uint64_t seed, em_digit_stream** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_digit_stream{em::prng_digits(base, count, seed)}; });
}

em_status em_digits_load_file(const char* path, em_digit_stream** out) {
    if (auto st = require_args(path && out)) return st;
    return guarded([&] { *out = new em_digit_stream{em::load_digit_file(path)}; });
}

em_status em_digits_binarize(const em_digit_stream* s, em_digit_stream** out) {
    if (auto st = require_args(s && out)) return st;
    return guarded([&] { *out = new em_digit_stream{em::binarize(s->impl)}; });
}

void em_digit_stream_free(em_digit_stream* s) { delete s; }

int32_t em_digit_stream_base(const em_digit_stream* s) { return s ? s->impl.base : 0; }

int64_t em_digit_stream_count(const em_digit_stream* s) { return s ? s->impl.count() : 0; }

em_status em_digit_stream_copy(const em_digit_stream* s, uint8_t* out, size_t capacity) {
    if (auto st = require_args(s && out)) return st;
    if (capacity < s->impl.digits.size()) {
        g_last_error = "buffer too small";
        return EM_ERR_INVALID_ARGUMENT;
    }
    std::memcpy(out, s->impl.digits.data(), s->impl.digits.size());
    return EM_OK;
}

em_status em_digit_stream_provenance(const em_digit_stream* s, char** out) {
    if (auto st = require_args(s && out)) return st;
    return guarded([&] { *out = dup_string(s->impl.provenance); });
}

em_status em_digit_stream_to_text(const em_digit_stream* s, char** out) {
    if (auto st = require_args(s && out)) return st;
    return guarded([&] { *out = dup_string(em::digit_file_text(s->impl)); });
}

em_status em_digit_stream_write_file(const em_digit_stream* s, const char* path) {
    if (auto st = require_args(s && path)) return st;
    return guarded([&] { em::write_digit_file(s->impl, path); });
}

/* ---- generators ------------------------------------------------------ */

em_status em_zk_graph(int32_t steps, em_graph** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_graph{em::zk_graph(steps).graph}; });
}

em_status em_zk_edge_count_formula(int32_t steps, int64_t* out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = em::zk_edge_count_formula(steps); });
}

em_status em_zk_graph_randomized(int32_t steps, uint64_t seed, em_graph** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_graph{em::zk_graph_randomized(steps, seed)}; });
}

em_status em_digit_graph(const em_digit_stream* bits, int32_t n, int mode, em_graph** out) {
    if (auto st = require_args(bits && out)) return st;
    return guarded([&] {
        const auto m = mode == 0 ? em::DigitGraphMode::upper_triangle
                                 : em::DigitGraphMode::full_matrix;
        *out = new em_graph{em::digit_graph(bits->impl, n, m)};
    });
}

em_status em_er_graph(int32_t n, double p, uint64_t seed, em_graph** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_graph{em::er_graph(n, p, seed)}; });
}

em_status em_er_graph_exact(int32_t n, int64_t edges, uint64_t seed, em_graph** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_graph{em::er_graph_exact(n, edges, seed)}; });
}

em_status em_ba_graph(int32_t n, int32_t m, uint64_t seed, em_graph** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_graph{em::ba_graph(n, m, seed)}; });
}

em_status em_regular_ring_graph(int32_t n, int32_t k, em_graph** out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] { *out = new em_graph{em::regular_ring_graph(n, k)}; });
}

em_status em_correlated_pair(const double matrix[4], int64_t count, uint64_t seed, double* y1,
                             double* y2) {
    if (auto st = require_args(matrix && y1 && y2)) return st;
    return guarded([&] {
        const auto m = em::CorrelationMatrix::make(matrix[0], matrix[1], matrix[2], matrix[3]);
        const auto [a, b] = em::correlated_pair(m, count, seed);
        std::memcpy(y1, a.data(), a.size() * sizeof(double));
        std::memcpy(y2, b.data(), b.size() * sizeof(double));
    });
}

em_status em_targeted_degree_sequence(int32_t n, double target_bits, double tol, uint64_t seed,
                                      int32_t* out) {
    if (auto st = require_args(out)) return st;
    return guarded([&] {
        const auto degrees = em::targeted_degree_sequence(n, target_bits, tol, seed);
        std::memcpy(out, degrees.data(), degrees.size() * sizeof(int32_t));
    });
}

/* ---- measures -------------------------------------------------------- */

em_status em_shannon_entropy(const double* probabilities, size_t len, double* out) {
    if (auto st = require_args(probabilities && out)) return st;
    return guarded([&] {
        *out = em::shannon_entropy(
            em::Distribution::from_probabilities({probabilities, probabilities + len}));
    });
}

em_status em_block_entropy(const uint8_t* symbols, size_t len, int32_t block_len, int mode,
                           double* out) {
    if (auto st = require_args(symbols && out)) return st;
    return guarded([&] {
        *out = em::block_entropy({symbols, len}, block_len,
                                 mode == 0 ? em::BlockMode::non_overlapping
                                           : em::BlockMode::sliding);
    });
}

em_status em_entropy_rate_profile(const uint8_t* symbols, size_t len, int32_t max_block_len,
                                  int mode, double* out_rates, int32_t* out_argmin) {
    if (auto st = require_args(symbols && out_rates && out_argmin)) return st;
    return guarded([&] {
        const auto profile = em::entropy_rate_profile(
            {symbols, len}, max_block_len,
            mode == 0 ? em::BlockMode::non_overlapping : em::BlockMode::sliding);
        for (const auto& [block_len, rate] : profile.per_symbol)
            out_rates[block_len - 1] = rate;
        *out_argmin = profile.argmin;
    });
}

em_status em_adjacency_entropy(const em_graph* g, double* out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] { *out = em::adjacency_entropy(g->impl); });
}

em_status em_degree_sequence_entropy(const em_graph* g, double* out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] { *out = em::degree_sequence_entropy(g->impl); });
}

em_status em_lz78(const char* bits, int64_t* out_phrases, int64_t* out_compressed_bits) {
    if (auto st = require_args(bits && out_phrases && out_compressed_bits)) return st;
    return guarded([&] {
        const auto parse = em::lz78_complexity(bits);
        *out_phrases = parse.phrase_count;
        *out_compressed_bits = parse.compressed_bits;
    });
}

em_status em_clustering_coefficient(const em_graph* g, double* out) {
    if (auto st = require_args(g && out)) return st;
    return guarded([&] { *out = em::clustering_coefficient(g->impl); });
}

em_status em_degree_histogram(const em_graph* g, int64_t* out_pairs, size_t capacity,
                              size_t* out_len) {
    if (auto st = require_args(g && out_len)) return st;
    return guarded([&] {
        const auto hist = em::degree_histogram(g->impl);
        *out_len = hist.size();
        if (!out_pairs) return;
        if (capacity < hist.size()) throw std::invalid_argument("buffer too small");
        for (size_t i = 0; i < hist.size(); ++i) {
            out_pairs[2 * i] = hist[i].first;
            out_pairs[2 * i + 1] = hist[i].second;
        }
    });
}

em_status em_graph_entropy_value(const em_graph* g, const char* feature, int32_t block_len,
                                 double* out) {
    if (auto st = require_args(g && feature && out)) return st;
    return guarded([&] {
        *out = em::graph_entropy(g->impl, em::GraphFeature::parse(feature, block_len)).value;
    });
}

em_status em_graph_entropy_json(const em_graph* g, const char* feature, int32_t block_len,
                                const char* provenance, char** out_json) {
    if (auto st = require_args(g && feature && out_json)) return st;
    return guarded([&] {
        const auto report = em::graph_entropy(g->impl, em::GraphFeature::parse(feature, block_len));
        nlohmann::ordered_json j;
        j["feature"] = report.feature;
        j["value"] = report.value;
        nlohmann::ordered_json params = nlohmann::ordered_json::object();
        for (const auto& [k, v] : report.parameters) params[k] = v;
        j["parameters"] = params;
        j["provenance"] = provenance ? provenance : "-";
        *out_json = dup_string(j.dump(2) + "\n");
    });
}

/* ---- experiments ------------------------------------------------------ */

em_status em_experiment_run(const char* kind, const char* params_json, uint64_t seed,
                            const char* out_dir, int svg, char** out_report_json) {
    if (auto st = require_args(kind && out_report_json)) return st;
    return guarded([&] {
        const auto report = em::run_experiment_json(kind, params_json ? params_json : "",
                                                    seed, out_dir ? out_dir : "", svg != 0);
        *out_report_json = dup_string(em::report_json(report));
    });
}

} /* extern "C" */
