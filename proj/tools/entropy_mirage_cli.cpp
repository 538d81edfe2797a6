// entropy-mirage: graphs whose different lossless descriptions carry
// different entropy. Generators, measures, digit streams and the seeded
// experiment runner, all through the shared-library C API.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entropy_mirage/entropy_mirage.h"

namespace {

int exit_code_for(em_status status) {
    switch (status) {
        case EM_OK:
            return 0;
        case EM_ERR_CHECK:
            return 2;  // an experiment's internal assertion failed
        case EM_ERR_INVALID_ARGUMENT:
        case EM_ERR_IO:
        case EM_ERR_LIMIT:
        case EM_ERR_TARGET:
            return 3;  // input error
        default:
            return 1;
    }
}

int fail(em_status status) {
    std::cerr << "error: " << em_last_error() << "\n";
    return exit_code_for(status);
}

struct StringOut {
    char* value = nullptr;
    ~StringOut() { em_string_free(value); }
};

struct GraphOut {
    em_graph* value = nullptr;
    ~GraphOut() { em_graph_free(value); }
};

struct StreamOut {
    em_digit_stream* value = nullptr;
    ~StreamOut() { em_digit_stream_free(value); }
};

int emit_graph(em_graph* g, const std::string& out_path, const std::string& comment) {
    if (!out_path.empty()) {
        if (auto st = em_graph_write_file(g, out_path.c_str())) return fail(st);
        return 0;
    }
    StringOut text;
    if (auto st = em_graph_to_text(g, &text.value)) return fail(st);
    std::string body(text.value);
    if (!comment.empty()) {
        const auto first_newline = body.find('\n');
        body.insert(first_newline + 1, comment + "\n");
    }
    std::cout << body;
    return 0;
}

// Digit stream for --source pi|champernowne|prng|file:PATH, binarized so it
// can feed a digit graph.
em_status bit_source(const std::string& source, std::int32_t base, std::int64_t count,
                     std::uint64_t seed, em_digit_stream** out) {
    StreamOut raw;
    em_status st = EM_OK;
    if (source == "pi") {
        st = em_digits_pi(base, count, &raw.value);
    } else if (source == "champernowne") {
        st = em_digits_champernowne(base, count, &raw.value);
    } else if (source == "prng") {
        st = em_digits_prng(2, count, seed, &raw.value);
    } else if (source.rfind("file:", 0) == 0) {
        st = em_digits_load_file(source.substr(5).c_str(), &raw.value);
    } else {
        std::cerr << "error: unknown source '" << source << "'\n";
        return EM_ERR_INVALID_ARGUMENT;
    }
    if (st) return st;
    return em_digits_binarize(raw.value, out);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropy-deceiving graph construction and measurement"};
    app.require_subcommand(1);

    // generate ---------------------------------------------------------
    auto* generate = app.add_subcommand("generate", "emit a graph in edge-list format");
    generate->require_subcommand(1);
    std::string out_path;
    std::uint64_t seed = 0;

    auto* gen_zk = generate->add_subcommand("zk", "recursive ZK graph");
    std::int32_t zk_steps = 0;
    bool zk_randomized = false;
    gen_zk->add_option("--steps", zk_steps, "growth steps")->required();
    gen_zk->add_flag("--randomized", zk_randomized, "random tie-breaks among supportive nodes");
    gen_zk->add_option("--seed", seed, "seed for --randomized");
    gen_zk->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_digit = generate->add_subcommand("digit-graph", "graph from a digit stream");
    std::string dg_source;
    std::int32_t dg_base = 10, dg_n = 0;
    std::int64_t dg_digits = 0;
    bool dg_strict = false;
    gen_digit->add_option("--source", dg_source, "pi|champernowne|prng|file:PATH")->required();
    gen_digit->add_option("--base", dg_base, "digit base before binarization");
    gen_digit->add_option("--n", dg_n, "node count")->required();
    gen_digit->add_option("--digits", dg_digits, "digits to draw (default: exactly enough)");
    gen_digit->add_flag("--strict-n2", dg_strict, "consume n*n digits as a full matrix");
    gen_digit->add_option("--seed", seed, "seed for --source prng");
    gen_digit->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_er = generate->add_subcommand("er", "Erdos-Renyi G(n,p)");
    std::int32_t er_n = 0;
    double er_p = 0.5;
    std::int64_t er_exact = -1;
    gen_er->add_option("--n", er_n, "node count")->required();
    gen_er->add_option("--p", er_p, "edge probability");
    gen_er->add_option("--exact-edges", er_exact, "sample uniformly with this exact edge count");
    gen_er->add_option("--seed", seed, "seed")->required();
    gen_er->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_ba = generate->add_subcommand("ba", "Barabasi-Albert preferential attachment");
    std::int32_t ba_n = 0, ba_m = 1;
    gen_ba->add_option("--n", ba_n, "node count")->required();
    gen_ba->add_option("--m", ba_m, "edges per new node")->required();
    gen_ba->add_option("--seed", seed, "seed")->required();
    gen_ba->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_ring = generate->add_subcommand("ring", "regular ring (circulant) graph");
    std::int32_t ring_n = 0, ring_k = 2;
    gen_ring->add_option("--n", ring_n, "node count")->required();
    gen_ring->add_option("--k", ring_k, "degree (even)")->required();
    gen_ring->add_option("--out", out_path, "output file (default stdout)");

    auto* gen_targeted = generate->add_subcommand("targeted", "graph realizing an entropy-targeted degree sequence");
    std::int32_t tg_n = 0;
    double tg_entropy = 0.0, tg_tol = 0.1;
    gen_targeted->add_option("--n", tg_n, "node count")->required();
    gen_targeted->add_option("--entropy", tg_entropy, "target degree-sequence entropy, bits")->required();
    gen_targeted->add_option("--tol", tg_tol, "tolerance, bits")->required();
    gen_targeted->add_option("--seed", seed, "seed")->required();
    gen_targeted->add_option("--out", out_path, "output file (default stdout)");

    // measure ------------------------------------------------------------
    auto* measure = app.add_subcommand("measure", "entropy/complexity of a graph feature");
    std::string ms_feature, ms_input;
    std::int32_t ms_block = 0;
    measure->add_option("--feature", ms_feature,
                        "adjacency|degree-sequence|block|compress|clustering")->required();
    measure->add_option("--L", ms_block, "block length for --feature block");
    measure->add_option("--input", ms_input, "graph file (edge-list format)")->required();

    // digits ---------------------------------------------------------------
    auto* digits = app.add_subcommand("digits", "emit or inspect a digit stream");
    std::string ds_source;
    std::int32_t ds_base = 10;
    std::int64_t ds_count = 0;
    bool ds_binarize = false;
    digits->add_option("--source", ds_source, "champernowne|pi|prng|file:PATH")->required();
    digits->add_option("--base", ds_base, "digit base");
    digits->add_option("--count", ds_count, "number of digits");
    digits->add_flag("--binarize", ds_binarize, "map digits to bits (d < base/2 -> 0)");
    digits->add_option("--seed", seed, "seed for --source prng");
    digits->add_option("--out", out_path, "output file (default stdout)");

    // experiment -----------------------------------------------------------
    auto* experiment = app.add_subcommand("experiment", "seeded desk-scale experiment");
    std::string ex_kind, ex_out, ex_digit_file;
    std::int64_t ex_digits = 10000;
    std::int32_t ex_base = 10, ex_n = 100, ex_k = 4, ex_replicates = 10, ex_tmax = -1;
    std::vector<std::int32_t> ex_m{4, 5};
    bool ex_svg = false, ex_standin = false;
    experiment->add_option("kind", ex_kind,
                           "pi-histogram|density-entropy-equality|ba-vs-er|zk-growth|"
                           "zk-divergence|compression-vs-entropy|omega-graph")->required();
    experiment->add_option("--out", ex_out, "output directory")->required();
    experiment->add_option("--seed", seed, "root seed");
    experiment->add_flag("--svg", ex_svg, "also emit an SVG rendering");
    experiment->add_option("--digits", ex_digits, "digit count (pi-histogram)");
    experiment->add_option("--base", ex_base, "digit base (pi-histogram)");
    experiment->add_option("--n", ex_n, "node count");
    experiment->add_option("--k", ex_k, "ring degree (density-entropy-equality)");
    experiment->add_option("--m", ex_m, "attachment counts (ba-vs-er)");
    experiment->add_option("--replicates", ex_replicates, "replicates per group (ba-vs-er)");
    experiment->add_option("--t-max", ex_tmax, "growth steps (zk-*, compression)");
    experiment->add_option("--digit-file", ex_digit_file, "external digit file (pi-histogram, omega-graph)");
    experiment->add_flag("--allow-prng-standin", ex_standin,
                         "omega-graph only: use a labelled prng stand-in when no file is given");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    if (gen_zk->parsed()) {
        GraphOut g;
        const em_status st = zk_randomized ? em_zk_graph_randomized(zk_steps, seed, &g.value)
                                           : em_zk_graph(zk_steps, &g.value);
        if (st) return fail(st);
        return emit_graph(g.value, out_path, "");
    }
    if (gen_digit->parsed()) {
        const std::int64_t needed = dg_strict ? static_cast<std::int64_t>(dg_n) * dg_n
                                              : static_cast<std::int64_t>(dg_n) * (dg_n - 1) / 2;
        if (dg_digits <= 0) dg_digits = needed;
        StreamOut bits;
        if (auto st = bit_source(dg_source, dg_base, dg_digits, seed, &bits.value)) return fail(st);
        GraphOut g;
        if (auto st = em_digit_graph(bits.value, dg_n, dg_strict ? 1 : 0, &g.value)) return fail(st);
        return emit_graph(g.value, out_path, "");
    }
    if (gen_er->parsed()) {
        GraphOut g;
        const em_status st = er_exact >= 0 ? em_er_graph_exact(er_n, er_exact, seed, &g.value)
                                           : em_er_graph(er_n, er_p, seed, &g.value);
        if (st) return fail(st);
        return emit_graph(g.value, out_path, "");
    }
    if (gen_ba->parsed()) {
        GraphOut g;
        if (auto st = em_ba_graph(ba_n, ba_m, seed, &g.value)) return fail(st);
        return emit_graph(g.value, out_path, "");
    }
    if (gen_ring->parsed()) {
        GraphOut g;
        if (auto st = em_regular_ring_graph(ring_n, ring_k, &g.value)) return fail(st);
        return emit_graph(g.value, out_path, "");
    }
    if (gen_targeted->parsed()) {
        std::vector<std::int32_t> degrees(static_cast<std::size_t>(tg_n > 0 ? tg_n : 0));
        if (auto st = em_targeted_degree_sequence(tg_n, tg_entropy, tg_tol, seed, degrees.data()))
            return fail(st);
        GraphOut g;
        if (auto st = em_realize_graph(degrees.data(), degrees.size(), &g.value)) return fail(st);
        std::string comment = "# degrees=";
        for (std::size_t i = 0; i < degrees.size(); ++i)
            comment += (i ? "," : "") + std::to_string(degrees[i]);
        return emit_graph(g.value, out_path, comment);
    }
    if (measure->parsed()) {
        GraphOut g;
        if (auto st = em_graph_read_file(ms_input.c_str(), &g.value)) return fail(st);
        StringOut json;
        if (auto st = em_graph_entropy_json(g.value, ms_feature.c_str(), ms_block,
                                            ms_input.c_str(), &json.value))
            return fail(st);
        std::cout << json.value;
        return 0;
    }
    if (digits->parsed()) {
        StreamOut s;
        em_status st = EM_OK;
        if (ds_source == "champernowne") {
            st = em_digits_champernowne(ds_base, ds_count, &s.value);
        } else if (ds_source == "pi") {
            st = em_digits_pi(ds_base, ds_count, &s.value);
        } else if (ds_source == "prng") {
            st = em_digits_prng(ds_base, ds_count, seed, &s.value);
        } else if (ds_source.rfind("file:", 0) == 0) {
            st = em_digits_load_file(ds_source.substr(5).c_str(), &s.value);
        } else {
            std::cerr << "error: unknown source '" << ds_source << "'\n";
            return 3;
        }
        if (st) return fail(st);
        if (ds_binarize) {
            StreamOut bin;
            if (auto st2 = em_digits_binarize(s.value, &bin.value)) return fail(st2);
            std::swap(s.value, bin.value);
        }
        if (!out_path.empty()) {
            if (auto st2 = em_digit_stream_write_file(s.value, out_path.c_str())) return fail(st2);
            return 0;
        }
        StringOut text;
        if (auto st2 = em_digit_stream_to_text(s.value, &text.value)) return fail(st2);
        std::cout << text.value;
        return 0;
    }
    if (experiment->parsed()) {
        nlohmann::json params;
        params["digits"] = ex_digits;
        params["base"] = ex_base;
        params["n"] = ex_n;
        params["k"] = ex_k;
        params["m_values"] = ex_m;
        params["replicates"] = ex_replicates;
        if (ex_tmax >= 0) params["t_max"] = ex_tmax;
        if (!ex_digit_file.empty()) {
            params["digit_file"] = ex_digit_file;
            params["path"] = ex_digit_file;
        }
        params["allow_prng_standin"] = ex_standin;
        StringOut json;
        if (auto st = em_experiment_run(ex_kind.c_str(), params.dump().c_str(), seed,
                                        ex_out.c_str(), ex_svg ? 1 : 0, &json.value))
            return fail(st);
        std::cout << json.value;
        return 0;
    }
    return 3;
}
