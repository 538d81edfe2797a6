#include "graph.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace em {

namespace {

std::int64_t pair_count(std::int32_t n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

}  // namespace

Graph::Graph(std::int32_t n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)), degrees_(n, 0), adjacency_(n) {
    std::sort(edges_.begin(), edges_.end());
    for (const auto& [u, v] : edges_) {
        degrees_[u - 1]++;
        degrees_[v - 1]++;
        adjacency_[u - 1].push_back(v);
        adjacency_[v - 1].push_back(u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

Graph Graph::build(std::int32_t node_count, std::span<const Edge> edges) {
    if (node_count < 1) throw std::invalid_argument("node_count must be positive");
    std::vector<Edge> normalized;
    normalized.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > node_count || b < 1 || b > node_count)
            throw std::invalid_argument("edge label out of range 1..node_count");
        if (a == b) throw std::invalid_argument("self-loop rejected");
        normalized.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(normalized.begin(), normalized.end());
    if (std::adjacent_find(normalized.begin(), normalized.end()) != normalized.end())
        throw std::invalid_argument("duplicate edge rejected");
    return Graph(node_count, std::move(normalized));
}

Graph Graph::build(std::int32_t node_count, std::initializer_list<Edge> edges) {
    return build(node_count, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph Graph::from_upper_triangle(std::int32_t node_count, std::string_view bits) {
    if (node_count < 1) throw std::invalid_argument("node_count must be positive");
    if (std::cmp_not_equal(bits.size(), pair_count(node_count)))
        throw std::invalid_argument("bit string length must be n(n-1)/2");
    std::vector<Edge> edges;
    std::size_t k = 0;
    for (std::int32_t i = 1; i <= node_count; ++i) {
        for (std::int32_t j = i + 1; j <= node_count; ++j, ++k) {
            const char c = bits[k];
            if (c == '1')
                edges.emplace_back(i, j);
            else if (c != '0')
                throw std::invalid_argument("bit string may contain only '0' and '1'");
        }
    }
    return Graph(node_count, std::move(edges));
}

bool Graph::has_edge(std::int32_t u, std::int32_t v) const {
    if (u == v) return false;
    const auto& nbrs = adjacency_[u - 1];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::string Graph::to_edge_list_text() const {
    std::ostringstream out;
    out << "# nodes=" << n_ << "\n";
    for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

void Graph::write_file(const std::filesystem::path& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open for writing: " + path.string());
    out << to_edge_list_text();
}

Graph Graph::parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::int32_t n = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        std::string_view body(line.data() + start, line.size() - start);
        if (body[0] == '#') {
            if (n < 0) {
                const auto pos = body.find("nodes=");
                if (pos == std::string_view::npos)
                    throw IoError("edge-list file must start with '# nodes=N'");
                const auto val = body.substr(pos + 6);
                auto res = std::from_chars(val.data(), val.data() + val.size(), n);
                if (res.ec != std::errc{} || n < 1)
                    throw IoError("bad node count in edge-list header");
            }
            continue;
        }
        if (n < 0) throw IoError("edge-list file must start with '# nodes=N'");
        std::istringstream row{std::string(body)};
        std::int32_t u = 0, v = 0;
        if (!(row >> u >> v)) throw IoError("bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    if (n < 0) throw IoError("edge-list file must start with '# nodes=N'");
    return build(n, edges);
}

Graph Graph::read_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open graph file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_edge_list(buf.str());
}

BitMatrix adjacency_matrix(const Graph& g) {
    BitMatrix m(g.node_count());
    for (const auto& [u, v] : g.edges()) {
        m.set(u - 1, v - 1, 1);
        m.set(v - 1, u - 1, 1);
    }
    return m;
}

DegreeSequence degree_sequence(const Graph& g) {
    DegreeSequence d(g.node_count());
    for (std::int32_t v = 1; v <= g.node_count(); ++v) d[v - 1] = g.degree(v);
    return d;
}

std::string upper_triangle_bits(const Graph& g) {
    const std::int32_t n = g.node_count();
    std::string bits(static_cast<std::size_t>(pair_count(n)), '0');
    // row-major slot of pair (u,v), u<v, 1-indexed labels
    auto slot = [n](std::int32_t u, std::int32_t v) {
        const std::int64_t i = u - 1, j = v - 1;
        return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (j - i - 1));
    };
    for (const auto& [u, v] : g.edges()) bits[slot(u, v)] = '1';
    return bits;
}

Ratio edge_density(const Graph& g) {
    if (g.node_count() < 2) throw std::invalid_argument("edge density needs node_count >= 2");
    std::int64_t num = g.edge_count();
    std::int64_t den = pair_count(g.node_count());
    const std::int64_t d = std::gcd(num, den);
    if (d > 0) {
        num /= d;
        den /= d;
    }
    return Ratio{num, den};
}

bool is_graphical(std::span<const std::int32_t> seq) {
    for (const auto d : seq)
        if (d < 0) throw std::invalid_argument("degree sequence entries must be non-negative");
    if (seq.empty()) return true;
    std::vector<std::int64_t> d(seq.begin(), seq.end());
    std::sort(d.begin(), d.end(), std::greater<>());
    const std::int64_t n = static_cast<std::int64_t>(d.size());
    if (d[0] > n - 1) return false;
    std::int64_t total = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    if (total % 2 != 0) return false;
    // Erdos-Gallai: for every k, sum of the k largest degrees is at most
    // k(k-1) + sum_{i>k} min(d_i, k).
    std::int64_t lhs = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        std::int64_t rhs = k * (k - 1);
        for (std::int64_t i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

Graph realize_graph(std::span<const std::int32_t> seq) {
    if (!is_graphical(seq)) throw std::invalid_argument("sequence is not graphical");
    const std::int32_t n = static_cast<std::int32_t>(seq.size());
    // residual degree per label; Havel-Hakimi with (residual desc, label asc)
    // ordering at every round
    std::vector<std::pair<std::int32_t, std::int32_t>> residual;  // (label, residual)
    residual.reserve(seq.size());
    for (std::int32_t i = 0; i < n; ++i) residual.emplace_back(i + 1, seq[i]);
    std::vector<Edge> edges;
    for (;;) {
        std::sort(residual.begin(), residual.end(), [](const auto& a, const auto& b) {
            return a.second != b.second ? a.second > b.second : a.first < b.first;
        });
        const auto [label, d] = residual.front();
        if (d == 0) break;
        if (std::cmp_greater(d + 1, residual.size()))
            throw std::logic_error("Havel-Hakimi ran out of targets");
        residual.front().second = 0;
        for (std::int32_t i = 1; i <= d; ++i) {
            auto& [target, r] = residual[i];
            if (r <= 0) throw std::logic_error("Havel-Hakimi hit an exhausted target");
            r--;
            edges.emplace_back(std::min(label, target), std::max(label, target));
        }
    }
    return Graph::build(n, edges);
}

namespace {

// One round of color refinement: new color key = (old color, sorted multiset
// of neighbor colors). Keys are mapped to dense ids in sorted key order so
// the ids themselves are isomorphism-invariant.
bool refine_colors(const Graph& a, const Graph& b, std::vector<int>& ca, std::vector<int>& cb) {
    using Key = std::pair<int, std::vector<int>>;
    auto keys_of = [](const Graph& g, const std::vector<int>& colors) {
        std::vector<Key> keys(g.node_count());
        for (std::int32_t v = 1; v <= g.node_count(); ++v) {
            std::vector<int> nbr;
            nbr.reserve(g.neighbors(v).size());
            for (const auto w : g.neighbors(v)) nbr.push_back(colors[w - 1]);
            std::sort(nbr.begin(), nbr.end());
            keys[v - 1] = {colors[v - 1], std::move(nbr)};
        }
        return keys;
    };
    const auto ka = keys_of(a, ca);
    const auto kb = keys_of(b, cb);
    std::map<Key, int> ids;
    for (const auto& k : ka) ids.emplace(k, 0);
    for (const auto& k : kb) ids.emplace(k, 0);
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    bool changed = false;
    for (std::size_t i = 0; i < ka.size(); ++i) {
        const int id = ids.at(ka[i]);
        if (id != ca[i]) changed = true;
        ca[i] = id;
    }
    for (std::size_t i = 0; i < kb.size(); ++i) {
        const int id = ids.at(kb[i]);
        if (id != cb[i]) changed = true;
        cb[i] = id;
    }
    return changed;
}

// Joint stable coloring of two graphs (shared id space).
std::pair<std::vector<int>, std::vector<int>> wl_colors(const Graph& a, const Graph& b) {
    std::vector<int> ca(a.node_count(), 0), cb(b.node_count(), 0);
    for (std::int32_t v = 1; v <= a.node_count(); ++v) ca[v - 1] = a.degree(v);
    for (std::int32_t v = 1; v <= b.node_count(); ++v) cb[v - 1] = b.degree(v);
    const int rounds = std::max(a.node_count(), b.node_count());
    for (int r = 0; r < rounds; ++r)
        if (!refine_colors(a, b, ca, cb)) break;
    return {std::move(ca), std::move(cb)};
}

constexpr std::int32_t kIsoNodeBound = 30;
constexpr std::int64_t kIsoStepBudget = 5'000'000;

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    const std::vector<int>& ca;
    const std::vector<int>& cb;
    std::vector<std::int32_t> order;    // a-labels, most constrained first
    std::vector<std::int32_t> mapping;  // a-label -> b-label, 0 = unset
    std::vector<bool> used;             // b-labels
    std::int64_t steps = 0;

    bool extend(std::size_t pos) {
        if (++steps > kIsoStepBudget)
            throw LimitError("isomorphism search budget exceeded");
        if (pos == order.size()) return true;
        const std::int32_t u = order[pos];
        for (std::int32_t w = 1; w <= b.node_count(); ++w) {
            if (used[w - 1] || cb[w - 1] != ca[u - 1]) continue;
            // adjacency to every placed vertex must agree both ways
            bool ok = true;
            for (std::size_t i = 0; i < pos && ok; ++i) {
                const std::int32_t x = order[i];
                ok = a.has_edge(u, x) == b.has_edge(w, mapping[x - 1]);
            }
            if (!ok) continue;
            mapping[u - 1] = w;
            used[w - 1] = true;
            if (extend(pos + 1)) return true;
            mapping[u - 1] = 0;
            used[w - 1] = false;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.node_count() > kIsoNodeBound || b.node_count() > kIsoNodeBound)
        throw LimitError("isomorphism check limited to 30 nodes");
    if (a.node_count() != b.node_count() || a.edge_count() != b.edge_count()) return false;
    auto da = degree_sequence(a), db = degree_sequence(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    const auto [ca, cb] = wl_colors(a, b);
    auto hist = [](const std::vector<int>& c) {
        std::map<int, int> h;
        for (const int x : c) h[x]++;
        return h;
    };
    if (hist(ca) != hist(cb)) return false;

    IsoSearch search{a, b, ca, cb, {}, {}, {}, 0};
    search.order.resize(a.node_count());
    std::iota(search.order.begin(), search.order.end(), 1);
    const auto color_count = hist(ca);
    std::sort(search.order.begin(), search.order.end(), [&](std::int32_t u, std::int32_t v) {
        const int cu = color_count.at(ca[u - 1]), cv = color_count.at(ca[v - 1]);
        if (cu != cv) return cu < cv;  // rarest color class first
        if (ca[u - 1] != ca[v - 1]) return ca[u - 1] < ca[v - 1];
        return u < v;
    });
    search.mapping.assign(a.node_count(), 0);
    search.used.assign(b.node_count(), false);
    return search.extend(0);
}

namespace {

constexpr std::int32_t kCanonicalNodeBound = 20;
constexpr std::int64_t kCanonicalBranchBudget = 4'000'000;

// Exact minimization of the row-major upper-triangle bit string over all
// permutations, as an ordered-partition search. Placing vertex v at the next
// position splits every block of remaining vertices into (non-neighbours of
// v, neighbours of v), in that order: with everything earlier fixed, moving
// a neighbour ahead of a non-neighbour can only enlarge the current row, and
// rows already emitted are constant on blocks, so the split order is forced
// and the string grows strictly row by row. The only choice points are which
// member of the first block to place next; candidates are tried in order of
// the row they produce, twins (identical adjacency outside the pair) are
// interchangeable and tried once, and a branch is cut as soon as its row
// exceeds the best known string at that offset.
struct CanonicalSearch {
    std::int32_t n;
    std::vector<std::uint32_t> adj;  // adjacency bitmask per vertex (0-based)
    std::vector<int> twin_class;     // vertex -> twin class id
    std::string best;
    bool have_best = false;
    std::int64_t branches = 0;

    using Blocks = std::vector<std::vector<std::int32_t>>;

    // row emitted when v is placed with `blocks` remaining, plus the refined
    // partition of the remaining vertices
    std::pair<std::string, Blocks> place(std::int32_t v, const Blocks& blocks) const {
        std::string row;
        Blocks refined;
        for (const auto& block : blocks) {
            std::vector<std::int32_t> zeros, ones;
            for (const auto w : block) {
                if (w == v) continue;
                ((adj[v] >> w) & 1u ? ones : zeros).push_back(w);
            }
            row.append(zeros.size(), '0');
            row.append(ones.size(), '1');
            if (!zeros.empty()) refined.push_back(std::move(zeros));
            if (!ones.empty()) refined.push_back(std::move(ones));
        }
        return {std::move(row), std::move(refined)};
    }

    void descend(const Blocks& blocks, std::string& prefix) {
        if (blocks.empty()) {
            if (!have_best || prefix < best) {
                best = prefix;
                have_best = true;
            }
            return;
        }
        if (++branches > kCanonicalBranchBudget)
            throw LimitError("canonical form search budget exceeded");
        // best may have improved since this node was entered
        bool tight = false;
        if (have_best) {
            const int cmp = best.compare(0, prefix.size(), prefix);
            if (cmp < 0) return;  // prefix already exceeds the best string
            tight = cmp == 0;
        }
        std::vector<std::pair<std::string, std::int32_t>> candidates;
        std::vector<Blocks> refinements;
        for (const auto v : blocks.front()) {
            auto [row, refined] = place(v, blocks);
            candidates.emplace_back(std::move(row), v);
            refinements.push_back(std::move(refined));
        }
        std::vector<std::size_t> order(candidates.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return candidates[a] < candidates[b];
        });
        std::uint32_t tried_classes = 0;
        for (const auto idx : order) {
            const auto& [row, v] = candidates[idx];
            const std::uint32_t class_bit = 1u << twin_class[v];
            if (tried_classes & class_bit) continue;
            tried_classes |= class_bit;
            if (tight && best.compare(prefix.size(), row.size(), row) < 0)
                continue;  // this row already loses
            const std::size_t mark = prefix.size();
            prefix += row;
            descend(refinements[idx], prefix);
            prefix.resize(mark);
        }
    }
};

}  // namespace

std::string canonical_form(const Graph& g) {
    const std::int32_t n = g.node_count();
    if (n > kCanonicalNodeBound)
        throw LimitError("canonical form limited to 20 nodes");
    if (n == 1) return "";

    CanonicalSearch s;
    s.n = n;
    s.adj.assign(n, 0);
    for (const auto& [u, v] : g.edges()) {
        s.adj[u - 1] |= 1u << (v - 1);
        s.adj[v - 1] |= 1u << (u - 1);
    }
    // twins: adjacency equal once the pair itself is masked out
    s.twin_class.assign(n, -1);
    int next_class = 0;
    for (std::int32_t v = 0; v < n; ++v) {
        if (s.twin_class[v] >= 0) continue;
        s.twin_class[v] = next_class;
        for (std::int32_t w = v + 1; w < n; ++w) {
            if (s.twin_class[w] >= 0) continue;
            const std::uint32_t pair_mask = ~((1u << v) | (1u << w));
            if ((s.adj[v] & pair_mask) == (s.adj[w] & pair_mask)) s.twin_class[w] = next_class;
        }
        next_class++;
    }
    CanonicalSearch::Blocks initial(1);
    initial[0].resize(n);
    std::iota(initial[0].begin(), initial[0].end(), 0);
    std::string prefix;
    prefix.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    s.descend(initial, prefix);
    return s.best;
}

}  // namespace em
