#include "cvd/generators.hpp"

#include <limits>
#include <random>
#include <vector>

#include "cvd/errors.hpp"

namespace cvd {

namespace {

// mt19937_64 output is fully specified, and the helpers below avoid the
// implementation-defined std distributions, so instances are reproducible
// across platforms.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}

    std::uint64_t below(std::uint64_t n) {
        std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t x;
        do { x = eng(); } while (x >= limit);
        return x % n;
    }

    double unit() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; }
};

struct ModelSpec {
    std::string name;
    std::vector<std::string> args;  // raw, nested specs allowed
};

// name or name(arg,arg,...) with parenthesis-aware splitting.
ModelSpec parse_spec(const std::string& text) {
    ModelSpec spec;
    auto open = text.find('(');
    if (open == std::string::npos) {
        spec.name = text;
        return spec;
    }
    if (text.back() != ')')
        throw PreconditionError("malformed model spec: " + text);
    spec.name = text.substr(0, open);
    std::string inner = text.substr(open + 1, text.size() - open - 2);
    if (inner.empty()) return spec;
    int depth = 0;
    std::string cur;
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            spec.args.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    spec.args.push_back(cur);
    for (const auto& a : spec.args)
        if (a.empty()) throw PreconditionError("malformed model spec: " + text);
    return spec;
}

long long arg_int(const ModelSpec& s, std::size_t i) {
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s.args.at(i), &pos);
        if (pos != s.args[i].size()) throw std::invalid_argument(s.args[i]);
        return v;
    } catch (const std::exception&) {
        throw PreconditionError("model " + s.name + ": bad integer argument '" +
                                (i < s.args.size() ? s.args[i] : "<missing>") + "'");
    }
}

double arg_real(const ModelSpec& s, std::size_t i) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s.args.at(i), &pos);
        if (pos != s.args[i].size()) throw std::invalid_argument(s.args[i]);
        return v;
    } catch (const std::exception&) {
        throw PreconditionError("model " + s.name + ": bad real argument '" +
                                (i < s.args.size() ? s.args[i] : "<missing>") + "'");
    }
}

void expect_args(const ModelSpec& s, std::size_t count) {
    if (s.args.size() != count)
        throw PreconditionError("model " + s.name + ": expected " + std::to_string(count) +
                                " arguments, got " + std::to_string(s.args.size()));
}

Graph build_structure(const ModelSpec& spec, Rng& rng) {
    if (spec.name == "gnp") {
        expect_args(spec, 2);
        long long n = arg_int(spec, 0);
        double p = arg_real(spec, 1);
        if (n < 0 || p < 0.0 || p > 1.0)
            throw PreconditionError("gnp: need n >= 0 and p in [0,1]");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j)
                if (rng.unit() < p) edges.emplace_back(i, j);
        return Graph::from_edges(static_cast<int>(n), edges);
    }
    if (spec.name == "planted-clusters" || spec.name == "planted") {
        expect_args(spec, 3);
        long long n = arg_int(spec, 0), k = arg_int(spec, 1);
        double noise = arg_real(spec, 2);
        if (n < 0 || k < 1 || k > std::max<long long>(n, 1) || noise < 0.0 || noise > 1.0)
            throw PreconditionError("planted-clusters: need 1 <= k <= n, noise in [0,1]");
        // balanced contiguous blocks; the first n % k blocks get one extra
        std::vector<int> block(n + 1);
        long long base = n / k, extra = n % k, v = 1;
        for (long long b = 0; b < k; ++b) {
            long long size = base + (b < extra ? 1 : 0);
            for (long long t = 0; t < size; ++t) block[v++] = static_cast<int>(b);
        }
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (Vertex i = 1; i <= n; ++i)
            for (Vertex j = i + 1; j <= n; ++j) {
                bool edge = block[i] == block[j];
                if (noise > 0.0 && rng.unit() < noise) edge = !edge;
                if (edge) edges.emplace_back(i, j);
            }
        return Graph::from_edges(static_cast<int>(n), edges);
    }
    if (spec.name == "vc-pendant") {
        expect_args(spec, 1);
        Graph inner = build_structure(parse_spec(spec.args[0]), rng);
        int m = static_cast<int>(inner.vertex_count());
        auto edges = inner.edges();
        for (Vertex v = 1; v <= m; ++v) edges.emplace_back(v, m + v);
        return Graph::from_edges(2 * m, edges);
    }
    if (spec.name == "bull-neighborhood") {
        expect_args(spec, 0);
        // 1 sees the whole bull: triangle {2,3,4}, legs 5~2 and 6~3
        return Graph::from_edges(6, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6},
                                     {2, 3}, {2, 4}, {3, 4}, {2, 5}, {3, 6}});
    }
    if (spec.name == "k5-gadget") {
        long long copies = 1;
        if (!spec.args.empty()) {
            expect_args(spec, 1);
            copies = arg_int(spec, 0);
        }
        if (copies < 1) throw PreconditionError("k5-gadget: copies must be >= 1");
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (long long c = 0; c < copies; ++c) {
            Vertex base = static_cast<Vertex>(9 * c);
            for (Vertex i = 1; i <= 5; ++i)
                for (Vertex j = i + 1; j <= 5; ++j) edges.emplace_back(base + i, base + j);
            for (Vertex i = 1; i <= 4; ++i) edges.emplace_back(base + i, base + 5 + i);
        }
        return Graph::from_edges(static_cast<int>(9 * copies), edges);
    }
    throw PreconditionError("unknown model '" + spec.name + "'");
}

}  // namespace

WeightedGraph generate(const std::string& model_spec, std::uint64_t seed, long long wmin,
                       long long wmax) {
    if (wmin < 0 || wmax < wmin)
        throw PreconditionError("generate: need 0 <= wmin <= wmax");
    Rng rng(seed);
    WeightedGraph wg;
    wg.graph = build_structure(parse_spec(model_spec), rng);
    for (Vertex v : wg.graph.vertices()) {
        long long w = wmin == wmax
                          ? wmin
                          : wmin + static_cast<long long>(rng.below(
                                       static_cast<std::uint64_t>(wmax - wmin + 1)));
        wg.cost[v] = w;
    }
    return wg;
}

}  // namespace cvd
