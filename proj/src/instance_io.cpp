#include "cvd/instance_io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "cvd/errors.hpp"

namespace cvd {

namespace {

int parse_count(const std::string& tok, int line, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, std::string("expected a nonnegative ") + what + ", got '" + tok + "'");
    }
}

}  // namespace

WeightedGraph parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<bool> has_weight;
    std::map<Vertex, Rational> cost;
    std::set<std::pair<Vertex, Vertex>> seen_edges;
    std::vector<std::pair<Vertex, Vertex>> edges;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ss(line);
        std::string tag;
        if (!(ss >> tag)) continue;  // blank
        if (tag[0] == '#') continue;

        if (tag == "p") {
            if (n >= 0) throw ParseError(lineno, "duplicate problem line");
            std::string prob, ntok, mtok, extra;
            if (!(ss >> prob >> ntok >> mtok) || (ss >> extra))
                throw ParseError(lineno, "malformed problem line, expected 'p cvd <n> <m>'");
            if (prob != "cvd") throw ParseError(lineno, "unknown problem tag '" + prob + "'");
            n = parse_count(ntok, lineno, "vertex count");
            m = parse_count(mtok, lineno, "edge count");
            has_weight.assign(n + 1, false);
        } else if (tag == "v") {
            if (n < 0) throw ParseError(lineno, "vertex line before problem line");
            std::string id_tok, w_tok, extra;
            if (!(ss >> id_tok >> w_tok) || (ss >> extra))
                throw ParseError(lineno, "malformed vertex line, expected 'v <id> <weight>'");
            int id = parse_count(id_tok, lineno, "vertex id");
            if (id < 1 || id > n) throw ParseError(lineno, "vertex id out of range: " + id_tok);
            if (has_weight[id]) throw ParseError(lineno, "duplicate weight for vertex " + id_tok);
            try {
                cost[id] = parse_rational(w_tok);
            } catch (const PreconditionError& e) {
                throw ParseError(lineno, e.what());
            }
            has_weight[id] = true;
        } else if (tag == "e") {
            if (n < 0) throw ParseError(lineno, "edge line before problem line");
            std::string u_tok, v_tok, extra;
            if (!(ss >> u_tok >> v_tok) || (ss >> extra))
                throw ParseError(lineno, "malformed edge line, expected 'e <u> <v>'");
            int u = parse_count(u_tok, lineno, "vertex id");
            int v = parse_count(v_tok, lineno, "vertex id");
            if (u < 1 || u > n || v < 1 || v > n)
                throw ParseError(lineno, "edge endpoint out of range");
            if (u == v) throw ParseError(lineno, "self-loop at vertex " + u_tok);
            auto key = std::minmax(u, v);
            if (!seen_edges.insert({key.first, key.second}).second)
                throw ParseError(lineno, "duplicate edge " + u_tok + " " + v_tok);
            edges.emplace_back(u, v);
        } else {
            throw ParseError(lineno, "unknown record '" + tag + "'");
        }
    }
    if (n < 0) throw ParseError(lineno, "missing problem line");
    for (int id = 1; id <= n; ++id)
        if (!has_weight[id])
            throw ParseError(lineno, "vertex " + std::to_string(id) + " has no weight");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError(lineno, "edge count mismatch: header says " + std::to_string(m) +
                                     ", found " + std::to_string(edges.size()));

    WeightedGraph wg;
    wg.graph = Graph::from_edges(n, edges);
    wg.cost = std::move(cost);
    return wg;
}

WeightedGraph parse_instance_text(const std::string& text) {
    std::istringstream ss(text);
    return parse_instance(ss);
}

WeightedGraph load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open instance file: " + path);
    return parse_instance(in);
}

std::string format_weight(const Rational& r) {
    BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    // decimal form if the denominator divides a power of ten
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d == 1) {
        int k = std::max(twos, fives);
        BigInt scale = 1;
        for (int i = 0; i < k; ++i) scale *= 10;
        BigInt scaled = num * scale / den;
        bool neg = scaled < 0;
        std::string digits = (neg ? -scaled : scaled).str();
        if (static_cast<int>(digits.size()) <= k)
            digits.insert(0, k + 1 - digits.size(), '0');
        digits.insert(digits.size() - k, ".");
        return (neg ? "-" : "") + digits;
    }
    return r.str();
}

std::string serialize_instance(const WeightedGraph& wg) {
    const auto vs = wg.graph.vertices();
    int n = static_cast<int>(vs.size());
    for (int i = 0; i < n; ++i)
        if (vs[i] != i + 1)
            throw PreconditionError("serialize_instance: vertex ids must be exactly 1..n");
    std::ostringstream out;
    out << "p cvd " << n << " " << wg.graph.edge_count() << "\n";
    for (Vertex v : vs) out << "v " << v << " " << format_weight(wg.cost_of(v)) << "\n";
    for (auto [u, v] : wg.graph.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

void save_instance(const WeightedGraph& wg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write instance file: " + path);
    out << serialize_instance(wg);
}

}  // namespace cvd
