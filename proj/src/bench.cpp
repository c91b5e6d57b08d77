#include "cvd/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>

#include <json.hpp>

#include "cvd/approx.hpp"
#include "cvd/errors.hpp"
#include "cvd/instance_io.hpp"

namespace cvd {

namespace {

std::optional<Rational> oracle_for(const std::string& algo, const WeightedGraph& wg,
                                   const OracleBudget& budget) {
    try {
        if (algo == "p3sub") return exact_p3_subgraph_hitting(wg, budget).cost;
        return exact_cluster_vd(wg, budget).cost;
    } catch (const BudgetExceeded&) {
        return std::nullopt;
    }
}

BenchRow run_one(const std::string& stem, const std::string& algo, const WeightedGraph& wg,
                 const OracleBudget& budget) {
    BenchRow row;
    row.instance = stem;
    row.n = static_cast<int>(wg.graph.vertex_count());
    row.m = static_cast<int>(wg.graph.edge_count());
    row.algorithm = algo;

    auto start = std::chrono::steady_clock::now();
    if (algo == "lr94") {
        SolveOutcome out = cluster_vd_apx(wg);
        row.cost = out.cost;
        row.steps_total = static_cast<long long>(out.trace.steps.size());
        row.steps_zero = static_cast<long long>(out.trace.zero_steps());
        row.steps_twin = static_cast<long long>(out.trace.twin_steps());
        row.steps_weight = static_cast<long long>(out.trace.weight_steps());
    } else if (algo == "naive3") {
        HittingSet x = naive_3apx(wg);
        row.cost = wg.cost_of(x.vertices);
    } else if (algo == "p3sub") {
        HittingSet x = hitting_p3_subgraphs_apx(wg);
        row.cost = wg.cost_of(x.vertices);
    } else if (algo == "exact") {
        try {
            OracleResult res = exact_cluster_vd(wg, budget);
            row.cost = res.cost;
        } catch (const BudgetExceeded& e) {
            row.status = e.what();
        }
    } else {
        row.status = "unknown algorithm '" + algo + "'";
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                            start)
                      .count();

    if (row.status == "ok" && row.cost) {
        row.oracle_cost = algo == "exact" ? row.cost : oracle_for(algo, wg, budget);
        if (row.oracle_cost) {
            if (*row.oracle_cost != 0)
                row.ratio = *row.cost / *row.oracle_cost;
            else if (*row.cost == 0)
                row.ratio = Rational(1);
            else
                row.status = "cost above zero optimum";
        }
    }
    return row;
}

std::string fmt_ratio(const Rational& r) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", to_double(r));
    return buf;
}

}  // namespace

BenchReport run_bench(const std::string& corpus_dir, const std::vector<std::string>& algorithms,
                      const OracleBudget& budget) {
    namespace fs = std::filesystem;
    BenchReport report;
    if (!fs::is_directory(corpus_dir)) throw Error("corpus is not a directory: " + corpus_dir);

    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(corpus_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    for (const auto& path : files) {
        std::string stem = path.stem().string();
        WeightedGraph wg;
        try {
            wg = load_instance(path.string());
        } catch (const Error& e) {
            BenchRow row;
            row.instance = stem;
            row.algorithm = "-";
            row.status = e.what();
            report.rows.push_back(std::move(row));
            continue;
        }
        for (const auto& algo : algorithms)
            report.rows.push_back(run_one(stem, algo, wg, budget));
    }
    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::string out =
        "instance,n,m,algorithm,status,cost,oracle_cost,ratio,steps_total,steps_zero,steps_twin,"
        "steps_weight,wall_ms\n";
    for (const auto& r : report.rows) {
        out += r.instance + ',' + std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               r.algorithm + ',';
        // statuses may contain commas; keep the cell quoted
        out += '"' + r.status + "\",";
        out += (r.cost ? to_string(*r.cost) : "") + std::string(",");
        out += (r.oracle_cost ? to_string(*r.oracle_cost) : "") + std::string(",");
        out += (r.ratio ? fmt_ratio(*r.ratio) : "") + std::string(",");
        out += std::to_string(r.steps_total) + ',' + std::to_string(r.steps_zero) + ',' +
               std::to_string(r.steps_twin) + ',' + std::to_string(r.steps_weight) + ',';
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
        out += buf;
        out += '\n';
    }
    return out;
}

std::string bench_json(const BenchReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : report.rows) {
        nlohmann::json j{{"instance", r.instance}, {"n", r.n},       {"m", r.m},
                         {"algorithm", r.algorithm}, {"status", r.status},
                         {"steps_total", r.steps_total}, {"steps_zero", r.steps_zero},
                         {"steps_twin", r.steps_twin}, {"steps_weight", r.steps_weight},
                         {"wall_ms", r.wall_ms}};
        j["cost"] = r.cost ? nlohmann::json(to_string(*r.cost)) : nlohmann::json();
        j["oracle_cost"] = r.oracle_cost ? nlohmann::json(to_string(*r.oracle_cost)) : nlohmann::json();
        j["ratio"] = r.ratio ? nlohmann::json(to_double(*r.ratio)) : nlohmann::json();
        rows.push_back(std::move(j));
    }
    return nlohmann::json{{"rows", rows}}.dump(2);
}

}  // namespace cvd
