#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cvd/approx.hpp"
#include "cvd/bench.hpp"
#include "cvd/errors.hpp"
#include "cvd/exact_oracle.hpp"
#include "cvd/generators.hpp"
#include "cvd/instance_io.hpp"

namespace {

using nlohmann::json;

json trace_json(const cvd::LocalRatioTrace& trace) {
    json steps = json::array();
    for (const auto& step : trace.steps) {
        if (const auto* z = std::get_if<cvd::ZeroCostRemovalStep>(&step)) {
            steps.push_back({{"kind", "zero_cost_removal"}, {"vertex", z->vertex}});
        } else if (const auto* t = std::get_if<cvd::TwinMergeStep>(&step)) {
            steps.push_back({{"kind", "twin_merge"}, {"kept", t->kept}, {"removed", t->removed}});
        } else if (const auto* w = std::get_if<cvd::WeightSubtractionStep>(&step)) {
            json weights = json::object();
            for (const auto& [v, c] : w->weighting.weights)
                weights[std::to_string(v)] = cvd::to_string(c);
            const char* prov = w->weighting.kind == cvd::WeightingKind::C4
                                   ? "c4"
                                   : (w->weighting.kind == cvd::WeightingKind::K5Distinguishing
                                          ? "k5_distinguishing"
                                          : "second_neighborhood");
            json entry{{"kind", "weight_subtraction"},
                       {"lambda", cvd::to_string(w->lambda)},
                       {"alpha", cvd::to_string(w->weighting.alpha)},
                       {"provenance", prov},
                       {"vertices", w->weighting.subgraph_vertices},
                       {"weights", weights}};
            if (w->weighting.sn) entry["cases"] = w->weighting.sn->component_cases;
            steps.push_back(std::move(entry));
        }
    }
    return steps;
}

// Feasibility and minimality for the P3-subgraph variant solved by p3sub.
bool p3sub_feasible(const cvd::Graph& g, const cvd::HittingSet& x) {
    cvd::Graph rest = g.remove_vertices(x.vertices);
    for (cvd::Vertex v : rest.vertices())
        if (rest.degree(v) >= 2) return false;
    return true;
}

bool p3sub_minimal(const cvd::Graph& g, const cvd::HittingSet& x) {
    for (cvd::Vertex v : x.vertices) {
        std::vector<cvd::Vertex> rest_set;
        for (cvd::Vertex w : x.vertices)
            if (w != v) rest_set.push_back(w);
        cvd::Graph rest = g.remove_vertices(rest_set);
        bool exposes = rest.degree(v) >= 2;
        for (cvd::Vertex b : rest.neighbors(v))
            if (rest.degree(b) >= 2) exposes = true;
        if (!exposes) return false;
    }
    return true;
}

json solution_json(const cvd::WeightedGraph& wg, const cvd::HittingSet& x,
                   const cvd::LocalRatioTrace* trace, bool with_trace, bool subgraph_variant) {
    bool feasible = subgraph_variant ? p3sub_feasible(wg.graph, x)
                                     : cvd::verify_feasible(wg.graph, x);
    bool minimal = feasible && (subgraph_variant ? p3sub_minimal(wg.graph, x)
                                                 : cvd::verify_minimal(wg.graph, x));
    json j{{"vertices", x.vertices},
           {"cost", cvd::to_string(wg.cost_of(x.vertices))},
           {"feasible", feasible},
           {"minimal", minimal}};
    j["trace"] = with_trace && trace ? trace_json(*trace) : json::array();
    return j;
}

int cmd_solve(const std::string& input, const std::string& algo, const std::string& output,
              bool with_trace, bool diamond_free) {
    cvd::WeightedGraph wg = cvd::load_instance(input);
    cvd::HittingSet x;
    cvd::LocalRatioTrace trace;
    bool have_trace = false;
    if (algo == "lr94") {
        cvd::SolveOutcome out =
            cvd::cluster_vd_apx(wg, cvd::SolveOptions{.diamond_free_mode = diamond_free});
        x = std::move(out.hitting_set);
        trace = std::move(out.trace);
        have_trace = true;
    } else if (algo == "p3sub") {
        x = cvd::hitting_p3_subgraphs_apx(wg);
    } else if (algo == "naive3") {
        x = cvd::naive_3apx(wg);
    } else {  // exact
        x = cvd::exact_cluster_vd(wg).set;
    }

    // p3sub solves the subgraph variant; feasibility and minimality are
    // checked against that problem instead of the induced one.
    json j = solution_json(wg, x, have_trace ? &trace : nullptr, with_trace, algo == "p3sub");
    if (output == "json") {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "algorithm: " << algo << "\ncost: " << j["cost"].get<std::string>()
                  << "\nvertices:";
        for (cvd::Vertex v : x.vertices) std::cout << ' ' << v;
        std::cout << "\nfeasible: " << (j["feasible"].get<bool>() ? "yes" : "no")
                  << "\nminimal: " << (j["minimal"].get<bool>() ? "yes" : "no") << "\n";
        if (have_trace)
            std::cout << "steps: " << trace.steps.size() << " (zero=" << trace.zero_steps()
                      << " twin=" << trace.twin_steps() << " weight=" << trace.weight_steps()
                      << ")\n";
    }
    return j["feasible"].get<bool>() ? 0 : 2;
}

int cmd_verify(const std::string& input, const std::string& solution_path) {
    cvd::WeightedGraph wg = cvd::load_instance(input);
    std::ifstream in(solution_path);
    if (!in) throw cvd::Error("cannot open solution file: " + solution_path);
    json j = json::parse(in, nullptr, true, true);
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw cvd::Error("solution file has no \"vertices\" array");
    cvd::HittingSet x;
    for (const auto& v : j["vertices"]) x.vertices.push_back(v.get<int>());
    std::sort(x.vertices.begin(), x.vertices.end());

    bool feasible = cvd::verify_feasible(wg.graph, x);
    bool minimal = feasible && cvd::verify_minimal(wg.graph, x);
    std::cout << "cost: " << cvd::to_string(wg.cost_of(x.vertices)) << "\nfeasible: "
              << (feasible ? "yes" : "no") << "\nminimal: " << (minimal ? "yes" : "no") << "\n";
    return feasible && minimal ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cluster vertex deletion toolkit"};
    app.require_subcommand(1);

    std::string input, output = "text", algo = "lr94";
    bool with_trace = false, diamond_free = false;
    auto* solve = app.add_subcommand("solve", "Solve an instance file");
    solve->add_option("--input", input, "instance file")->required();
    solve->add_option("--algo", algo, "lr94 | p3sub | naive3 | exact")
        ->check(CLI::IsMember({"lr94", "p3sub", "naive3", "exact"}));
    solve->add_option("--output", output, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    solve->add_flag("--trace", with_trace, "include the local-ratio trace (lr94)");
    solve->add_flag("--diamond-free", diamond_free,
                    "diamond-free mode: skip the K5 rule (2-approximation on diamond-free inputs)");

    std::string model, gen_out;
    std::uint64_t seed = 0;
    bool seed_given = false;
    long long wmin = 1, wmax = 1;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("--model", model, "e.g. gnp(12,0.3), planted-clusters(9,3,0.1), vc-pendant(gnp(6,0.5)), bull-neighborhood, k5-gadget(2)")
        ->required();
    gen->add_option("--seed", seed, "RNG seed (default 0, or CVD_SEED)")
        ->each([&](const std::string&) { seed_given = true; });
    gen->add_option("--out", gen_out, "output instance file")->required();
    gen->add_option("--wmin", wmin, "least vertex weight (default 1)");
    gen->add_option("--wmax", wmax, "greatest vertex weight (default 1)");

    std::string corpus, report, algos_arg = "lr94";
    int oracle_max_n = 26;
    auto* bench = app.add_subcommand("bench", "Run algorithms over a corpus directory");
    bench->add_option("--corpus", corpus, "directory of instance files")->required();
    bench->add_option("--algos", algos_arg, "comma-separated: lr94,p3sub,naive3,exact");
    bench->add_option("--oracle-max-n", oracle_max_n, "oracle budget; 0 disables ratios");
    bench->add_option("--report", report, "report base path; writes <base>.csv and <base>.json")
        ->required();

    std::string verify_input, verify_solution;
    auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
    verify->add_option("--input", verify_input, "instance file")->required();
    verify->add_option("--solution", verify_solution, "solution JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*solve) return cmd_solve(input, algo, output, with_trace, diamond_free);
        if (*gen) {
            if (!seed_given)
                if (const char* env = std::getenv("CVD_SEED")) seed = std::strtoull(env, nullptr, 10);
            cvd::WeightedGraph wg = cvd::generate(model, seed, wmin, wmax);
            cvd::save_instance(wg, gen_out);
            std::cout << "wrote " << gen_out << " (n=" << wg.graph.vertex_count()
                      << ", m=" << wg.graph.edge_count() << ")\n";
            return 0;
        }
        if (*bench) {
            std::vector<std::string> algos;
            std::string cur;
            for (char c : algos_arg + ",") {
                if (c == ',') {
                    if (!cur.empty()) algos.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            cvd::OracleBudget budget;
            budget.max_vertices = oracle_max_n;
            cvd::BenchReport rep = cvd::run_bench(corpus, algos, budget);
            std::ofstream csv(report + ".csv"), js(report + ".json");
            if (!csv || !js) throw cvd::Error("cannot write report files at base: " + report);
            csv << cvd::bench_csv(rep);
            js << cvd::bench_json(rep);
            std::cout << "wrote " << report << ".csv and " << report << ".json ("
                      << rep.rows.size() << " rows)\n";
            return 0;
        }
        if (*verify) return cmd_verify(verify_input, verify_solution);
    } catch (const cvd::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
