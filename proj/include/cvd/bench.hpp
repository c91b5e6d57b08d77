#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvd/exact_oracle.hpp"
#include "cvd/graph.hpp"

namespace cvd {

struct BenchRow {
    std::string instance;  // file stem
    int n = 0;
    int m = 0;
    std::string algorithm;
    std::string status = "ok";        // error text otherwise
    std::optional<Rational> cost;
    std::optional<Rational> oracle_cost;  // absent when the budget skipped it
    std::optional<Rational> ratio;        // present iff oracle ran
    long long steps_total = 0;
    long long steps_zero = 0;
    long long steps_twin = 0;
    long long steps_weight = 0;
    double wall_ms = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;  // sorted by (instance, algorithm order)
};

/// Run every algorithm over every instance file in the corpus directory
/// (sorted by file name). Algorithms: lr94, p3sub, naive3, exact. Unreadable
/// or malformed files produce an error row and the run continues; instances
/// beyond the oracle budget get a blank ratio.
BenchReport run_bench(const std::string& corpus_dir, const std::vector<std::string>& algorithms,
                      const OracleBudget& budget);

std::string bench_csv(const BenchReport& report);
std::string bench_json(const BenchReport& report);

}  // namespace cvd
