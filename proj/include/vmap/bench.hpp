#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "vmap/anneal.hpp"
#include "vmap/graph.hpp"

namespace vmap {

struct Summary {
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation, 0 for a single value
    double best = 0.0;
};

Summary summarize(const std::vector<double>& values, double best);

struct CsvRow {
    std::string dataset;
    std::string algorithm;
    std::string metric;
    Summary summary;
    double seconds = 0.0;
};

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows);

struct RatioBench {
    std::size_t trials = 0;
    std::size_t n = 0;
    double r = 1.0;
    std::vector<double> dar;  // per-trial loss
    std::vector<double> sew;
    double dar_seconds = 0.0;
    double sew_seconds = 0.0;

    Summary dar_summary() const;
    Summary sew_summary() const;
    std::vector<CsvRow> rows() const;
};

/// DAR and SEW on identical lognormal inputs over an r x 1 display.
/// Trial k draws its input from derive_seed(seed, k).
RatioBench bench_aspect_ratio(std::size_t trials, std::size_t n, double r, std::uint64_t seed = 1,
                              std::size_t workers = 0);

struct OptimizeBench {
    std::string dataset;
    std::vector<MetricsReport> runs;
    std::vector<std::uint64_t> seeds;
    std::size_t best = 0;  // run with the lowest areal + topological error
    double seconds = 0.0;

    std::vector<CsvRow> rows() const;
};

/// `repeats` independent chains with seeds derive_seed(params.seed, k).
OptimizeBench bench_optimize(const std::string& name, const Graph& graph, const AnnealParams& params,
                             std::size_t repeats);

}  // namespace vmap
