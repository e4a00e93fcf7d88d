#include "vmap/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "vmap/datasets.hpp"
#include "vmap/partition.hpp"

namespace vmap {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string format_number(double v) {
    std::ostringstream os;
    os << std::setprecision(10) << v;
    return os.str();
}

}  // namespace

Summary summarize(const std::vector<double>& values, double best) {
    Summary s;
    s.best = best;
    if (values.empty()) return s;
    for (double v : values) s.mean += v;
    s.mean /= static_cast<double>(values.size());
    if (values.size() > 1) {
        double ss = 0.0;
        for (double v : values) ss += (v - s.mean) * (v - s.mean);
        s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
    }
    return s;
}

void write_csv(std::ostream& out, const std::vector<CsvRow>& rows) {
    out << "dataset,algorithm,metric,mean,std,best,seconds\n";
    for (const auto& r : rows)
        out << csv_field(r.dataset) << ',' << csv_field(r.algorithm) << ',' << csv_field(r.metric) << ','
            << format_number(r.summary.mean) << ',' << format_number(r.summary.std) << ','
            << format_number(r.summary.best) << ',' << format_number(r.seconds) << '\n';
}

Summary RatioBench::dar_summary() const { return summarize(dar, *std::min_element(dar.begin(), dar.end())); }
Summary RatioBench::sew_summary() const { return summarize(sew, *std::min_element(sew.begin(), sew.end())); }

std::vector<CsvRow> RatioBench::rows() const {
    std::ostringstream name;
    name << "lognormal-n" << n << "-r" << r;
    return {{name.str(), "DAR", "aspect_ratio_loss", dar_summary(), dar_seconds},
            {name.str(), "SEW", "aspect_ratio_loss", sew_summary(), sew_seconds}};
}

RatioBench bench_aspect_ratio(std::size_t trials, std::size_t n, double r, std::uint64_t seed, std::size_t workers) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (!(r >= 1.0)) throw std::invalid_argument("ratio must be >= 1");
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, trials);

    RatioBench out;
    out.trials = trials;
    out.n = n;
    out.r = r;
    out.dar.resize(trials);
    out.sew.resize(trials);
    const Rect display{0.0, 0.0, r, 1.0};

    struct Timing {
        double dar = 0.0;
        double sew = 0.0;
    };
    std::vector<std::future<Timing>> jobs;
    for (std::size_t w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            Timing t;
            for (std::size_t k = w; k < trials; k += workers) {
                Rng rng(derive_seed(seed, k));
                const auto items = lognormal_points(n, rng);
                auto t0 = Clock::now();
                out.dar[k] = aspect_ratio_loss(dar_partition(display, items, r).leaf_rects(), r);
                t.dar += since(t0);
                t0 = Clock::now();
                out.sew[k] = aspect_ratio_loss(sew_partition(display, items, r).leaf_rects(), r);
                t.sew += since(t0);
            }
            return t;
        }));
    }
    for (auto& job : jobs) {
        const auto t = job.get();
        out.dar_seconds += t.dar;
        out.sew_seconds += t.sew;
    }
    return out;
}

std::vector<CsvRow> OptimizeBench::rows() const {
    std::vector<double> areal, lost, fake, topo, total;
    for (const auto& m : runs) {
        areal.push_back(m.areal_error);
        lost.push_back(static_cast<double>(m.lost_edges));
        fake.push_back(static_cast<double>(m.fake_edges));
        topo.push_back(m.topological_error);
        total.push_back(m.areal_error + m.topological_error);
    }
    const auto& b = runs.at(best);
    return {{dataset, "VMap", "areal_error", summarize(areal, b.areal_error), seconds},
            {dataset, "VMap", "lost_edges", summarize(lost, static_cast<double>(b.lost_edges)), seconds},
            {dataset, "VMap", "fake_edges", summarize(fake, static_cast<double>(b.fake_edges)), seconds},
            {dataset, "VMap", "topological_error", summarize(topo, b.topological_error), seconds},
            {dataset, "VMap", "total_error", summarize(total, b.areal_error + b.topological_error), seconds}};
}

OptimizeBench bench_optimize(const std::string& name, const Graph& graph, const AnnealParams& params,
                             std::size_t repeats) {
    if (repeats < 1) throw std::invalid_argument("repeats must be at least 1");
    OptimizeBench out;
    out.dataset = name;
    for (std::size_t k = 0; k < repeats; ++k) out.seeds.push_back(derive_seed(params.seed, k));
    const auto t0 = Clock::now();
    const auto results = optimize_restarts(graph, params, out.seeds);
    out.seconds = since(t0);
    for (const auto& r : results) out.runs.push_back(r.evaluation.report);
    auto total = [](const MetricsReport& m) { return m.areal_error + m.topological_error; };
    for (std::size_t k = 1; k < out.runs.size(); ++k)
        if (total(out.runs[k]) < total(out.runs[out.best])) out.best = k;
    return out;
}

}  // namespace vmap
