#include "sfnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "sfnet/builder.hpp"
#include "sfnet/graphical.hpp"
#include "sfnet/metrics.hpp"

namespace sfnet {

SlopeFit fit_loglog_slope(const std::vector<std::pair<double, double>>& points) {
    const std::size_t m = points.size();
    if (m < 2)
        throw std::invalid_argument("fit_loglog_slope: need at least 2 points");
    for (const auto& [x, y] : points)
        if (!(x > 0.0) || !(y > 0.0))
            throw std::invalid_argument("fit_loglog_slope: values must be positive");

    double sx = 0, sy = 0;
    for (const auto& [x, y] : points) {
        sx += std::log(x);
        sy += std::log(y);
    }
    const double mx = sx / m, my = sy / m;
    double sxx = 0, sxy = 0;
    for (const auto& [x, y] : points) {
        const double dx = std::log(x) - mx;
        sxx += dx * dx;
        sxy += dx * (std::log(y) - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("fit_loglog_slope: degenerate abscissae");

    SlopeFit fit;
    fit.slope = sxy / sxx;
    if (m > 2) {
        const double intercept = my - fit.slope * mx;
        double ssr = 0;
        for (const auto& [x, y] : points) {
            const double r = std::log(y) - intercept - fit.slope * std::log(x);
            ssr += r * r;
        }
        fit.std_error = std::sqrt(ssr / (m - 2) / sxx);
    }
    return fit;
}

namespace {

struct ReplicaResult {
    bool graphic = false;
    double edges = 0, wedges = 0, triangles = 0, c1 = 0;
    double max_degree = 0, h_index = 0;
};

ReplicaResult run_replica(const DegreeDistribution& dist, std::uint64_t n,
                          std::uint64_t master_seed, std::uint32_t replica) {
    auto rng = replica_stream(master_seed, n, replica);
    const auto seq = sample_sequence(dist, n, rng);

    ReplicaResult r;
    r.max_degree = static_cast<double>(*std::max_element(seq.begin(), seq.end()));
    r.h_index = static_cast<double>(degree_h_index(seq));
    if (!erdos_gallai_check(seq).graphic) return r;

    const auto graph = havel_hakimi(seq);
    const auto m = compute_metrics(*graph);
    r.graphic = true;
    r.edges = static_cast<double>(m.edges);
    r.wedges = static_cast<double>(m.wedges);
    r.triangles = static_cast<double>(m.triangles);
    r.c1 = m.c1;
    return r;
}

struct MeanSd {
    double mean = 0, sd = 0;
};

MeanSd mean_sd(const std::vector<double>& xs) {
    MeanSd out;
    if (xs.empty()) return out;
    double s = 0;
    for (double x : xs) s += x;
    out.mean = s / xs.size();
    if (xs.size() > 1) {
        double ss = 0;
        for (double x : xs) ss += (x - out.mean) * (x - out.mean);
        out.sd = std::sqrt(ss / (xs.size() - 1));
    }
    return out;
}

double median(std::vector<double> xs) {
    if (xs.empty()) return 0;
    std::sort(xs.begin(), xs.end());
    const std::size_t m = xs.size() / 2;
    return xs.size() % 2 ? xs[m] : 0.5 * (xs[m - 1] + xs[m]);
}

void validate(const ScalingConfig& c) {
    if (c.n_grid.size() < 3)
        throw std::invalid_argument("ScalingConfig: n_grid needs >= 3 sizes");
    for (std::size_t i = 1; i < c.n_grid.size(); ++i)
        if (c.n_grid[i] <= c.n_grid[i - 1])
            throw std::invalid_argument("ScalingConfig: n_grid must be strictly increasing");
    if (c.replicas < 1)
        throw std::invalid_argument("ScalingConfig: replicas must be >= 1");
}

} // namespace

ScalingReport run_scaling(const ScalingConfig& config) {
    validate(config);
    const DegreeDistribution dist(config.gamma, config.d_min);

    const std::size_t tasks = config.n_grid.size() * config.replicas;
    std::vector<ReplicaResult> results(tasks);
    auto worker = [&](unsigned worker_id, unsigned workers) {
        for (std::size_t t = worker_id; t < tasks; t += workers) {
            const std::uint64_t n = config.n_grid[t / config.replicas];
            const auto r = static_cast<std::uint32_t>(t % config.replicas);
            results[t] = run_replica(dist, n, config.master_seed, r);
        }
    };
    const unsigned workers = std::max(1u, config.threads);
    if (workers == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker, w, workers);
        for (auto& th : pool) th.join();
    }

    ScalingReport report;
    report.gamma = config.gamma;
    report.d_min = config.d_min;
    report.master_seed = config.master_seed;
    report.replicas = config.replicas;
    report.theory.wedges = config.gamma < 2.0 ? 2.0 / config.gamma : 1.0;
    report.theory.triangles = config.gamma < 2.0 ? 3.0 / (config.gamma + 1.0) : 1.0;
    report.theory.max_degree = 1.0 / config.gamma;
    report.theory.c1_bound =
        -(config.gamma - 2.0) * (config.gamma - 2.0) / (2.0 * config.gamma);

    for (std::size_t i = 0; i < config.n_grid.size(); ++i) {
        std::vector<double> edges, wedges, triangles, c1, maxdeg, hindex;
        for (std::uint32_t r = 0; r < config.replicas; ++r) {
            const auto& res = results[i * config.replicas + r];
            if (!res.graphic) continue;
            edges.push_back(res.edges);
            wedges.push_back(res.wedges);
            triangles.push_back(res.triangles);
            c1.push_back(res.c1);
            maxdeg.push_back(res.max_degree);
            hindex.push_back(res.h_index);
        }
        SizeStats s;
        s.n = config.n_grid[i];
        s.replicas_used = static_cast<std::uint32_t>(edges.size());
        s.graphic_fraction = static_cast<double>(edges.size()) / config.replicas;
        const auto e = mean_sd(edges), w = mean_sd(wedges), t = mean_sd(triangles),
                   c = mean_sd(c1);
        s.mean_edges = e.mean;
        s.sd_edges = e.sd;
        s.mean_wedges = w.mean;
        s.sd_wedges = w.sd;
        s.mean_triangles = t.mean;
        s.sd_triangles = t.sd;
        s.mean_c1 = c.mean;
        s.sd_c1 = c.sd;
        s.mean_max_degree = mean_sd(maxdeg).mean;
        s.median_max_degree = median(maxdeg);
        s.mean_h_index = mean_sd(hindex).mean;
        report.per_n.push_back(s);
    }

    auto fit_field = [&](auto field) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& s : report.per_n) {
            if (s.replicas_used < 2) continue;
            const double v = field(s);
            if (v > 0.0) pts.emplace_back(static_cast<double>(s.n), v);
        }
        return pts.size() >= 2 ? fit_loglog_slope(pts) : SlopeFit{};
    };
    report.wedges = fit_field([](const SizeStats& s) { return s.mean_wedges; });
    report.triangles = fit_field([](const SizeStats& s) { return s.mean_triangles; });
    report.max_degree = fit_field([](const SizeStats& s) { return s.median_max_degree; });
    report.h_index = fit_field([](const SizeStats& s) { return s.mean_h_index; });
    report.c1 = fit_field([](const SizeStats& s) { return s.mean_c1; });
    return report;
}

double graphic_fraction(const DegreeDistribution& dist, std::uint64_t n,
                        std::uint32_t replicas, std::uint64_t seed) {
    std::uint32_t graphic = 0;
    for (std::uint32_t r = 0; r < replicas; ++r) {
        auto rng = replica_stream(seed, n, r);
        if (erdos_gallai_check(sample_sequence(dist, n, rng)).graphic) ++graphic;
    }
    return static_cast<double>(graphic) / replicas;
}

double edge_bound_fraction(const DegreeDistribution& dist, std::uint64_t n,
                           std::uint32_t replicas, std::uint64_t seed) {
    const double mean = mean_degree(dist);
    const double lo = static_cast<double>(n) * mean / 4.0;
    const double hi = 3.0 * static_cast<double>(n) * mean / 4.0;
    std::uint32_t inside = 0;
    for (std::uint32_t r = 0; r < replicas; ++r) {
        auto rng = replica_stream(seed, n, r);
        const auto seq = sample_sequence(dist, n, rng);
        std::uint64_t sum = 0;
        for (auto d : seq) sum += d;
        const double edges = static_cast<double>(sum) / 2.0;
        if (edges >= lo && edges <= hi) ++inside;
    }
    return static_cast<double>(inside) / replicas;
}

std::vector<double> simplicity_fraction(const DegreeDistribution& dist,
                                        const std::vector<std::uint64_t>& n_grid,
                                        std::uint32_t replicas, std::uint64_t seed) {
    std::vector<double> fractions;
    fractions.reserve(n_grid.size());
    for (const auto n : n_grid) {
        std::uint32_t simple = 0;
        for (std::uint32_t r = 0; r < replicas; ++r) {
            auto rng = replica_stream(seed, n, r);
            const auto seq = sample_sequence(dist, n, rng);
            if (configuration_pairing(seq, rng).simple) ++simple;
        }
        fractions.push_back(static_cast<double>(simple) / replicas);
    }
    return fractions;
}

} // namespace sfnet
