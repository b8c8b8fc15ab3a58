#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "sfnet/builder.hpp"
#include "sfnet/degree_model.hpp"
#include "sfnet/experiments.hpp"
#include "sfnet/graphical.hpp"
#include "sfnet/io.hpp"
#include "sfnet/metrics.hpp"
#include "sfnet/rng.hpp"

namespace {

using namespace sfnet;

// "-" means stdin/stdout
std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

std::vector<std::uint64_t> parse_grid(const std::string& csv) {
    std::vector<std::uint64_t> grid;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(std::stoull(item));
    return grid;
}

int cmd_sample(double gamma, std::uint64_t dmin, std::uint64_t n,
               std::uint64_t seed, const std::string& out) {
    const DegreeDistribution dist(gamma, dmin);
    auto rng = replica_stream(seed, n, 0);
    const auto seq = sample_sequence(dist, n, rng);
    std::ostringstream buf;
    write_degree_sequence(buf, seq);
    spill(out, buf.str());
    return 0;
}

int cmd_check(const std::string& in) {
    std::istringstream buf(slurp(in));
    const auto seq = read_degree_sequence(buf);
    const auto verdict = erdos_gallai_check(seq);
    std::cout << verdict_json(verdict) << '\n';
    return verdict.graphic ? 0 : 1;
}

int cmd_build(const std::string& in, const std::string& out) {
    std::istringstream buf(slurp(in));
    const auto seq = read_degree_sequence(buf);
    const auto graph = havel_hakimi(seq);
    if (!graph) {
        std::cerr << "degree sequence is not graphic\n";
        return 1;
    }
    std::ostringstream ebuf;
    write_edge_list(ebuf, *graph);
    spill(out, ebuf.str());
    return 0;
}

int cmd_metrics(const std::string& in) {
    std::istringstream buf(slurp(in));
    const auto graph = read_edge_list(buf);
    std::cout << metrics_json(compute_metrics(graph)) << '\n';
    return 0;
}

int cmd_scaling(double gamma, std::uint64_t dmin, const std::string& ngrid,
                std::uint32_t replicas, std::uint64_t seed, unsigned threads,
                const std::string& out, std::string json_out) {
    ScalingConfig config;
    config.gamma = gamma;
    config.d_min = dmin;
    config.n_grid = parse_grid(ngrid);
    config.replicas = replicas;
    config.master_seed = seed;
    config.threads = threads;
    const auto report = run_scaling(config);
    spill(out, scaling_csv(report));
    if (json_out.empty()) json_out = out == "-" ? "-" : out + ".json";
    spill(json_out, scaling_json(report));
    return 0;
}

int cmd_graphic_rate(double gamma, std::uint64_t dmin, const std::string& ngrid,
                     std::uint32_t replicas, std::uint64_t seed,
                     const std::string& out) {
    const DegreeDistribution dist(gamma, dmin);
    std::ostringstream buf;
    buf << "n,fraction\n";
    char line[64];
    for (const auto n : parse_grid(ngrid)) {
        std::snprintf(line, sizeof(line), "%llu,%.6g\n",
                      static_cast<unsigned long long>(n),
                      graphic_fraction(dist, n, replicas, seed));
        buf << line;
    }
    spill(out, buf.str());
    return 0;
}

int cmd_simplicity(double gamma, std::uint64_t dmin, const std::string& ngrid,
                   std::uint32_t replicas, std::uint64_t seed,
                   const std::string& out) {
    const DegreeDistribution dist(gamma, dmin);
    const auto grid = parse_grid(ngrid);
    const auto fractions = simplicity_fraction(dist, grid, replicas, seed);
    std::ostringstream buf;
    buf << "n,fraction\n";
    char line[64];
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::snprintf(line, sizeof(line), "%llu,%.6g\n",
                      static_cast<unsigned long long>(grid[i]), fractions[i]);
        buf << line;
    }
    spill(out, buf.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"scale-free degree sequences, Havel-Hakimi realization, "
                 "clustering metrics and scaling experiments"};
    app.require_subcommand(1);

    double gamma = 1.5;
    std::uint64_t dmin = 1, n = 1000, seed = 1;
    std::uint32_t replicas = 20;
    unsigned threads = 1;
    std::string input = "-", output = "-", json_out, ngrid = "1000,3162,10000";

    auto* sample = app.add_subcommand("sample", "sample a degree sequence");
    sample->add_option("--gamma", gamma, "tail exponent (> 1)");
    sample->add_option("--dmin", dmin, "minimum degree");
    sample->add_option("--n", n, "sequence length");
    sample->add_option("--seed", seed, "RNG seed");
    sample->add_option("-o,--output", output, "output path ('-' for stdout)");

    auto* check = app.add_subcommand("check", "Erdos-Gallai graphicality test");
    check->add_option("input", input, "degree-sequence file ('-' for stdin)");

    auto* build = app.add_subcommand("build", "Havel-Hakimi realization");
    build->add_option("input", input, "degree-sequence file ('-' for stdin)");
    build->add_option("-o,--output", output, "edge-list output path");

    auto* metrics = app.add_subcommand("metrics", "triangle/wedge/clustering metrics");
    metrics->add_option("input", input, "edge-list file ('-' for stdin)");

    auto* scaling = app.add_subcommand("scaling", "scaling experiment over an n grid");
    scaling->add_option("--gamma", gamma, "tail exponent (> 1)");
    scaling->add_option("--dmin", dmin, "minimum degree");
    scaling->add_option("--ngrid", ngrid, "comma-separated sizes");
    scaling->add_option("--replicas", replicas, "replicas per size");
    scaling->add_option("--seed", seed, "master seed");
    scaling->add_option("--threads", threads, "worker threads");
    scaling->add_option("-o,--output", output, "CSV output path");
    scaling->add_option("--json", json_out, "slope JSON path (default: <output>.json)");

    auto* rate = app.add_subcommand("graphic-rate", "fraction of graphic draws per n");
    rate->add_option("--gamma", gamma, "tail exponent (> 1)");
    rate->add_option("--dmin", dmin, "minimum degree");
    rate->add_option("--ngrid", ngrid, "comma-separated sizes");
    rate->add_option("--replicas", replicas, "replicas per size");
    rate->add_option("--seed", seed, "master seed");
    rate->add_option("-o,--output", output, "CSV output path");

    auto* simplicity =
        app.add_subcommand("simplicity", "configuration-model simple fraction per n");
    simplicity->add_option("--gamma", gamma, "tail exponent (> 1)");
    simplicity->add_option("--dmin", dmin, "minimum degree");
    simplicity->add_option("--ngrid", ngrid, "comma-separated sizes");
    simplicity->add_option("--replicas", replicas, "replicas per size");
    simplicity->add_option("--seed", seed, "master seed");
    simplicity->add_option("-o,--output", output, "CSV output path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (sample->parsed()) return cmd_sample(gamma, dmin, n, seed, output);
        if (check->parsed()) return cmd_check(input);
        if (build->parsed()) return cmd_build(input, output);
        if (metrics->parsed()) return cmd_metrics(input);
        if (scaling->parsed())
            return cmd_scaling(gamma, dmin, ngrid, replicas, seed, threads, output,
                               json_out);
        if (rate->parsed())
            return cmd_graphic_rate(gamma, dmin, ngrid, replicas, seed, output);
        if (simplicity->parsed())
            return cmd_simplicity(gamma, dmin, ngrid, replicas, seed, output);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
