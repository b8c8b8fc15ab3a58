#include "sfnet/io.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sfnet {

namespace {

std::uint64_t parse_u64(const std::string& token, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error(std::string("malformed ") + what + ": '" + token + "'");
    return std::stoull(token);
}

std::string fmt6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return buf;
}

} // namespace

double round6(double x) {
    if (x == 0.0 || !std::isfinite(x)) return x;
    const double scale =
        std::pow(10.0, 5.0 - std::floor(std::log10(std::fabs(x))));
    return std::round(x * scale) / scale;
}

DegreeSequence read_degree_sequence(std::istream& in) {
    DegreeSequence seq;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        seq.push_back(parse_u64(line, "degree"));
    }
    return seq;
}

void write_degree_sequence(std::ostream& out, const DegreeSequence& seq) {
    for (auto d : seq) out << d << '\n';
}

SimpleGraph read_edge_list(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line.rfind("# n=", 0) != 0)
        throw std::runtime_error("malformed edge list: missing '# n=<N>' header");
    const std::uint64_t n = parse_u64(line.substr(4), "vertex count");
    if (n > std::uint64_t(~VertexId(0)))
        throw std::runtime_error("malformed edge list: vertex count too large");

    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a >> b) || (ls >> extra))
            throw std::runtime_error("malformed edge list line: '" + line + "'");
        const std::uint64_t u = parse_u64(a, "vertex"), v = parse_u64(b, "vertex");
        if (u >= n || v >= n)
            throw std::runtime_error("malformed edge list: vertex out of range");
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    try {
        return SimpleGraph(static_cast<VertexId>(n), std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("malformed edge list: ") + e.what());
    }
}

void write_edge_list(std::ostream& out, const SimpleGraph& g) {
    out << "# n=" << g.num_vertices() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

std::string verdict_json(const GraphicVerdict& v) {
    nlohmann::ordered_json j;
    j["graphic"] = v.graphic;
    if (v.failing_k)
        j["failing_k"] = *v.failing_k;
    else
        j["failing_k"] = nullptr;
    j["odd_sum"] = v.odd_sum;
    return j.dump();
}

std::string metrics_json(const GraphMetrics& m) {
    nlohmann::ordered_json j;
    j["edges"] = m.edges;
    j["wedges"] = m.wedges;
    j["triangles"] = m.triangles;
    j["c1"] = round6(m.c1);
    j["c2"] = round6(m.c2);
    j["max_degree"] = m.max_degree;
    return j.dump();
}

std::string scaling_csv(const ScalingReport& report) {
    std::ostringstream out;
    out << "n,replicas_used,mean_edges,sd_edges,mean_wedges,sd_wedges,"
           "mean_triangles,sd_triangles,mean_c1,sd_c1,mean_max_degree,"
           "mean_h_index,graphic_fraction\n";
    for (const auto& s : report.per_n) {
        out << s.n << ',' << s.replicas_used << ',' << fmt6(s.mean_edges) << ','
            << fmt6(s.sd_edges) << ',' << fmt6(s.mean_wedges) << ','
            << fmt6(s.sd_wedges) << ',' << fmt6(s.mean_triangles) << ','
            << fmt6(s.sd_triangles) << ',' << fmt6(s.mean_c1) << ','
            << fmt6(s.sd_c1) << ',' << fmt6(s.mean_max_degree) << ','
            << fmt6(s.mean_h_index) << ',' << fmt6(s.graphic_fraction) << '\n';
    }
    return out.str();
}

std::string scaling_json(const ScalingReport& report) {
    nlohmann::ordered_json j;
    j["gamma"] = round6(report.gamma);
    j["d_min"] = report.d_min;
    j["master_seed"] = report.master_seed;
    j["replicas"] = report.replicas;
    auto fit = [](const SlopeFit& f) {
        nlohmann::ordered_json o;
        o["slope"] = round6(f.slope);
        o["std_error"] = round6(f.std_error);
        return o;
    };
    j["fitted"]["wedges"] = fit(report.wedges);
    j["fitted"]["triangles"] = fit(report.triangles);
    j["fitted"]["max_degree"] = fit(report.max_degree);
    j["fitted"]["h_index"] = fit(report.h_index);
    j["fitted"]["c1"] = fit(report.c1);
    j["theory"]["wedges"] = round6(report.theory.wedges);
    j["theory"]["triangles"] = round6(report.theory.triangles);
    j["theory"]["max_degree"] = round6(report.theory.max_degree);
    j["theory"]["c1_bound"] = round6(report.theory.c1_bound);
    nlohmann::ordered_json medians = nlohmann::ordered_json::array();
    for (const auto& s : report.per_n) {
        nlohmann::ordered_json row;
        row["n"] = s.n;
        row["median_max_degree"] = round6(s.median_max_degree);
        medians.push_back(row);
    }
    j["median_max_degree_per_n"] = medians;
    return j.dump(2) + "\n";
}

} // namespace sfnet
