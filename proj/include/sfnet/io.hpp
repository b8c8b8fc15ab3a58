#pragma once

#include <iosfwd>
#include <string>

#include "sfnet/degree_model.hpp"
#include "sfnet/experiments.hpp"
#include "sfnet/graph.hpp"
#include "sfnet/graphical.hpp"
#include "sfnet/metrics.hpp"

namespace sfnet {

// Degree-sequence files: one decimal degree per line, newline-terminated.
DegreeSequence read_degree_sequence(std::istream& in);
void write_degree_sequence(std::ostream& out, const DegreeSequence& seq);

// Edge-list files: header "# n=<N>", then "u v" per line with u < v, lines
// sorted. Malformed input (loops, duplicates, out-of-range, garbage) throws.
SimpleGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const SimpleGraph& g);

// Single-line JSON objects; floats at 6 significant digits.
std::string verdict_json(const GraphicVerdict& v);
std::string metrics_json(const GraphMetrics& m);

// Scaling report serialization: CSV table of per-size stats, and a JSON
// object with the fitted slopes and reference exponents.
std::string scaling_csv(const ScalingReport& report);
std::string scaling_json(const ScalingReport& report);

double round6(double x);

} // namespace sfnet
