#pragma once

#include <string>
#include <vector>

#include "islr/linalg.hpp"

namespace islr {

// Rectangular numeric CSV, '.' decimal separator, ',' delimiter; one
// optional header line detected by a non-numeric field in the first row.
// Values are written with 17 significant digits, so write -> read is exact
// for doubles.
Mat read_matrix_csv(const std::string& path);
void write_matrix_csv(const Mat& M, const std::string& path);

struct EdgeList {
  struct Edge {
    std::string a, b;
    double weight;
  };
  std::vector<Edge> edges;                 // in file order, post-filtering
  std::vector<std::string> node_names;     // first-appearance order
  std::vector<std::string> warnings;       // e.g. weights outside [0,2]
};

struct GraphData {
  EdgeList edges;
  Mat adjacency;  // symmetric; duplicate edges keep the last weight
};

// Tab-separated "node_a\tnode_b\tweight"; '#' lines and blank lines are
// skipped. Weights outside [0,2] are recorded as warnings, not errors.
GraphData read_edge_list(const std::string& path);

struct WavData {
  std::vector<double> samples;  // in [-1, 1)
  int sample_rate = 0;
};

// Mono 16-bit PCM little-endian RIFF only. Read divides by 32768; write
// clamps and rounds to the nearest representable sample.
WavData read_wav(const std::string& path);
void write_wav(const std::vector<double>& samples, int sample_rate, const std::string& path);

}  // namespace islr
