#pragma once

#include <stdexcept>
#include <string>

namespace islr {

// a*lambda >= 1: the scalar prox subproblem loses strict convexity.
struct InvalidPenalty : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// SVD routine reported non-convergence.
struct DecompositionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Solver configuration outside the admissible region (triangle or mu).
struct ConfigRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Iterates or objective became NaN/Inf.
struct NonFinite : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ZeroReference : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateLambda : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadRank : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadParams : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& path, long row, long col, const std::string& what)
      : std::runtime_error(path + ":" + std::to_string(row) + ":" + std::to_string(col) +
                           ": " + what),
        row(row),
        col(col) {}
  long row;  // 1-based
  long col;  // 1-based
};

struct RaggedRows : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File could not be opened or written.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnsupportedFormat : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace islr
