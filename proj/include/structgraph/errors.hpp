#pragma once

#include <stdexcept>
#include <string>

namespace structgraph {

// Dimension / size contract violations (matmul mismatch, degenerate grids, ...).
struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed file contents (bad magic, truncated payload, bad manifest line).
struct FormatError : std::runtime_error {
  explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failures (missing file, unwritable directory).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric contract violations (non-finite gradients, non-reproducible loss,
// undefined statistics).
struct NumericError : std::runtime_error {
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

// Failed lookups (edge not present in a graph).
struct LookupError : std::runtime_error {
  explicit LookupError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace structgraph
