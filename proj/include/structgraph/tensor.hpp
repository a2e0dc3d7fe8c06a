#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace structgraph {

// Dense row-major array of doubles. The single numeric carrier for feature
// maps, node embeddings and every weight matrix in the model.
struct Tensor {
  std::vector<int> dims;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> d);  // zero-filled

  static Tensor zeros(std::vector<int> d) { return Tensor(std::move(d)); }
  static Tensor full(std::vector<int> d, double v);
  static Tensor from(std::vector<int> d, std::vector<double> values);

  int rank() const { return static_cast<int>(dims.size()); }
  int dim(int i) const { return dims[static_cast<std::size_t>(i)]; }
  int numel() const { return static_cast<int>(data.size()); }

  double& at(int i) { return data[static_cast<std::size_t>(i)]; }
  double at(int i) const { return data[static_cast<std::size_t>(i)]; }
  double& at(int i, int j) { return data[static_cast<std::size_t>(i) * dims[1] + j]; }
  double at(int i, int j) const { return data[static_cast<std::size_t>(i) * dims[1] + j]; }
  double& at(int i, int j, int k) {
    return data[(static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k];
  }
  double at(int i, int j, int k) const {
    return data[(static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k];
  }
  double& at(int i, int j, int k, int l) {
    return data[((static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k) * dims[3] + l];
  }
  double at(int i, int j, int k, int l) const {
    return data[((static_cast<std::size_t>(i) * dims[1] + j) * dims[2] + k) * dims[3] + l];
  }

  bool same_dims(const Tensor& other) const { return dims == other.dims; }
  bool all_finite() const;
  void fill(double v);
};

std::string dims_str(const std::vector<int>& dims);

// A[m x k] * B[k x n]; accumulation over k in ascending order per output
// cell, so results are bit-identical to the naive triple loop.
Tensor matmul(const Tensor& a, const Tensor& b);

// A[n x k] * B^T where B is [m x k]; returns [n x m].
Tensor matmul_bt(const Tensor& a, const Tensor& b);

// A^T * B where A is [n x k], B is [n x m]; returns [k x m], accumulating
// over rows n in ascending order.
Tensor matmul_at(const Tensor& a, const Tensor& b);

}  // namespace structgraph
