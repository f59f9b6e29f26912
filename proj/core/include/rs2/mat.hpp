#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rs2 {

// Dense row-major matrix of doubles. Also used as a batch container
// (one sample per row).
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  std::span<double> row(int r) { return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }
  std::span<const double> row(int r) const { return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }

  void resize(int r, int c) {
    rows = r;
    cols = c;
    data.assign(static_cast<std::size_t>(r) * c, 0.0);
  }
  void fill(double v) { data.assign(data.size(), v); }
};

// y := A x
void matvec(const Mat& a, std::span<const double> x, std::span<double> y);

// out := A B
void matmul(const Mat& a, const Mat& b, Mat& out);

// Numerically stable softmax (shifts by the max before exponentiating).
std::vector<double> softmax(std::span<const double> v);

// Index of the largest element; ties go to the lowest index.
int argmax(std::span<const double> v);

double dot(std::span<const double> a, std::span<const double> b);
double squared_distance(std::span<const double> a, std::span<const double> b);

}  // namespace rs2
