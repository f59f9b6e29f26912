#include "rs2/mat.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rs2 {

namespace {

using EigenMap = Eigen::Map<const Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
using EigenMapMut = Eigen::Map<Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

}  // namespace

void matvec(const Mat& a, std::span<const double> x, std::span<double> y) {
  if (static_cast<int>(x.size()) != a.cols || static_cast<int>(y.size()) != a.rows) {
    throw std::invalid_argument("matvec: shape mismatch");
  }
  EigenMap am(a.data.data(), a.rows, a.cols);
  Eigen::Map<const Eigen::VectorXd> xm(x.data(), x.size());
  Eigen::Map<Eigen::VectorXd> ym(y.data(), y.size());
  ym.noalias() = am * xm;
}

void matmul(const Mat& a, const Mat& b, Mat& out) {
  if (a.cols != b.rows) {
    throw std::invalid_argument("matmul: shape mismatch");
  }
  if (out.rows != a.rows || out.cols != b.cols) {
    out.resize(a.rows, b.cols);
  }
  EigenMap am(a.data.data(), a.rows, a.cols);
  EigenMap bm(b.data.data(), b.rows, b.cols);
  EigenMapMut om(out.data.data(), out.rows, out.cols);
  om.noalias() = am * bm;
}

std::vector<double> softmax(std::span<const double> v) {
  if (v.empty()) {
    throw std::invalid_argument("softmax: empty input");
  }
  const double hi = *std::max_element(v.begin(), v.end());
  std::vector<double> out(v.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::exp(v[i] - hi);
    sum += out[i];
  }
  for (double& o : out) o /= sum;
  return out;
}

int argmax(std::span<const double> v) {
  if (v.empty()) {
    throw std::invalid_argument("argmax: empty input");
  }
  int best = 0;
  for (int i = 1; i < static_cast<int>(v.size()); ++i) {
    if (v[i] > v[best]) best = i;
  }
  return best;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("dot: size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("squared_distance: size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace rs2
