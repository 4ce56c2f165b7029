#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace szabo {

/// Rank-4 coefficient array, row-major in slot order (x,y,z,w).
class Tensor4 {
 public:
  Tensor4() = default;
  explicit Tensor4(int m) : m_(m), data_(Eigen::VectorXd::Zero(static_cast<long>(m) * m * m * m)) {}
  Tensor4(int m, Eigen::VectorXd flat) : m_(m), data_(std::move(flat)) {
    if (data_.size() != static_cast<long>(m) * m * m * m)
      throw std::invalid_argument("Tensor4: flat size is not m^4");
  }

  int dim() const { return m_; }
  long size() const { return data_.size(); }
  double& operator()(int i, int j, int k, int l) { return data_(idx(i, j, k, l)); }
  double operator()(int i, int j, int k, int l) const { return data_(idx(i, j, k, l)); }
  Eigen::VectorXd& flat() { return data_; }
  const Eigen::VectorXd& flat() const { return data_; }
  long idx(int i, int j, int k, int l) const {
    return ((static_cast<long>(i) * m_ + j) * m_ + k) * m_ + l;
  }

 private:
  int m_{0};
  Eigen::VectorXd data_;
};

/// Rank-5 coefficient array, row-major in slot order (x,y,z,w;v).
class Tensor5 {
 public:
  Tensor5() = default;
  explicit Tensor5(int m)
      : m_(m), data_(Eigen::VectorXd::Zero(static_cast<long>(m) * m * m * m * m)) {}
  Tensor5(int m, Eigen::VectorXd flat) : m_(m), data_(std::move(flat)) {
    if (data_.size() != static_cast<long>(m) * m * m * m * m)
      throw std::invalid_argument("Tensor5: flat size is not m^5");
  }

  int dim() const { return m_; }
  long size() const { return data_.size(); }
  double& operator()(int i, int j, int k, int l, int n) { return data_(idx(i, j, k, l, n)); }
  double operator()(int i, int j, int k, int l, int n) const { return data_(idx(i, j, k, l, n)); }
  Eigen::VectorXd& flat() { return data_; }
  const Eigen::VectorXd& flat() const { return data_; }
  long idx(int i, int j, int k, int l, int n) const {
    return (((static_cast<long>(i) * m_ + j) * m_ + k) * m_ + l) * m_ + n;
  }

 private:
  int m_{0};
  Eigen::VectorXd data_;
};

}  // namespace szabo
