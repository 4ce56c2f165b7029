#include "szabo/curvature.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace szabo {

double SymmetryResidual::worst() const {
  return std::max(std::max(pair_symmetry, antisymmetry),
                  std::max(first_bianchi, second_bianchi));
}

namespace {

// Each symmetry is enforced by an averaging (orthogonal) projection; the
// residual of an identity is the distance to its own projection.

Tensor4 antisym_part4(const Tensor4& T) {
  const int m = T.dim();
  Tensor4 out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out(i, j, k, l) = 0.5 * (T(i, j, k, l) - T(j, i, k, l));
  return out;
}

Tensor4 pair_part4(const Tensor4& T) {
  const int m = T.dim();
  Tensor4 out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out(i, j, k, l) = 0.5 * (T(i, j, k, l) + T(k, l, i, j));
  return out;
}

// Average over the cyclic group on slots (x,y,z); the Bianchi constraint
// is the kernel of this average.
Tensor4 cyclic_avg4(const Tensor4& T) {
  const int m = T.dim();
  Tensor4 out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          out(i, j, k, l) =
              (T(i, j, k, l) + T(j, k, i, l) + T(k, i, j, l)) / 3.0;
  return out;
}

Tensor5 antisym_part5(const Tensor5& T) {
  const int m = T.dim();
  Tensor5 out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n)
            out(i, j, k, l, n) = 0.5 * (T(i, j, k, l, n) - T(j, i, k, l, n));
  return out;
}

Tensor5 pair_part5(const Tensor5& T) {
  const int m = T.dim();
  Tensor5 out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n)
            out(i, j, k, l, n) = 0.5 * (T(i, j, k, l, n) + T(k, l, i, j, n));
  return out;
}

Tensor5 cyclic_avg5_first(const Tensor5& T) {
  const int m = T.dim();
  Tensor5 out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n)
            out(i, j, k, l, n) =
                (T(i, j, k, l, n) + T(j, k, i, l, n) + T(k, i, j, l, n)) / 3.0;
  return out;
}

// Cyclic identity in the slots (z,w;v).
Tensor5 cyclic_avg5_second(const Tensor5& T) {
  const int m = T.dim();
  Tensor5 out(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n)
            out(i, j, k, l, n) =
                (T(i, j, k, l, n) + T(i, j, l, n, k) + T(i, j, n, k, l)) / 3.0;
  return out;
}

double max_abs_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

SymmetryResidual validate_act(const Tensor4& R, double /*tol*/) {
  SymmetryResidual r;
  r.pair_symmetry = max_abs_diff(R.flat(), pair_part4(R).flat());
  r.antisymmetry = max_abs_diff(R.flat(), antisym_part4(R).flat());
  r.first_bianchi = cyclic_avg4(R).flat().cwiseAbs().maxCoeff();
  const double scale = R.flat().cwiseAbs().maxCoeff();
  r.relative = scale > 0.0 ? r.worst() / scale : r.worst();
  return r;
}

SymmetryResidual validate_acdt(const Tensor5& R, double /*tol*/) {
  SymmetryResidual r;
  r.pair_symmetry = max_abs_diff(R.flat(), pair_part5(R).flat());
  r.antisymmetry = max_abs_diff(R.flat(), antisym_part5(R).flat());
  r.first_bianchi = cyclic_avg5_first(R).flat().cwiseAbs().maxCoeff();
  r.second_bianchi = cyclic_avg5_second(R).flat().cwiseAbs().maxCoeff();
  const double scale = R.flat().cwiseAbs().maxCoeff();
  r.relative = scale > 0.0 ? r.worst() / scale : r.worst();
  return r;
}

Tensor4 project_to_act(const Tensor4& T, double tol, int max_iter) {
  Tensor4 cur = T;
  for (int it = 0; it < max_iter; ++it) {
    cur = antisym_part4(cur);
    cur = pair_part4(cur);
    Tensor4 avg = cyclic_avg4(cur);
    cur.flat() -= avg.flat();
    const auto res = validate_act(cur);
    if (res.relative <= tol) return cur;
  }
  throw std::runtime_error("project_to_act: no convergence after max_iter sweeps, residual " +
                           std::to_string(validate_act(cur).relative));
}

Tensor5 project_to_acdt(const Tensor5& T, double tol, int max_iter) {
  Tensor5 cur = T;
  for (int it = 0; it < max_iter; ++it) {
    cur = antisym_part5(cur);
    cur = pair_part5(cur);
    Tensor5 avg = cyclic_avg5_first(cur);
    cur.flat() -= avg.flat();
    avg = cyclic_avg5_second(cur);
    cur.flat() -= avg.flat();
    const auto res = validate_acdt(cur);
    if (res.relative <= tol) return cur;
  }
  throw std::runtime_error("project_to_acdt: no convergence after max_iter sweeps, residual " +
                           std::to_string(validate_acdt(cur).relative));
}

Tensor5 random_acdt(int m, std::uint64_t seed, double scale) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Tensor5 T(m);
  for (long i = 0; i < T.size(); ++i) T.flat()(i) = gauss(rng);
  if (scale == 0.0) return Tensor5(m);
  Tensor5 P = project_to_acdt(T);
  P.flat() *= scale;
  return P;
}

namespace {

// Orthonormal basis of the subspace cut out by antisymmetry in (x,y) and
// pair symmetry: coordinates are unordered pairs of index pairs {ab},{cd}
// with a<b, c<d (times the free slot n for rank 5).  The two Bianchi
// identities are then imposed on top of that basis.

struct PairBasis {
  std::vector<std::pair<int, int>> pairs;  // a<b
  int index(int a, int b) const {          // unordered, sign handled by caller
    for (size_t t = 0; t < pairs.size(); ++t)
      if (pairs[t].first == a && pairs[t].second == b) return static_cast<int>(t);
    return -1;
  }
};

PairBasis make_pairs(int m) {
  PairBasis pb;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) pb.pairs.push_back({a, b});
  return pb;
}

// Columns: flattened rank-4 tensors spanning {antisym in (x,y), pair sym}.
Matrix antisym_pair_basis4(int m) {
  const PairBasis pb = make_pairs(m);
  const int n2 = static_cast<int>(pb.pairs.size());
  const long full = static_cast<long>(m) * m * m * m;
  std::vector<Eigen::VectorXd> cols;
  for (int s = 0; s < n2; ++s) {
    for (int t = s; t < n2; ++t) {
      Eigen::VectorXd col = Eigen::VectorXd::Zero(full);
      auto [a, b] = pb.pairs[s];
      auto [c, d] = pb.pairs[t];
      Tensor4 T(m, std::move(col));
      auto put = [&](int i, int j, int k, int l, double v) { T(i, j, k, l) += v; };
      // full orbit under antisymmetry of both index pairs and pair exchange;
      // coincident positions for s == t simply accumulate
      put(a, b, c, d, 1.0);
      put(b, a, c, d, -1.0);
      put(a, b, d, c, -1.0);
      put(b, a, d, c, 1.0);
      put(c, d, a, b, 1.0);
      put(d, c, a, b, -1.0);
      put(c, d, b, a, -1.0);
      put(d, c, b, a, 1.0);
      Eigen::VectorXd f = T.flat();
      f /= f.norm();
      cols.push_back(std::move(f));
    }
  }
  Matrix B(full, cols.size());
  for (size_t i = 0; i < cols.size(); ++i) B.col(static_cast<long>(i)) = cols[i];
  return B;
}

Matrix antisym_pair_basis5(int m) {
  const Matrix B4 = antisym_pair_basis4(m);
  const long full4 = B4.rows();
  const long full5 = full4 * m;
  Matrix B(full5, B4.cols() * m);
  B.setZero();
  // tensor the rank-4 basis with the unit vectors of the last slot
  for (long c = 0; c < B4.cols(); ++c) {
    for (long r = 0; r < full4; ++r) {
      const double v = B4(r, c);
      if (v == 0.0) continue;
      for (int n = 0; n < m; ++n) B(r * m + n, c * m + n) = v;
    }
  }
  return B;
}

struct ClassBasisResult {
  Matrix basis;  // flattened-tensor columns, orthonormal
};

ClassBasisResult act_class_basis(int m) {
  const Matrix B = antisym_pair_basis4(m);
  if (B.cols() == 0) return {B};
  // Bianchi residual applied to each basis column
  Matrix C(B.rows(), B.cols());
  for (long c = 0; c < B.cols(); ++c) {
    Tensor4 T(m, B.col(c));
    C.col(c) = cyclic_avg4(T).flat();
  }
  // JacobiSVD: BDCSVD can deflate to a zero column in V for these inputs
  Eigen::JacobiSVD<Matrix> svd(C, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? 1e-8 * std::max(1.0, sv(0)) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  const long nullity = B.cols() - rank;
  return {B * svd.matrixV().rightCols(nullity)};
}

ClassBasisResult acdt_class_basis(int m) {
  const Matrix B = antisym_pair_basis5(m);
  if (B.cols() == 0) return {B};
  Matrix C(2 * B.rows(), B.cols());
  for (long c = 0; c < B.cols(); ++c) {
    Tensor5 T(m, B.col(c));
    C.col(c).head(B.rows()) = cyclic_avg5_first(T).flat();
    C.col(c).tail(B.rows()) = cyclic_avg5_second(T).flat();
  }
  Eigen::JacobiSVD<Matrix> svd(C, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? 1e-8 * std::max(1.0, sv(0)) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  const long nullity = B.cols() - rank;
  return {B * svd.matrixV().rightCols(nullity)};
}

}  // namespace

int act_dimension(int m) {
  if (m < 1 || m > 6) throw std::out_of_range("act_dimension: need 1 <= m <= 6");
  return static_cast<int>(act_class_basis(m).basis.cols());
}

int acdt_dimension(int m) {
  if (m < 1 || m > 6) throw std::out_of_range("acdt_dimension: need 1 <= m <= 6");
  return static_cast<int>(acdt_class_basis(m).basis.cols());
}

Matrix acdt_nullspace_basis(int m) {
  if (m < 1 || m > 5) throw std::out_of_range("acdt_nullspace_basis: need 1 <= m <= 5");
  return acdt_class_basis(m).basis;
}

Matrix acdt_dense_projector(int m) {
  const Matrix B = acdt_nullspace_basis(m);
  return B * B.transpose();
}

Matrix act_dense_projector(int m) {
  if (m < 1 || m > 4) throw std::out_of_range("act_dense_projector: need 1 <= m <= 4");
  const Matrix B = act_class_basis(m).basis;
  return B * B.transpose();
}

SelfAdjointOperator jacobi(const PseudoSpace& space, const Tensor4& R, const Vector& v,
                           double tol) {
  const int m = space.dim();
  if (R.dim() != m) throw std::invalid_argument("jacobi: tensor dimension mismatch");
  if (v.size() != m) throw std::invalid_argument("jacobi: vector dimension mismatch");
  if (!validate_act(R).passes(tol)) {
    throw std::invalid_argument("jacobi: tensor fails curvature symmetry validation");
  }
  Matrix M = Matrix::Zero(m, m);
  for (int y = 0; y < m; ++y)
    for (int z = 0; z < m; ++z) {
      double s = 0.0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) s += R(y, a, b, z) * v(a) * v(b);
      M(y, z) = s;
    }
  return {space.metric_diagonal().asDiagonal() * M, space.signature()};
}

SelfAdjointOperator szabo_operator(const PseudoSpace& space, const Tensor5& R,
                                   const Vector& v, double tol) {
  const int m = space.dim();
  if (R.dim() != m) throw std::invalid_argument("szabo_operator: tensor dimension mismatch");
  if (v.size() != m) throw std::invalid_argument("szabo_operator: vector dimension mismatch");
  if (!validate_acdt(R).passes(tol)) {
    throw std::invalid_argument("szabo_operator: tensor fails symmetry validation");
  }
  Matrix M = Matrix::Zero(m, m);
  for (int y = 0; y < m; ++y)
    for (int z = 0; z < m; ++z) {
      double s = 0.0;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          for (int c = 0; c < m; ++c) s += R(y, a, b, z, c) * v(a) * v(b) * v(c);
      M(y, z) = s;
    }
  return {space.metric_diagonal().asDiagonal() * M, space.signature()};
}

int szabo_map_kernel_dim(const PseudoSpace& space) {
  const int m = space.dim();
  if (m > 5) throw std::out_of_range("szabo_map_kernel_dim: exact assembly limited to m <= 5");
  const Matrix B = acdt_nullspace_basis(m);
  const long D = B.cols();
  if (D == 0) return 0;

  // monomials x_a x_b x_c with a <= b <= c
  std::vector<std::array<int, 3>> monos;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (int c = b; c < m; ++c) monos.push_back({a, b, c});

  const Vector g = space.metric_diagonal();
  Matrix map(static_cast<long>(m) * m * monos.size(), D);
  for (long col = 0; col < D; ++col) {
    const Tensor5 T(m, B.col(col));
    long row = 0;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (const auto& mo : monos) {
          // sum over the distinct orderings of the monomial's indices
          std::array<int, 3> idx = mo;
          std::sort(idx.begin(), idx.end());
          double s = 0.0;
          do {
            s += g(i) * T(i, idx[0], idx[1], j, idx[2]);
          } while (std::next_permutation(idx.begin(), idx.end()));
          map(row++, col) = s;
        }
  }
  Eigen::BDCSVD<Matrix> svd(map);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? 1e-8 * std::max(1.0, sv(0)) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  return static_cast<int>(D - rank);
}

}  // namespace szabo
