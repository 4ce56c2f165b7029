#include "szabo/self_adjoint.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace szabo {

SelfAdjointCheck is_self_adjoint(const PseudoSpace& space, const Matrix& A, double tol) {
  if (A.rows() != space.dim() || A.cols() != space.dim()) {
    throw std::invalid_argument("is_self_adjoint: operator size does not match space");
  }
  const Matrix gA = space.metric_diagonal().asDiagonal() * A;
  const double res = (gA - gA.transpose()).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, A.cwiseAbs().maxCoeff());
  return {res <= tol * scale, res};
}

SelfAdjointOperator random_self_adjoint(const PseudoSpace& space, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int m = space.dim();
  Matrix S(m, m);
  for (int i = 0; i < m; ++i) {
    S(i, i) = gauss(rng);
    for (int j = i + 1; j < m; ++j) S(i, j) = S(j, i) = gauss(rng);
  }
  return {space.metric_diagonal().asDiagonal() * S, space.signature()};
}

int rank_of(const Matrix& A, double tol) {
  if (A.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(A);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * sv(0)) ++r;
  return r;
}

namespace {

struct Cluster {
  std::complex<double> rep;
  int count{0};
};

// Fold eigenvalues to Im >= 0 and single-linkage cluster at tol*scale.
std::vector<Cluster> cluster_eigenvalues(const Eigen::VectorXcd& evs, double tol,
                                         double* scale_out, bool* warning) {
  const int n = static_cast<int>(evs.size());
  std::vector<std::complex<double>> pts(n);
  double rho = 0.0;
  for (int i = 0; i < n; ++i) {
    pts[i] = {evs(i).real(), std::abs(evs(i).imag())};
    rho = std::max(rho, std::abs(evs(i)));
  }
  const double scale = std::max(1.0, rho);
  if (scale_out) *scale_out = scale;
  const double merge = tol * scale;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(pts[i] - pts[j]) <= merge) parent[find(i)] = find(j);

  std::vector<Cluster> out;
  std::vector<int> root_of(n, -1);
  for (int i = 0; i < n; ++i) {
    const int r = find(i);
    if (root_of[r] < 0) {
      root_of[r] = static_cast<int>(out.size());
      out.push_back({});
    }
    Cluster& c = out[root_of[r]];
    c.rep += pts[i];
    c.count += 1;
  }
  for (auto& c : out) {
    c.rep /= static_cast<double>(c.count);
    if (c.rep.imag() <= merge) c.rep = {c.rep.real(), 0.0};
  }
  std::sort(out.begin(), out.end(), [](const Cluster& a, const Cluster& b) {
    if (a.rep.real() != b.rep.real()) return a.rep.real() < b.rep.real();
    return a.rep.imag() < b.rep.imag();
  });
  if (warning) {
    *warning = false;
    for (size_t i = 0; i < out.size(); ++i)
      for (size_t j = i + 1; j < out.size(); ++j)
        if (std::abs(out[i].rep - out[j].rep) <= 10.0 * merge) *warning = true;
  }
  return out;
}

Matrix operator_for_cluster(const Matrix& A, const std::complex<double>& lambda) {
  const int m = static_cast<int>(A.rows());
  if (lambda.imag() == 0.0) return A - lambda.real() * Matrix::Identity(m, m);
  return A * A - 2.0 * lambda.real() * A + std::norm(lambda) * Matrix::Identity(m, m);
}

std::vector<int> staircase_blocks(const Matrix& N, double tol) {
  const int d = static_cast<int>(N.rows());
  std::vector<int> ranks{d};  // rank of N^0
  Matrix Nk = Matrix::Identity(d, d);
  const double opnorm = std::max(1.0, N.norm());
  for (int k = 1; k <= d; ++k) {
    Nk = Nk * N;
    Eigen::JacobiSVD<Matrix> svd(Nk);
    const auto& sv = svd.singularValues();
    const double thresh = tol * std::max(1.0, std::pow(opnorm, k));
    int r = 0;
    for (int i = 0; i < sv.size(); ++i)
      if (sv(i) > thresh) ++r;
    ranks.push_back(r);
    if (r == 0) break;
  }
  while (ranks.back() != 0) ranks.push_back(0);
  ranks.push_back(0);
  std::vector<int> blocks;
  for (size_t k = 1; k + 1 < ranks.size(); ++k) {
    const int exactly_k = (ranks[k - 1] - ranks[k]) - (ranks[k] - ranks[k + 1]);
    for (int b = 0; b < exactly_k; ++b) blocks.push_back(static_cast<int>(k));
  }
  std::sort(blocks.rbegin(), blocks.rend());
  return blocks;
}

}  // namespace

JordanDecomposition jordan_decompose(const PseudoSpace& space,
                                     const SelfAdjointOperator& A, double tol) {
  const int m = space.dim();
  const Matrix& M = A.matrix;
  if (M.rows() != m || M.cols() != m) {
    throw std::invalid_argument("jordan_decompose: operator size does not match space");
  }
  const auto check = is_self_adjoint(space, M, tol);
  if (!check.ok) {
    throw std::invalid_argument("jordan_decompose: operator is not self-adjoint, residual " +
                                std::to_string(check.residual));
  }

  JordanDecomposition dec;
  dec.tol = tol;

  Eigen::EigenSolver<Matrix> es(M);
  double scale = 1.0;
  const auto clusters = cluster_eigenvalues(es.eigenvalues(), tol, &scale, &dec.cluster_warning);

  for (const auto& c : clusters) {
    JordanEntry e;
    e.lambda = c.rep;
    const Matrix Al = operator_for_cluster(M, c.rep);
    // ker(Al^d) already equals the full generalized eigenspace, since no
    // Jordan block outgrows its cluster; higher powers only shrink the
    // singular-value gap that separates the kernel
    Matrix Alm = Matrix::Identity(m, m);
    for (int k = 0; k < std::min(m, c.count); ++k) Alm = Alm * Al;
    Eigen::JacobiSVD<Matrix> svd(Alm, Eigen::ComputeFullV);
    // kernel dimension equals the cluster multiplicity; take the matching
    // trailing right singular vectors
    e.basis = svd.matrixV().rightCols(c.count);

    const Matrix gram =
        e.basis.transpose() * space.metric_diagonal().asDiagonal() * e.basis;
    Eigen::SelfAdjointEigenSolver<Matrix> ges(gram);
    for (int i = 0; i < ges.eigenvalues().size(); ++i) {
      if (ges.eigenvalues()(i) < 0.0) ++e.p_sig; else ++e.q_sig;
    }

    const Matrix N = e.basis.transpose() * Al * e.basis;
    e.block_sizes = staircase_blocks(N, tol);
    dec.entries.push_back(std::move(e));
  }
  return dec;
}

bool is_jordan_simple(const PseudoSpace& space, const SelfAdjointOperator& A, double tol) {
  const auto dec = jordan_decompose(space, A, tol);
  for (const auto& e : dec.entries)
    for (int b : e.block_sizes)
      if (b != 1) return false;
  return true;
}

Matrix reassemble(const PseudoSpace& space, const SelfAdjointOperator& A,
                  const JordanDecomposition& dec) {
  const int m = space.dim();
  Matrix P(m, m);
  int col = 0;
  for (const auto& e : dec.entries) {
    P.middleCols(col, e.basis.cols()) = e.basis;
    col += static_cast<int>(e.basis.cols());
  }
  if (col != m) {
    throw std::runtime_error("reassemble: eigenspace dimensions do not sum to m");
  }
  const Matrix D = P.fullPivLu().solve(A.matrix * P);
  Matrix Dblk = Matrix::Zero(m, m);
  col = 0;
  for (const auto& e : dec.entries) {
    const int d = static_cast<int>(e.basis.cols());
    Dblk.block(col, col, d, d) = D.block(col, col, d, d);
    col += d;
  }
  return P * Dblk * P.fullPivLu().inverse();
}

JordanStructure jordan_structure(const JordanDecomposition& dec) {
  JordanStructure s;
  for (const auto& e : dec.entries) s.items.push_back({e.lambda, e.block_sizes});
  return s;
}

JordanStructure negated(const JordanStructure& s) {
  JordanStructure out;
  for (const auto& it : s.items)
    out.items.push_back({{-it.lambda.real(), it.lambda.imag()}, it.block_sizes});
  std::sort(out.items.begin(), out.items.end(), [](const auto& a, const auto& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
  return out;
}

bool same_structure(const JordanStructure& a, const JordanStructure& b,
                    double tol, double scale) {
  if (a.items.size() != b.items.size()) return false;
  for (size_t i = 0; i < a.items.size(); ++i) {
    if (std::abs(a.items[i].lambda - b.items[i].lambda) > tol * std::max(1.0, scale))
      return false;
    if (a.items[i].block_sizes != b.items[i].block_sizes) return false;
  }
  return true;
}

Spectrum spectrum_of(const Matrix& A, double tol) {
  Eigen::EigenSolver<Matrix> es(A);
  double scale = 1.0;
  const auto clusters = cluster_eigenvalues(es.eigenvalues(), tol, &scale, nullptr);
  Spectrum s;
  for (const auto& c : clusters) s.items.push_back({c.rep, c.count});
  return s;
}

Spectrum negated(const Spectrum& s) {
  Spectrum out;
  for (const auto& it : s.items)
    out.items.push_back({{-it.lambda.real(), it.lambda.imag()}, it.multiplicity});
  std::sort(out.items.begin(), out.items.end(), [](const auto& a, const auto& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
  return out;
}

bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol, double scale) {
  if (a.items.size() != b.items.size()) return false;
  for (size_t i = 0; i < a.items.size(); ++i) {
    if (std::abs(a.items[i].lambda - b.items[i].lambda) > tol * std::max(1.0, scale))
      return false;
    if (a.items[i].multiplicity != b.items[i].multiplicity) return false;
  }
  return true;
}

}  // namespace szabo
