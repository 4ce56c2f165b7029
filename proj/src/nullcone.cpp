#include "szabo/nullcone.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <random>

namespace szabo {

namespace {

std::vector<std::array<int, 3>> make_monomials(int m) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b)
      for (int c = b; c < m; ++c) out.push_back({a, b, c});
  return out;
}

int multiplicity(const std::array<int, 3>& mo) {
  if (mo[0] == mo[2]) return 1;
  if (mo[0] == mo[1] || mo[1] == mo[2]) return 3;
  return 6;
}

}  // namespace

MatrixCubicPolynomial::MatrixCubicPolynomial(int m, Matrix coeffs)
    : m_(m), monomials_(make_monomials(m)), coeffs_(std::move(coeffs)) {
  if (coeffs_.rows() != static_cast<long>(m) * m ||
      coeffs_.cols() != static_cast<long>(monomials_.size())) {
    throw std::invalid_argument("MatrixCubicPolynomial: coefficient shape mismatch");
  }
}

Matrix MatrixCubicPolynomial::evaluate(const Vector& x) const {
  Vector mono_vals(monomials_.size());
  for (size_t t = 0; t < monomials_.size(); ++t) {
    const auto& mo = monomials_[t];
    mono_vals(t) = x(mo[0]) * x(mo[1]) * x(mo[2]);
  }
  Vector flat = coeffs_ * mono_vals;
  return Eigen::Map<Matrix>(flat.data(), m_, m_).transpose();
}

Vector MatrixCubicPolynomial::monomial_weights() const {
  Vector w(monomials_.size());
  for (size_t t = 0; t < monomials_.size(); ++t)
    w(t) = std::sqrt(static_cast<double>(multiplicity(monomials_[t])));
  return w;
}

double MatrixCubicPolynomial::coefficient_norm() const {
  const Vector w = monomial_weights();
  double s = 0.0;
  for (long r = 0; r < coeffs_.rows(); ++r)
    s += coeffs_.row(r).transpose().cwiseProduct(w).squaredNorm();
  return std::sqrt(s);
}

Matrix MatrixLinearPolynomial::evaluate(const Vector& x) const {
  Vector flat = coeffs * x;
  return Eigen::Map<Matrix>(flat.data(), m, m).transpose();
}

MatrixCubicPolynomial szabo_cubic(const PseudoSpace& space, const Tensor5& R, double tol) {
  const int m = space.dim();
  if (R.dim() != m) throw std::invalid_argument("szabo_cubic: tensor dimension mismatch");
  if (!validate_acdt(R).passes(tol)) {
    throw std::invalid_argument("szabo_cubic: tensor fails symmetry validation");
  }
  const auto monos = make_monomials(m);
  const Vector g = space.metric_diagonal();
  Matrix coeffs(static_cast<long>(m) * m, monos.size());
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (size_t t = 0; t < monos.size(); ++t) {
        std::array<int, 3> idx = monos[t];
        double s = 0.0;
        do {
          s += g(i) * R(i, idx[0], idx[1], j, idx[2]);
        } while (std::next_permutation(idx.begin(), idx.end()));
        coeffs(static_cast<long>(i) * m + j, t) = s;
      }
  return {m, std::move(coeffs)};
}

DivisionResult divide_by_form(const MatrixCubicPolynomial& S, const PseudoSpace& space) {
  const int m = S.dim();
  const auto& monos = S.monomials();
  const Vector g = space.metric_diagonal();
  const Vector w = S.monomial_weights();

  // columns: the cubic (x,x) * x_a, expressed over the monomial basis
  Matrix form_times_linear = Matrix::Zero(monos.size(), m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      std::array<int, 3> mo{b, b, a};
      std::sort(mo.begin(), mo.end());
      const auto it = std::find(monos.begin(), monos.end(), mo);
      form_times_linear(it - monos.begin(), a) += g(b);
    }

  const Matrix WT = w.asDiagonal() * form_times_linear;
  const auto qr = WT.colPivHouseholderQr();

  DivisionResult out;
  out.quotient.m = m;
  out.quotient.coeffs = Matrix(static_cast<long>(m) * m, m);
  double res2 = 0.0;
  for (long e = 0; e < S.coeffs().rows(); ++e) {
    const Vector rhs = w.cwiseProduct(S.coeffs().row(e).transpose());
    const Vector sol = qr.solve(rhs);
    out.quotient.coeffs.row(e) = sol.transpose();
    res2 += (rhs - WT * sol).squaredNorm();
  }
  out.remainder_norm = std::sqrt(res2);
  return out;
}

NullConeVerdict vanishes_on_null_cone(const MatrixCubicPolynomial& S,
                                      const PseudoSpace& space, double tol,
                                      std::uint64_t seed) {
  const int p = space.signature().p;
  const int q = space.signature().q;
  const int m = space.dim();
  if (p < 1 || q < 1) {
    throw std::invalid_argument("vanishes_on_null_cone: signature has no null vectors");
  }
  NullConeVerdict v{};
  v.reducible_form_warning = (m < 3);

  const double scale = std::max(1.0, S.coefficient_norm());
  v.algebraic = divide_by_form(S, space).remainder_norm <= tol * scale;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    Vector x(m);
    for (int i = 0; i < m; ++i) x(i) = gauss(rng);
    double tn = x.head(p).norm(), sn = x.tail(q).norm();
    if (tn < 1e-8 || sn < 1e-8) { --k; continue; }
    x.head(p) *= sn / tn;     // balance: (x,x) = 0 analytically
    x /= x.norm();
    worst = std::max(worst, S.evaluate(x).cwiseAbs().maxCoeff());
  }
  v.sampled = worst <= tol * scale;
  return v;
}

int linear_annihilator_space_dim(const PseudoSpace& space) {
  const int m = space.dim();
  if (m > 6) throw std::out_of_range("linear_annihilator_space_dim: m <= 6 supported");
  const Vector g = space.metric_diagonal();
  const auto unknown = [m](int i, int j, int a) { return (i * m + j) * m + a; };

  std::vector<Vector> rows;
  // f(x) self-adjoint for every x:  g_ii f[i][j][a] = g_jj f[j][i][a]
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        Vector r = Vector::Zero(m * m * m);
        r(unknown(i, j, a)) += g(i);
        r(unknown(j, i, a)) -= g(j);
        rows.push_back(std::move(r));
      }
  // polarization of f(x)x = 0:  f(x)y + f(y)x = 0
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int a = j; a < m; ++a) {
        Vector r = Vector::Zero(m * m * m);
        r(unknown(i, j, a)) += 1.0;
        r(unknown(i, a, j)) += 1.0;
        rows.push_back(std::move(r));
      }
  // polarization of (f(x)y,y) = 0:  (f(x)y,z) + (f(x)z,y) = 0
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < m; ++i)
      for (int j = i; j < m; ++j) {
        Vector r = Vector::Zero(m * m * m);
        r(unknown(i, j, a)) += g(i);
        r(unknown(j, i, a)) += g(j);
        rows.push_back(std::move(r));
      }

  Matrix M(rows.size(), m * m * m);
  for (size_t r = 0; r < rows.size(); ++r) M.row(r) = rows[r].transpose();
  Eigen::BDCSVD<Matrix> svd(M);
  const auto& sv = svd.singularValues();
  const double thresh = sv.size() ? 1e-8 * std::max(1.0, sv(0)) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > thresh) ++rank;
  return m * m * m - rank;
}

EvenRankFlag even_rank_check(const std::vector<int>& observed_ranks) {
  if (observed_ranks.empty()) return EvenRankFlag::NotApplicable;
  const int r = observed_ranks.front();
  for (int x : observed_ranks)
    if (x != r) return EvenRankFlag::NotApplicable;
  return r % 2 == 0 ? EvenRankFlag::Consistent : EvenRankFlag::ViolatedWithWitness;
}

}  // namespace szabo
