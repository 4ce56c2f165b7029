#include "szabo/curvature.hpp"
#include "szabo/pseudo_space.hpp"

#include <doctest.h>

#include <random>

using namespace szabo;

namespace {

Tensor4 random_tensor4(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Tensor4 T(m);
  for (long i = 0; i < T.size(); ++i) T.flat()(i) = g(rng);
  return T;
}

Tensor5 random_tensor5(int m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  Tensor5 T(m);
  for (long i = 0; i < T.size(); ++i) T.flat()(i) = g(rng);
  return T;
}

// evaluate the rank-5 array as a multilinear form; independent of the
// operator extraction path
double eval5(const Tensor5& R, const Vector& x, const Vector& y, const Vector& z,
             const Vector& w, const Vector& v) {
  const int m = R.dim();
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l)
          for (int n = 0; n < m; ++n)
            s += R(i, j, k, l, n) * x(i) * y(j) * z(k) * w(l) * v(n);
  return s;
}

double eval4(const Tensor4& R, const Vector& x, const Vector& y, const Vector& z,
             const Vector& w) {
  const int m = R.dim();
  double s = 0.0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) s += R(i, j, k, l) * x(i) * y(j) * z(k) * w(l);
  return s;
}

Vector unit(int m, int i) {
  Vector e = Vector::Zero(m);
  e(i) = 1.0;
  return e;
}

}  // namespace

TEST_CASE("validation residuals, rank 4") {
  CHECK(validate_act(Tensor4(3)).worst() == 0.0);

  Tensor4 single(2);
  single(0, 0, 0, 0) = 1.0;
  // antisymmetry forces R(x,x,.,.) = 0, so the distance to the
  // antisymmetric part of a single diagonal entry is the entry itself
  CHECK(validate_act(single).antisymmetry == 1.0);
  CHECK_FALSE(validate_act(single).passes(1e-9));

  const Tensor4 P = project_to_act(random_tensor4(3, 1));
  CHECK(validate_act(P).relative <= 1e-10);
}

TEST_CASE("validation residuals, rank 5") {
  CHECK(validate_acdt(Tensor5(3)).worst() == 0.0);

  Tensor5 single(2);
  single(0, 0, 0, 0, 0) = 1.0;
  CHECK(validate_acdt(single).antisymmetry == 1.0);

  const Tensor5 P = project_to_acdt(random_tensor5(3, 2));
  CHECK(validate_acdt(P).relative <= 1e-10);
}

TEST_CASE("projectors: zero, fixed points, idempotence, orthogonality") {
  CHECK(project_to_act(Tensor4(2)).flat().norm() == 0.0);
  CHECK(project_to_acdt(Tensor5(2)).flat().norm() == 0.0);

  for (int m : {2, 3, 4}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Tensor5 P = project_to_acdt(random_tensor5(m, seed));
      const Tensor5 PP = project_to_acdt(P);
      CHECK((PP.flat() - P.flat()).cwiseAbs().maxCoeff() <= 1e-10);

      const Tensor4 Q = project_to_act(random_tensor4(m, seed));
      const Tensor4 QQ = project_to_act(Q);
      CHECK((QQ.flat() - Q.flat()).cwiseAbs().maxCoeff() <= 1e-10);
    }
  }

  // the residual T - P(T) is Euclid-orthogonal to the projected image
  const Tensor5 T = random_tensor5(3, 7);
  const Tensor5 PT = project_to_acdt(T);
  const Tensor5 PU = project_to_acdt(random_tensor5(3, 8));
  CHECK(std::abs((T.flat() - PT.flat()).dot(PU.flat())) <= 1e-9 * PU.flat().norm());
}

TEST_CASE("symmetry class dimensions") {
  // null-space oracle values, frozen; the classical counts
  // m^2(m^2-1)/12 and m^2(m^2-1)(m+2)/24 are the cross-check
  const int act_expected[] = {0, 1, 6, 20};
  for (int m = 1; m <= 4; ++m) {
    CHECK(act_dimension(m) == act_expected[m - 1]);
    CHECK(act_dimension(m) == m * m * (m * m - 1) / 12);
  }
  const int acdt_expected[] = {0, 2, 15, 60, 175};
  for (int m = 1; m <= 5; ++m) {
    CHECK(acdt_dimension(m) == acdt_expected[m - 1]);
    CHECK(acdt_dimension(m) == m * m * (m * m - 1) * (m + 2) / 24);
  }
  CHECK_THROWS_AS(acdt_dimension(7), std::out_of_range);
}

TEST_CASE("dense projector agrees with the alternating route") {
  for (int m : {2, 3}) {
    const Matrix P5 = acdt_dense_projector(m);
    CHECK(rank_of(P5, 1e-9) == acdt_dimension(m));
    const Tensor5 T = random_tensor5(m, 11);
    const Tensor5 A = project_to_acdt(T);
    CHECK((P5 * T.flat() - A.flat()).cwiseAbs().maxCoeff() <= 1e-9);

    const Matrix P4 = act_dense_projector(m);
    CHECK(rank_of(P4, 1e-9) == act_dimension(m));
    const Tensor4 T4 = random_tensor4(m, 12);
    CHECK((P4 * T4.flat() - project_to_act(T4).flat()).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("class basis is orthonormal") {
  for (int m : {2, 3, 4, 5}) {
    const Matrix B = acdt_nullspace_basis(m);
    CHECK(B.cols() == acdt_dimension(m));
    const Matrix G = B.transpose() * B - Matrix::Identity(B.cols(), B.cols());
    CHECK(G.cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("jacobi operator") {
  PseudoSpace s12({1, 2});
  Vector v(3);
  v << 0.3, -1.1, 0.7;

  CHECK(jacobi(s12, Tensor4(3), v).matrix.norm() == 0.0);

  const Tensor4 R = project_to_act(random_tensor4(3, 21));
  const auto J = jacobi(s12, R, v);
  CHECK(is_self_adjoint(s12, J.matrix).ok);
  CHECK((J.matrix * v).norm() <= 1e-12 * std::max(1.0, J.matrix.norm()));
  CHECK((jacobi(s12, R, -v).matrix - J.matrix).norm() == 0.0);
  CHECK((jacobi(s12, R, 2 * v).matrix - 4 * J.matrix).cwiseAbs().maxCoeff() <=
        1e-10 * J.matrix.cwiseAbs().maxCoeff());

  // (J(v)y, z) against the multilinear form, entry by entry
  for (int y = 0; y < 3; ++y)
    for (int z = 0; z < 3; ++z) {
      const double lhs = inner(s12, J.matrix * unit(3, y), unit(3, z));
      const double rhs = eval4(R, unit(3, y), v, v, unit(3, z));
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }

  Tensor4 bad(3);
  bad(0, 0, 0, 0) = 1.0;
  CHECK_THROWS_AS(jacobi(s12, bad, v), std::invalid_argument);
}

TEST_CASE("szabo operator") {
  PseudoSpace s23({2, 3});
  Vector v(5);
  v << 0.2, -0.5, 1.3, 0.4, -0.9;

  CHECK(szabo_operator(s23, Tensor5(5), v).matrix.norm() == 0.0);

  const Tensor5 R = project_to_acdt(random_tensor5(5, 31));
  const auto S = szabo_operator(s23, R, v);
  CHECK(is_self_adjoint(s23, S.matrix).ok);
  CHECK((S.matrix * v).norm() <= 1e-12 * std::max(1.0, S.matrix.norm() * v.norm()));
  CHECK((szabo_operator(s23, R, -v).matrix + S.matrix).norm() == 0.0);
  CHECK((szabo_operator(s23, R, 2 * v).matrix - 8 * S.matrix).cwiseAbs().maxCoeff() <=
        1e-10 * S.matrix.cwiseAbs().maxCoeff());

  for (int y = 0; y < 5; ++y)
    for (int z = 0; z < 5; ++z) {
      const double lhs = inner(s23, S.matrix * unit(5, y), unit(5, z));
      const double rhs = eval5(R, unit(5, y), v, v, unit(5, z), v);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }

  Tensor5 bad(5);
  bad(0, 0, 0, 0, 0) = 1.0;
  CHECK_THROWS_AS(szabo_operator(s23, bad, v), std::invalid_argument);
}

TEST_CASE("operator field determines the tensor") {
  CHECK(szabo_map_kernel_dim(PseudoSpace({1, 1})) == 0);
  CHECK(szabo_map_kernel_dim(PseudoSpace({0, 3})) == 0);
  CHECK(szabo_map_kernel_dim(PseudoSpace({2, 2})) == 0);
}
