#pragma once

#include "szabo/curvature.hpp"
#include "szabo/pseudo_space.hpp"
#include "szabo/tensor.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace szabo {

/// Entries of x -> S(x) as cubic polynomials: per matrix entry (i,j) the
/// coefficients over the monomials x_a x_b x_c, a <= b <= c.
class MatrixCubicPolynomial {
 public:
  MatrixCubicPolynomial() = default;
  MatrixCubicPolynomial(int m, Matrix coeffs);

  int dim() const { return m_; }
  int monomial_count() const { return static_cast<int>(monomials_.size()); }
  const std::vector<std::array<int, 3>>& monomials() const { return monomials_; }

  /// coefficient matrix: rows index matrix entries (i*m+j), columns monomials
  const Matrix& coeffs() const { return coeffs_; }
  Matrix& coeffs() { return coeffs_; }

  Matrix evaluate(const Vector& x) const;

  /// Norm matching the Euclidean norm of the fully symmetric rank-3
  /// coefficient array (monomials weighted by sqrt of multiplicity).
  double coefficient_norm() const;
  Vector monomial_weights() const;  // sqrt multiplicities

 private:
  int m_{0};
  std::vector<std::array<int, 3>> monomials_;
  Matrix coeffs_;
};

struct MatrixLinearPolynomial {
  int m{0};
  Matrix coeffs;  // rows: matrix entries (i*m+j), columns: x_a

  Matrix evaluate(const Vector& x) const;
  double norm() const { return coeffs.norm(); }
};

/// Exact symmetrized cubic coefficients of the Szabo operator field.
MatrixCubicPolynomial szabo_cubic(const PseudoSpace& space, const Tensor5& R,
                                  double tol = 1e-9);

struct DivisionResult {
  MatrixLinearPolynomial quotient;
  double remainder_norm{0.0};
};

/// Entrywise least-squares division of the cubic by the quadratic form
/// (x,x); exact on the divisible subspace, residual otherwise.
DivisionResult divide_by_form(const MatrixCubicPolynomial& S, const PseudoSpace& space);

struct NullConeVerdict {
  bool algebraic;  // remainder route
  bool sampled;    // evaluation at sampled null vectors
  bool reducible_form_warning{false};  // m < 3: (x,x) may factor
  bool agree() const { return algebraic == sampled; }
};

/// Both routes must agree when m >= 3; for m < 3 the form (x,x) may be
/// reducible and the two verdicts are reported without the implication.
NullConeVerdict vanishes_on_null_cone(const MatrixCubicPolynomial& S,
                                      const PseudoSpace& space, double tol = 1e-9,
                                      std::uint64_t seed = 1);

/// Dimension of { linear f : f(x) self-adjoint for all x, f(x)x = 0 for
/// all x }, assembled by polarization; zero for every nondegenerate
/// signature.
int linear_annihilator_space_dim(const PseudoSpace& space);

enum class EvenRankFlag { Consistent, ViolatedWithWitness, NotApplicable };

/// Constant observed rank over an antipodally closed family must be even.
EvenRankFlag even_rank_check(const std::vector<int>& observed_ranks);

}  // namespace szabo
