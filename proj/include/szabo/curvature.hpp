#pragma once

#include "szabo/pseudo_space.hpp"
#include "szabo/self_adjoint.hpp"
#include "szabo/tensor.hpp"

#include <cstdint>
#include <optional>

namespace szabo {

/// Per-identity maximum absolute violation; `relative` scales the worst
/// violation by the largest coefficient magnitude.
struct SymmetryResidual {
  double pair_symmetry{0.0};
  double antisymmetry{0.0};
  double first_bianchi{0.0};
  double second_bianchi{0.0};  // rank-5 only, 0 otherwise
  double relative{0.0};

  double worst() const;
  bool passes(double tol) const { return relative <= tol; }
};

SymmetryResidual validate_act(const Tensor4& R, double tol = 1e-9);
SymmetryResidual validate_acdt(const Tensor5& R, double tol = 1e-9);

/// Orthogonal projection (Euclidean coefficient inner product) onto the
/// curvature symmetry class, by alternating averaging projections.
Tensor4 project_to_act(const Tensor4& T, double tol = 1e-12, int max_iter = 10000);
Tensor5 project_to_acdt(const Tensor5& T, double tol = 1e-12, int max_iter = 10000);

/// Random Gaussian array projected onto the symmetry class.
Tensor5 random_acdt(int m, std::uint64_t seed, double scale = 1.0);

/// Dimensions of the Eq-style symmetry classes, computed as null-space
/// dimensions of the assembled constraint systems.
int act_dimension(int m);
int acdt_dimension(int m);

/// Euclid-orthonormal basis of the rank-5 symmetry class; columns are
/// flattened tensors.  Feasible for m <= 5.
Matrix acdt_nullspace_basis(int m);

/// Dense projector assembled from the null-space basis (small m only);
/// cross-checks the alternating-projection route.
Matrix acdt_dense_projector(int m);
Matrix act_dense_projector(int m);

/// (J(v)y,z) = R(y,v,v,z); even and quadratic in v.
SelfAdjointOperator jacobi(const PseudoSpace& space, const Tensor4& R, const Vector& v,
                           double tol = 1e-9);

/// (S(v)y,z) = R5(y,v,v,z;v); odd and cubic in v.
SelfAdjointOperator szabo_operator(const PseudoSpace& space, const Tensor5& R,
                                   const Vector& v, double tol = 1e-9);

/// Kernel dimension of the linear map from the symmetry class to the
/// coefficient space of v -> S(v); zero means S determines the tensor.
int szabo_map_kernel_dim(const PseudoSpace& space);

}  // namespace szabo
