#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>
#include <utility>

namespace szabo {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Signature (p,q): p timelike (metric -1) directions, q spacelike (+1).
struct Signature {
  int p{0};
  int q{0};

  int dim() const { return p + q; }
  bool operator==(const Signature&) const = default;
};

enum class CausalType { Spacelike, Timelike, Null, Zero };

const char* to_string(CausalType t);

/// Real vector space with the canonical diagonal metric
/// diag(-1,...,-1,+1,...,+1), timelike coordinates first.
class PseudoSpace {
 public:
  explicit PseudoSpace(Signature sig, double classification_tol = 1e-9);

  const Signature& signature() const { return sig_; }
  int dim() const { return sig_.dim(); }

  /// Diagonal of the metric; entries are exactly -1 or +1.
  const Vector& metric_diagonal() const { return diag_; }
  Matrix metric() const { return diag_.asDiagonal(); }

  double classification_tol() const { return tol_; }

 private:
  Signature sig_;
  Vector diag_;
  double tol_;
};

/// Indefinite inner product (v,w) = sum_i g_ii v_i w_i.
double inner(const PseudoSpace& space, const Vector& v, const Vector& w);

/// psi negates the timelike coordinates; coincides with the metric array
/// in the canonical basis and is an involution.
Vector psi_map(const PseudoSpace& space, const Vector& v);

/// Positive definite inner product (v,w)_e = (psi v, w).
double euclidean_inner(const PseudoSpace& space, const Vector& v, const Vector& w);

CausalType causal_type(const PseudoSpace& space, const Vector& v);

/// Split w = pi_plus(w) + pi_minus(w) relative to the canonical maximal
/// spacelike subspace, at a basepoint v that is a unit spacelike vector
/// with zero timelike part and (v,w) = 0.  pi_plus(w) has zero timelike
/// coordinates and stays orthogonal to v.
std::pair<Vector, Vector> tangent_project(const PseudoSpace& space,
                                          const Vector& v, const Vector& w);

}  // namespace szabo
