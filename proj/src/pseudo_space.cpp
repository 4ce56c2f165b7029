#include "szabo/pseudo_space.hpp"

namespace szabo {

const char* to_string(CausalType t) {
  switch (t) {
    case CausalType::Spacelike: return "spacelike";
    case CausalType::Timelike: return "timelike";
    case CausalType::Null: return "null";
    case CausalType::Zero: return "zero";
  }
  return "?";
}

PseudoSpace::PseudoSpace(Signature sig, double classification_tol)
    : sig_(sig), tol_(classification_tol) {
  if (sig.p < 0 || sig.q < 0 || sig.dim() < 1) {
    throw std::invalid_argument("PseudoSpace: signature needs p >= 0, q >= 0, p+q >= 1");
  }
  diag_ = Vector::Ones(sig.dim());
  diag_.head(sig.p).setConstant(-1.0);
}

static void check_dim(const PseudoSpace& space, const Vector& v, const char* who) {
  if (v.size() != space.dim()) {
    throw std::invalid_argument(std::string(who) + ": vector length " +
                                std::to_string(v.size()) + " does not match space dimension " +
                                std::to_string(space.dim()));
  }
}

double inner(const PseudoSpace& space, const Vector& v, const Vector& w) {
  check_dim(space, v, "inner");
  check_dim(space, w, "inner");
  return v.cwiseProduct(space.metric_diagonal()).dot(w);
}

Vector psi_map(const PseudoSpace& space, const Vector& v) {
  check_dim(space, v, "psi_map");
  return space.metric_diagonal().cwiseProduct(v);
}

double euclidean_inner(const PseudoSpace& space, const Vector& v, const Vector& w) {
  check_dim(space, v, "euclidean_inner");
  check_dim(space, w, "euclidean_inner");
  return v.dot(w);
}

CausalType causal_type(const PseudoSpace& space, const Vector& v) {
  check_dim(space, v, "causal_type");
  const double e = v.squaredNorm();
  if (e == 0.0) return CausalType::Zero;
  const double g = inner(space, v, v);
  const double tol = space.classification_tol();
  if (g > tol * e) return CausalType::Spacelike;
  if (g < -tol * e) return CausalType::Timelike;
  return CausalType::Null;
}

std::pair<Vector, Vector> tangent_project(const PseudoSpace& space,
                                          const Vector& v, const Vector& w) {
  check_dim(space, v, "tangent_project");
  check_dim(space, w, "tangent_project");
  const int p = space.signature().p;
  const double tol = space.classification_tol();
  if (p > 0 && v.head(p).cwiseAbs().maxCoeff() > tol * std::max(1.0, v.norm())) {
    throw std::invalid_argument("tangent_project: basepoint has nonzero timelike part");
  }
  if (std::abs(inner(space, v, v) - 1.0) > 1e2 * tol) {
    throw std::invalid_argument("tangent_project: basepoint is not a unit spacelike vector");
  }
  if (std::abs(inner(space, v, w)) > tol * std::max(1.0, v.norm() * w.norm())) {
    throw std::invalid_argument("tangent_project: (v,w) != 0 at tolerance");
  }
  Vector plus = w;
  plus.head(p).setZero();
  Vector minus = w - plus;
  return {plus, minus};
}

}  // namespace szabo
