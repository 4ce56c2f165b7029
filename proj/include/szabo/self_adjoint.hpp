#pragma once

#include "szabo/pseudo_space.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace szabo {

/// Linear map A with (Av,w) = (v,Aw), i.e. g*A symmetric.
struct SelfAdjointOperator {
  Matrix matrix;
  Signature signature;
};

struct SelfAdjointCheck {
  bool ok{false};
  double residual{0.0};
};

/// ||gA - (gA)^T||_inf against tol * max(1, ||A||_inf).
SelfAdjointCheck is_self_adjoint(const PseudoSpace& space, const Matrix& A,
                                 double tol = 1e-9);

/// A = psi * S with S Euclid-symmetric Gaussian; gA = S is symmetric
/// exactly as an array.  Deterministic per seed.
SelfAdjointOperator random_self_adjoint(const PseudoSpace& space, std::uint64_t seed);

/// One generalized eigenspace E_lambda = ker(A_lambda^m), where A_lambda
/// is A - lambda*I for real lambda and (A - lambda*I)(A - conj(lambda)*I)
/// otherwise.  The conjugate pair is represented once, Im(lambda) >= 0.
struct JordanEntry {
  std::complex<double> lambda;
  Matrix basis;              // m x d, real Euclid-orthonormal basis of E_lambda
  int p_sig{0};              // induced metric signature on E_lambda
  int q_sig{0};
  std::vector<int> block_sizes;  // Jordan blocks of A_lambda on E_lambda, descending
};

struct JordanDecomposition {
  std::vector<JordanEntry> entries;  // sorted by (Re lambda, Im lambda)
  bool cluster_warning{false};       // two clusters within 10*tol of merging
  double tol{0.0};
};

JordanDecomposition jordan_decompose(const PseudoSpace& space,
                                     const SelfAdjointOperator& A,
                                     double tol = 1e-9);

bool is_jordan_simple(const PseudoSpace& space, const SelfAdjointOperator& A,
                      double tol = 1e-9);

/// Block-diagonalize A over the decomposition bases, drop the off-diagonal
/// coupling, and map back; the round-trip check compares this against A.
Matrix reassemble(const PseudoSpace& space, const SelfAdjointOperator& A,
                  const JordanDecomposition& dec);

/// Conjugacy-class fingerprint: eigenvalue representatives paired with
/// their block-size multisets, sorted by (Re, Im).
struct JordanStructure {
  struct Item {
    std::complex<double> lambda;
    std::vector<int> block_sizes;
  };
  std::vector<Item> items;
};

JordanStructure jordan_structure(const JordanDecomposition& dec);

/// Structure of -A given that of A: eigenvalues negate, blocks persist.
JordanStructure negated(const JordanStructure& s);

bool same_structure(const JordanStructure& a, const JordanStructure& b,
                    double tol, double scale = 1.0);

/// Eigenvalues of A clustered at tol*max(1, spectral radius), Im >= 0
/// representatives with real-dimension multiplicities, sorted by (Re, Im).
struct Spectrum {
  struct Item {
    std::complex<double> lambda;
    int multiplicity;  // real dimension of E_lambda
  };
  std::vector<Item> items;
};

Spectrum spectrum_of(const Matrix& A, double tol);
Spectrum negated(const Spectrum& s);
bool same_spectrum(const Spectrum& a, const Spectrum& b, double tol, double scale = 1.0);

/// Singular values above tol * (largest singular value); 0 for the zero map.
int rank_of(const Matrix& A, double tol = 1e-9);

}  // namespace szabo
