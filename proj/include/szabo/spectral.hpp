#pragma once

#include "szabo/curvature.hpp"
#include "szabo/pseudo_space.hpp"
#include "szabo/self_adjoint.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace szabo {

enum class Cone { Spacelike, Timelike, Null };

const char* to_string(Cone c);

/// Antipodally closed, deterministic per seed; vectors satisfy the cone
/// equation to 1e-12 after analytic rescaling and stay below the
/// Euclidean bound (pseudo-spheres with p,q >= 1 are noncompact).
struct SampleSet {
  Cone cone;
  std::vector<Vector> vectors;  // 2n entries, v at 2i and -v at 2i+1
  std::uint64_t seed{0};
  double euclidean_bound{10.0};
};

SampleSet sample_cone(const PseudoSpace& space, Cone cone, int n, std::uint64_t seed,
                      double euclidean_bound = 10.0);

/// Maximal number of linearly independent vector fields on S^{q-1}:
/// q = 2^l * odd, with nu(1)=0, nu(2)=1, nu(4)=3, nu(8)=7 and
/// nu(2^{l+4}) = nu(2^l) + 8.
int adams_number(int q);

enum class VerdictStatus { NoCounterexample, WitnessFound };

/// Sampling can only falsify constancy; a no-counterexample verdict is
/// one-sided by construction.
struct ConstancyVerdict {
  VerdictStatus status{VerdictStatus::NoCounterexample};
  std::optional<std::pair<Vector, Vector>> witness;
  double tol{0.0};
};

ConstancyVerdict spectral_constancy(const PseudoSpace& space, const Tensor5& R, Cone cone,
                                    int n, std::uint64_t seed, double tol = 1e-9);
ConstancyVerdict jordan_constancy(const PseudoSpace& space, const Tensor5& R, Cone cone,
                                  int n, std::uint64_t seed, double tol = 1e-9);

/// Characteristic polynomial coefficients c_0..c_m of
/// P(v) = (v,v)^{-3} S(v)^2, with p(t) = det(P - t*Id); invariant under
/// v -> t*v for t != 0.
Vector char_poly_P(const PseudoSpace& space, const Tensor5& R, const Vector& v,
                   double tol = 1e-9);

/// Picks an invertible r x r minor of S(v0) and hunts the target cone for
/// a vector where the same minor stays invertible, certifying that the
/// rank transfers.
std::optional<Vector> rank_transfer_witness(const PseudoSpace& space, const Tensor5& R,
                                            const Vector& v0, Cone target_cone, int n,
                                            std::uint64_t seed, double tol = 1e-9);

enum class Flag { Consistent, ViolatedWithWitness, NotApplicable };

const char* to_string(Flag f);

struct TheoremFlag {
  std::string name;
  Flag flag{Flag::NotApplicable};
  std::string explanation;
};

struct TheoremReport {
  std::vector<int> r_plus, r_minus, r_0;  // observed rank multisets
  double max_self_adjoint_residual{0.0};
  double max_kernel_residual{0.0};  // ||S(v)v|| over samples
  double max_oddness_gap{0.0};      // ||S(-v)+S(v)|| over samples
  ConstancyVerdict spectral_plus, spectral_minus;
  ConstancyVerdict jordan_plus, jordan_minus, jordan_null;
  bool cross_cone_spectra_match{false};  // Spec+ == i * Spec- on samples
  std::vector<TheoremFlag> flags;
  std::vector<std::string> quarantine;  // suspect results kept for re-examination
};

TheoremReport theorem_report(const PseudoSpace& space, const Tensor5& R, int n,
                             std::uint64_t seed, double tol = 1e-9,
                             double euclidean_bound = 10.0);

}  // namespace szabo
