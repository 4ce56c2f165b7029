#include "szabo/spectral.hpp"
#include "szabo/nullcone.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace szabo {

const char* to_string(Cone c) {
  switch (c) {
    case Cone::Spacelike: return "spacelike";
    case Cone::Timelike: return "timelike";
    case Cone::Null: return "null";
  }
  return "?";
}

const char* to_string(Flag f) {
  switch (f) {
    case Flag::Consistent: return "consistent";
    case Flag::ViolatedWithWitness: return "violated-with-witness";
    case Flag::NotApplicable: return "not-applicable";
  }
  return "?";
}

int adams_number(int q) {
  if (q <= 0) throw std::invalid_argument("adams_number: q must be positive");
  int ell = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++ell;
  }
  static const int base[4] = {0, 1, 3, 7};
  return base[ell % 4] + 8 * (ell / 4);
}

SampleSet sample_cone(const PseudoSpace& space, Cone cone, int n, std::uint64_t seed,
                      double euclidean_bound) {
  const int p = space.signature().p;
  const int q = space.signature().q;
  const int m = space.dim();
  if ((cone == Cone::Spacelike && q < 1) || (cone == Cone::Timelike && p < 1) ||
      (cone == Cone::Null && (p < 1 || q < 1))) {
    throw std::invalid_argument(std::string("sample_cone: ") + to_string(cone) +
                                " cone is empty in signature (" + std::to_string(p) + "," +
                                std::to_string(q) + ")");
  }
  SampleSet out{cone, {}, seed, euclidean_bound};
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unif(0.5, std::min(euclidean_bound, 2.0));
  while (static_cast<int>(out.vectors.size()) < 2 * n) {
    Vector v(m);
    for (int i = 0; i < m; ++i) v(i) = gauss(rng);
    if (cone == Cone::Null) {
      const double tn = v.head(p).norm(), sn = v.tail(q).norm();
      if (tn < 1e-8 || sn < 1e-8) continue;
      v.head(p) *= sn / tn;
      v *= unif(rng) / v.norm();
    } else {
      const double g = inner(space, v, v);
      if (cone == Cone::Spacelike && g <= 0.0) continue;
      if (cone == Cone::Timelike && g >= 0.0) continue;
      v /= std::sqrt(std::abs(g));
      if (v.norm() > euclidean_bound) continue;
    }
    out.vectors.push_back(v);
    out.vectors.push_back(-v);
  }
  return out;
}

namespace {

double spectral_scale(const std::vector<Matrix>& ops) {
  double s = 1.0;
  for (const auto& M : ops) s = std::max(s, M.norm());
  return s;
}

}  // namespace

ConstancyVerdict spectral_constancy(const PseudoSpace& space, const Tensor5& R, Cone cone,
                                    int n, std::uint64_t seed, double tol) {
  const auto samples = sample_cone(space, cone, n, seed);
  ConstancyVerdict out;
  out.tol = tol;
  std::vector<Matrix> ops;
  for (size_t i = 0; i < samples.vectors.size(); i += 2)
    ops.push_back(szabo_operator(space, R, samples.vectors[i], tol).matrix);
  const double scale = spectral_scale(ops);

  std::vector<Spectrum> spectra;
  for (const auto& M : ops) spectra.push_back(spectrum_of(M, tol));

  // the cone contains -v; constancy forces the spectrum to be symmetric
  // under negation (the odd-operator rule, rather than a naive comparison)
  if (!same_spectrum(spectra[0], negated(spectra[0]), tol, scale)) {
    out.status = VerdictStatus::WitnessFound;
    out.witness = {samples.vectors[0], samples.vectors[1]};
    return out;
  }
  for (size_t i = 1; i < spectra.size(); ++i) {
    if (!same_spectrum(spectra[i], spectra[0], tol, scale)) {
      out.status = VerdictStatus::WitnessFound;
      out.witness = {samples.vectors[2 * i], samples.vectors[0]};
      return out;
    }
  }
  return out;
}

ConstancyVerdict jordan_constancy(const PseudoSpace& space, const Tensor5& R, Cone cone,
                                  int n, std::uint64_t seed, double tol) {
  const auto samples = sample_cone(space, cone, n, seed);
  ConstancyVerdict out;
  out.tol = tol;
  std::vector<Matrix> ops;
  for (size_t i = 0; i < samples.vectors.size(); i += 2)
    ops.push_back(szabo_operator(space, R, samples.vectors[i], tol).matrix);
  const double scale = spectral_scale(ops);

  std::vector<JordanStructure> structures;
  for (const auto& M : ops)
    structures.push_back(
        jordan_structure(jordan_decompose(space, {M, space.signature()}, tol)));

  if (!same_structure(structures[0], negated(structures[0]), tol, scale)) {
    out.status = VerdictStatus::WitnessFound;
    out.witness = {samples.vectors[0], samples.vectors[1]};
    return out;
  }
  for (size_t i = 1; i < structures.size(); ++i) {
    if (!same_structure(structures[i], structures[0], tol, scale)) {
      out.status = VerdictStatus::WitnessFound;
      out.witness = {samples.vectors[2 * i], samples.vectors[0]};
      return out;
    }
  }
  return out;
}

Vector char_poly_P(const PseudoSpace& space, const Tensor5& R, const Vector& v,
                   double tol) {
  const int m = space.dim();
  const auto type = causal_type(space, v);
  if (type == CausalType::Null || type == CausalType::Zero) {
    throw std::domain_error("char_poly_P: v must be non-null and nonzero");
  }
  const double vv = inner(space, v, v);
  const Matrix S = szabo_operator(space, R, v, tol).matrix;
  const Matrix P = (S * S) / (vv * vv * vv);

  // Faddeev-LeVerrier for det(t*Id - P), then flip sign for det(P - t*Id)
  Vector c = Vector::Zero(m + 1);
  c(m) = 1.0;
  Matrix M = Matrix::Identity(m, m);
  for (int k = 1; k <= m; ++k) {
    M = P * M;
    c(m - k) = -M.trace() / k;
    M += c(m - k) * Matrix::Identity(m, m);
  }
  if (m % 2 != 0) c = -c;
  return c;  // c(k) multiplies t^k
}

std::optional<Vector> rank_transfer_witness(const PseudoSpace& space, const Tensor5& R,
                                            const Vector& v0, Cone target_cone, int n,
                                            std::uint64_t seed, double tol) {
  const int m = space.dim();
  const Matrix M0 = szabo_operator(space, R, v0, tol).matrix;
  const int r = rank_of(M0, tol);
  if (r == 0) {
    throw std::invalid_argument("rank_transfer_witness: S(v0) has rank 0");
  }

  // full-pivot elimination to pick the rows/columns of an invertible minor
  Matrix W = M0;
  std::vector<int> rows, cols;
  std::vector<bool> used_r(m, false), used_c(m, false);
  for (int step = 0; step < r; ++step) {
    int bi = -1, bj = -1;
    double best = 0.0;
    for (int i = 0; i < m; ++i) {
      if (used_r[i]) continue;
      for (int j = 0; j < m; ++j) {
        if (used_c[j]) continue;
        if (std::abs(W(i, j)) > best) {
          best = std::abs(W(i, j));
          bi = i;
          bj = j;
        }
      }
    }
    if (bi < 0 || best == 0.0) break;
    rows.push_back(bi);
    cols.push_back(bj);
    used_r[bi] = used_c[bj] = true;
    for (int i = 0; i < m; ++i) {
      if (used_r[i] || W(i, bj) == 0.0) continue;
      W.row(i) -= (W(i, bj) / W(bi, bj)) * W.row(bi);
    }
  }

  auto minor_det = [&](const Matrix& M) {
    Matrix sub(rows.size(), cols.size());
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) sub(i, j) = M(rows[i], cols[j]);
    return sub.determinant();
  };

  const auto samples = sample_cone(space, target_cone, n, seed);
  for (const auto& v : samples.vectors) {
    const Matrix M = szabo_operator(space, R, v, tol).matrix;
    if (std::abs(minor_det(M)) > tol) return v;
  }
  return std::nullopt;
}

namespace {

Spectrum rotated_by_i(const Spectrum& s) {
  // lambda -> i*lambda, folded back to Im >= 0
  Spectrum out;
  for (const auto& it : s.items) {
    std::complex<double> w(-it.lambda.imag(), it.lambda.real());
    if (w.imag() < 0.0) w = std::conj(w);
    out.items.push_back({w, it.multiplicity});
  }
  std::sort(out.items.begin(), out.items.end(), [](const auto& a, const auto& b) {
    if (a.lambda.real() != b.lambda.real()) return a.lambda.real() < b.lambda.real();
    return a.lambda.imag() < b.lambda.imag();
  });
  return out;
}

bool on_real_or_imag_axis(const std::complex<double>& z, double tol, double scale) {
  return std::abs(z.real()) <= tol * scale || std::abs(z.imag()) <= tol * scale;
}

}  // namespace

TheoremReport theorem_report(const PseudoSpace& space, const Tensor5& R, int n,
                             std::uint64_t seed, double tol, double euclidean_bound) {
  if (!validate_acdt(R).passes(tol)) {
    throw std::invalid_argument("theorem_report: tensor fails symmetry validation");
  }
  const int p = space.signature().p;
  const int q = space.signature().q;
  TheoremReport rep;
  const bool is_zero = R.flat().cwiseAbs().maxCoeff() <= tol;

  std::vector<Matrix> plus_ops, minus_ops, null_ops;
  double scale = 1.0;
  auto analyze_cone = [&](Cone cone, std::vector<Matrix>& ops, std::vector<int>& ranks) {
    const auto samples = sample_cone(space, cone, n, seed, euclidean_bound);
    for (size_t i = 0; i < samples.vectors.size(); i += 2) {
      const Vector& v = samples.vectors[i];
      const Matrix M = szabo_operator(space, R, v, tol).matrix;
      const Matrix Mneg = szabo_operator(space, R, -v, tol).matrix;
      const auto sa = is_self_adjoint(space, M, tol);
      rep.max_self_adjoint_residual = std::max(rep.max_self_adjoint_residual, sa.residual);
      const double mn = std::max(1.0, M.norm() * v.norm());
      rep.max_kernel_residual = std::max(rep.max_kernel_residual, (M * v).norm() / mn);
      rep.max_oddness_gap =
          std::max(rep.max_oddness_gap, (M + Mneg).cwiseAbs().maxCoeff());
      ops.push_back(M);
      ranks.push_back(rank_of(M, tol));
      scale = std::max(scale, M.norm());
    }
  };
  if (q >= 1) analyze_cone(Cone::Spacelike, plus_ops, rep.r_plus);
  if (p >= 1) analyze_cone(Cone::Timelike, minus_ops, rep.r_minus);
  if (p >= 1 && q >= 1) analyze_cone(Cone::Null, null_ops, rep.r_0);

  if (q >= 1) {
    rep.spectral_plus = spectral_constancy(space, R, Cone::Spacelike, n, seed, tol);
    rep.jordan_plus = jordan_constancy(space, R, Cone::Spacelike, n, seed, tol);
  }
  if (p >= 1) {
    rep.spectral_minus = spectral_constancy(space, R, Cone::Timelike, n, seed, tol);
    rep.jordan_minus = jordan_constancy(space, R, Cone::Timelike, n, seed, tol);
  }
  if (p >= 1 && q >= 1) {
    rep.jordan_null = jordan_constancy(space, R, Cone::Null, n, seed, tol);
  }

  if (!plus_ops.empty() && !minus_ops.empty()) {
    rep.cross_cone_spectra_match =
        same_spectrum(spectrum_of(plus_ops[0], tol),
                      rotated_by_i(spectrum_of(minus_ops[0], tol)), tol, scale);
  }

  const bool plus_witness = q >= 1 && (rep.spectral_plus.status == VerdictStatus::WitnessFound ||
                                       rep.jordan_plus.status == VerdictStatus::WitnessFound);
  const bool minus_witness = p >= 1 && (rep.spectral_minus.status == VerdictStatus::WitnessFound ||
                                        rep.jordan_minus.status == VerdictStatus::WitnessFound);
  const bool null_witness =
      p >= 1 && q >= 1 && rep.jordan_null.status == VerdictStatus::WitnessFound;

  auto constant_rank = [](const std::vector<int>& rs) {
    return !rs.empty() && std::all_of(rs.begin(), rs.end(),
                                      [&](int r) { return r == rs.front(); });
  };
  auto add_flag = [&](std::string name, Flag f, std::string why) {
    rep.flags.push_back({std::move(name), f, std::move(why)});
  };
  auto quarantine = [&](const std::string& what) {
    rep.quarantine.push_back(what);
  };

  if (is_zero) {
    for (const char* name : {"theorem-1.2", "theorem-1.3", "theorem-1.4", "theorem-1.5",
                             "theorem-1.6", "lemma-5.1"})
      add_flag(name, Flag::Consistent, "zero tensor: all conclusions hold trivially");
    return rep;
  }

  // Theorem 1.2: p <= 1 (or q <= 1 by metric reversal) forces a Szabo
  // tensor to vanish; a nonzero tensor must fail constancy sampling.
  if (p <= 1 || q <= 1) {
    const bool any_witness = plus_witness || minus_witness;
    if (any_witness) {
      add_flag("theorem-1.2", Flag::Consistent,
               "nonzero tensor is not Szabo (constancy witness found)");
    } else {
      add_flag("theorem-1.2", Flag::ViolatedWithWitness,
               "nonzero tensor survived constancy sampling in a vanishing signature");
      quarantine("theorem-1.2: conjecture-challenging candidate; constancy at n=" +
                 std::to_string(n) + " may be a tolerance artifact");
    }
  } else {
    add_flag("theorem-1.2", Flag::NotApplicable, "requires p <= 1 or q <= 1");
  }

  // Theorem 1.3: spectral conclusions for Szabo tensors with p,q >= 2.
  if (p >= 2 && q >= 2) {
    if (plus_witness || minus_witness) {
      add_flag("theorem-1.3", Flag::NotApplicable, "not Szabo: constancy witness found");
    } else {
      bool ok = rep.cross_cone_spectra_match;
      std::string why;
      for (const auto* ops : {&plus_ops, &minus_ops}) {
        const auto spec = spectrum_of(ops->front(), tol);
        for (const auto& it : spec.items)
          if (!on_real_or_imag_axis(it.lambda, tol, scale)) ok = false;
      }
      if (p != q) {
        const auto& imag_side = p < q ? plus_ops : minus_ops;
        const auto& real_side = p < q ? minus_ops : plus_ops;
        for (const auto& it : spectrum_of(imag_side.front(), tol).items)
          if (std::abs(it.lambda.real()) > tol * scale) ok = false;
        for (const auto& it : spectrum_of(real_side.front(), tol).items)
          if (std::abs(it.lambda.imag()) > tol * scale) ok = false;
      }
      add_flag("theorem-1.3", ok ? Flag::Consistent : Flag::ViolatedWithWitness,
               ok ? "spectral containments hold on samples"
                  : "spectral containment failed despite no constancy witness");
      if (!ok) quarantine("theorem-1.3: containment failure; likely sampled false constancy");
    }
  } else {
    add_flag("theorem-1.3", Flag::NotApplicable, "requires p >= 2 and q >= 2");
  }

  // Theorem 1.4: spacelike Jordan Szabo, p < q.
  if (p < q && q >= 1) {
    if (q >= 1 && rep.jordan_plus.status == VerdictStatus::WitnessFound) {
      add_flag("theorem-1.4", Flag::NotApplicable,
               "not spacelike Jordan Szabo: witness found");
    } else if (q % 2 == 1) {
      add_flag("theorem-1.4", Flag::ViolatedWithWitness,
               "q odd: nonzero tensor survived Jordan constancy sampling");
      quarantine("theorem-1.4(3): conjecture-challenging candidate at q odd");
    } else {
      bool ok = true;
      std::string why = "Jordan simplicity";
      for (const auto& M : plus_ops) {
        const auto dec = jordan_decompose(space, {M, space.signature()}, tol);
        for (const auto& e : dec.entries)
          for (int b : e.block_sizes)
            if (b != 1) ok = false;
      }
      if (p < q - adams_number(q)) {
        why += " and rank bound 2*nu(q)";
        for (int r : rep.r_plus)
          if (r > 2 * adams_number(q)) ok = false;
      }
      add_flag("theorem-1.4", ok ? Flag::Consistent : Flag::ViolatedWithWitness,
               why + (ok ? " hold on samples" : " failed on samples"));
      if (!ok) quarantine("theorem-1.4: conclusion failure without constancy witness");
    }
  } else {
    add_flag("theorem-1.4", Flag::NotApplicable, "requires p < q");
  }

  // Theorem 1.5: both spacelike and timelike Jordan Szabo, nonzero.
  if (p >= 1 && q >= 1) {
    if (rep.jordan_plus.status == VerdictStatus::WitnessFound ||
        rep.jordan_minus.status == VerdictStatus::WitnessFound) {
      add_flag("theorem-1.5", Flag::NotApplicable, "not two-sided Jordan Szabo");
    } else {
      const bool plus_const = constant_rank(rep.r_plus);
      const bool minus_const = constant_rank(rep.r_minus);
      bool ok = plus_const && minus_const && rep.r_plus.front() == rep.r_minus.front();
      add_flag("theorem-1.5", ok ? Flag::Consistent : Flag::ViolatedWithWitness,
               ok ? "r+ = r- on samples" : "observed rank mismatch between cones");
      if (!ok) quarantine("theorem-1.5: r+ != r- without constancy witness");
    }
  } else {
    add_flag("theorem-1.5", Flag::NotApplicable, "requires both pseudo-spheres nonempty");
  }

  // Theorem 1.6 and Lemma 5.1: three-cone Jordan Szabo.
  if (p >= 1 && q >= 1) {
    if (plus_witness || minus_witness || null_witness) {
      add_flag("theorem-1.6", Flag::NotApplicable, "not Jordan Szabo: witness found");
    } else {
      const bool const_ranks = constant_rank(rep.r_0) && constant_rank(rep.r_plus);
      bool ok = const_ranks && rep.r_0.front() < rep.r_plus.front();
      if (q % 4 == 2 && p < q - 1) {
        ok = false;  // nonzero tensor in a vanishing signature
        add_flag("theorem-1.6", Flag::ViolatedWithWitness,
                 "q = 2 mod 4, p < q-1: nonzero tensor survived sampling");
        quarantine("theorem-1.6(2): conjecture-challenging candidate");
      } else {
        add_flag("theorem-1.6", ok ? Flag::Consistent : Flag::ViolatedWithWitness,
                 ok ? "r0 < r+ on samples" : "rank comparison failed on samples");
        if (!ok) quarantine("theorem-1.6(1): rank comparison failure");
      }
    }
    if (plus_witness || minus_witness || null_witness) {
      // parity of a constant rank is only forced in the equivariant
      // (Jordan Szabo) setting, which the witnesses have ruled out
      add_flag("lemma-5.1", Flag::NotApplicable, "not Jordan Szabo: witness found");
    } else {
    const auto er = even_rank_check(rep.r_0);
    add_flag("lemma-5.1",
             er == EvenRankFlag::Consistent
                 ? Flag::Consistent
                 : (er == EvenRankFlag::NotApplicable ? Flag::NotApplicable
                                                      : Flag::ViolatedWithWitness),
             er == EvenRankFlag::NotApplicable ? "null-cone rank not constant on samples"
                                               : "null-cone rank parity");
    if (er == EvenRankFlag::ViolatedWithWitness)
      quarantine("lemma-5.1: odd constant null-cone rank; numerically suspect");
    }
  } else {
    add_flag("theorem-1.6", Flag::NotApplicable, "requires a nonempty null cone");
    add_flag("lemma-5.1", Flag::NotApplicable, "requires a nonempty null cone");
  }

  return rep;
}

}  // namespace szabo
