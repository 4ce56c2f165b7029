#include "szabo/analyzer.hpp"

#include "szabo/curvature.hpp"
#include "szabo/nullcone.hpp"

#include <sstream>

namespace szabo {

using nlohmann::json;

namespace {

json verdict_json(const ConstancyVerdict& v) {
  json j;
  j["status"] = v.status == VerdictStatus::WitnessFound ? "witness-found" : "no-counterexample";
  j["tolerance"] = v.tol;
  j["note"] = "sampling-based; no-counterexample does not certify constancy";
  if (v.witness) {
    j["witness"] = {{"v1", std::vector<double>(v.witness->first.data(),
                                               v.witness->first.data() + v.witness->first.size())},
                    {"v2", std::vector<double>(v.witness->second.data(),
                                               v.witness->second.data() + v.witness->second.size())}};
  }
  return j;
}

json residual_json(const SymmetryResidual& r) {
  return {{"pair_symmetry", r.pair_symmetry},
          {"antisymmetry", r.antisymmetry},
          {"first_bianchi", r.first_bianchi},
          {"second_bianchi", r.second_bianchi},
          {"relative", r.relative}};
}

}  // namespace

TensorFile generate_tensor(Signature sig, std::uint64_t seed, double scale) {
  const int m = sig.dim();
  if (m > 6) throw std::out_of_range("generate_tensor: p+q <= 6 supported");
  TensorFile tf;
  tf.signature = sig;
  tf.seed = seed;
  const Tensor5 T = scale == 0.0 ? Tensor5(m) : random_acdt(m, seed, scale);
  tf.coeffs = T.flat();
  if (scale != 0.0 && !validate_acdt(T).passes(1e-10)) {
    throw std::runtime_error("generate_tensor: projected tensor failed validation");
  }
  return tf;
}

json analyze_tensor(const TensorFile& input, const AnalysisOptions& opts,
                    AnalysisStatus* status) {
  json rep;
  rep["schema_version"] = "szabo-report-v1";
  rep["input"] = {{"format_version", input.format_version},
                  {"signature", {input.signature.p, input.signature.q}}};
  if (input.label) rep["input"]["label"] = *input.label;
  rep["config"] = {{"samples", opts.samples},
                   {"seed", opts.seed},
                   {"tol", opts.tol},
                   {"euclidean_bound", opts.euclidean_bound}};

  const PseudoSpace space(input.signature, opts.tol);
  const Tensor5 T = input.tensor();

  const auto sym = validate_acdt(T);
  rep["symmetry_residuals"] = residual_json(sym);
  if (!sym.passes(opts.tol)) {
    std::string worst = "pair-symmetry";
    double w = sym.pair_symmetry;
    if (sym.antisymmetry > w) { worst = "antisymmetry"; w = sym.antisymmetry; }
    if (sym.first_bianchi > w) { worst = "first-bianchi"; w = sym.first_bianchi; }
    if (sym.second_bianchi > w) { worst = "second-bianchi"; w = sym.second_bianchi; }
    rep["verdict"] = {{"status", "validation-failure"}, {"worst_identity", worst}};
    if (status) *status = AnalysisStatus::ValidationFailure;
    return rep;
  }

  const TheoremReport tr =
      theorem_report(space, T, opts.samples, opts.seed, opts.tol, opts.euclidean_bound);

  json jtr;
  jtr["rank_multisets"] = {{"r_plus", tr.r_plus}, {"r_minus", tr.r_minus}, {"r_0", tr.r_0}};
  jtr["per_point_identities"] = {{"max_self_adjoint_residual", tr.max_self_adjoint_residual},
                                 {"max_kernel_residual", tr.max_kernel_residual},
                                 {"max_oddness_gap", tr.max_oddness_gap}};
  jtr["cross_cone_spectra_match"] = tr.cross_cone_spectra_match;
  jtr["constancy"] = {{"spectral_spacelike", verdict_json(tr.spectral_plus)},
                      {"spectral_timelike", verdict_json(tr.spectral_minus)},
                      {"jordan_spacelike", verdict_json(tr.jordan_plus)},
                      {"jordan_timelike", verdict_json(tr.jordan_minus)},
                      {"jordan_null", verdict_json(tr.jordan_null)}};
  for (const auto& f : tr.flags) {
    jtr["flags"].push_back(
        {{"name", f.name}, {"flag", to_string(f.flag)}, {"explanation", f.explanation}});
  }
  rep["theorem_report"] = jtr;

  // null-cone polynomial pipeline
  json jnc;
  const MatrixCubicPolynomial cubic = szabo_cubic(space, T, opts.tol);
  const auto division = divide_by_form(cubic, space);
  jnc["division_remainder_norm"] = division.remainder_norm;
  jnc["quotient_norm"] = division.quotient.norm();
  if (input.signature.p >= 1 && input.signature.q >= 1) {
    const auto nv = vanishes_on_null_cone(cubic, space, opts.tol, opts.seed + 1);
    jnc["vanishes_on_null_cone"] = {{"algebraic", nv.algebraic},
                                    {"sampled", nv.sampled},
                                    {"routes_agree", nv.agree()},
                                    {"reducible_form_warning", nv.reducible_form_warning}};
  }
  rep["null_cone"] = jnc;

  rep["quarantine"] = tr.quarantine;
  const bool quarantined = !tr.quarantine.empty();
  rep["verdict"] = {{"status", quarantined ? "quarantine" : "clean"},
                    {"flags_consistent_or_na", true}};
  for (const auto& f : tr.flags) {
    if (f.flag == Flag::ViolatedWithWitness) rep["verdict"]["flags_consistent_or_na"] = false;
  }
  if (status) *status = quarantined ? AnalysisStatus::Quarantine : AnalysisStatus::Clean;
  return rep;
}

json dimension_table(int max_m) {
  if (max_m < 1 || max_m > 5) throw std::out_of_range("dimension_table: need 1 <= max_m <= 5");
  json table = json::array();
  for (int m = 1; m <= max_m; ++m) {
    json row;
    row["m"] = m;
    row["act_dim"] = act_dimension(m);
    row["acdt_dim"] = acdt_dimension(m);
    json kernels = json::array();
    for (int p = 0; p <= m; ++p) {
      const PseudoSpace space({p, m - p});
      kernels.push_back({{"signature", {p, m - p}},
                         {"szabo_kernel_dim", szabo_map_kernel_dim(space)}});
    }
    row["szabo_kernel_dims"] = kernels;
    table.push_back(row);
  }
  return table;
}

std::string render_text_report(const json& report) {
  std::ostringstream out;
  const auto& sig = report["input"]["signature"];
  out << "signature (" << sig[0] << "," << sig[1] << ")\n";
  out << "symmetry residual (relative): " << report["symmetry_residuals"]["relative"].dump()
      << "\n";
  out << "verdict: " << report["verdict"]["status"].get<std::string>() << "\n";
  if (report.contains("theorem_report")) {
    const auto& tr = report["theorem_report"];
    out << "rank multisets: r+ " << tr["rank_multisets"]["r_plus"].dump() << " r- "
        << tr["rank_multisets"]["r_minus"].dump() << " r0 "
        << tr["rank_multisets"]["r_0"].dump() << "\n";
    for (const auto& f : tr["flags"]) {
      out << "  " << f["name"].get<std::string>() << ": " << f["flag"].get<std::string>()
          << " (" << f["explanation"].get<std::string>() << ")\n";
    }
  }
  if (report.contains("quarantine")) {
    for (const auto& qe : report["quarantine"])
      out << "quarantine: " << qe.get<std::string>() << "\n";
  }
  return out.str();
}

}  // namespace szabo
