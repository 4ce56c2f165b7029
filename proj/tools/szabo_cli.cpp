#include "szabo/analyzer.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct SigOption {
  int p{0}, q{0};
};

void add_signature_flag(CLI::App* cmd, SigOption& sig, bool required = true) {
  auto* opt = cmd->add_option_function<std::string>(
      "--signature",
      [&sig](const std::string& s) {
        const auto comma = s.find(',');
        if (comma == std::string::npos)
          throw CLI::ValidationError("--signature", "expected P,Q");
        sig.p = std::stoi(s.substr(0, comma));
        sig.q = std::stoi(s.substr(comma + 1));
        if (sig.p < 0 || sig.q < 0 || sig.p + sig.q < 1)
          throw CLI::ValidationError("--signature", "need p >= 0, q >= 0, p+q >= 1");
      },
      "signature as P,Q (timelike,spacelike)");
  if (required) opt->required();
}

void emit(const std::string& body, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << body;
  } else {
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot open output file " + output);
    out << body;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Szabo operator spectral analyzer"};
  app.require_subcommand(1);

  SigOption sig;
  std::uint64_t seed = 0;
  double scale = 1.0, tol = 1e-9, bound = 10.0;
  int samples = 100, max_m = 5;
  std::string input, output, format = "text";

  auto* gen = app.add_subcommand("generate", "emit a random projected tensor file");
  add_signature_flag(gen, sig);
  gen->add_option("--seed", seed, "generator seed")->required();
  gen->add_option("--scale", scale, "coefficient scale (0 gives the zero tensor)");
  gen->add_option("--output", output, "output path, - for stdout");

  auto* ana = app.add_subcommand("analyze", "run the full analysis pipeline");
  ana->add_option("input", input, "tensor file")->required();
  ana->add_option("--samples", samples, "samples per cone");
  ana->add_option("--seed", seed, "sampling seed")->required();
  ana->add_option("--tol", tol, "tolerance");
  ana->add_option("--bound", bound, "Euclidean norm cap for samples");
  ana->add_option("--output", output, "output path, - for stdout");
  ana->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  auto* dim = app.add_subcommand("dimensions", "symmetry-class dimension table");
  dim->add_option("--max-m", max_m, "largest dimension")->check(CLI::Range(1, 5));
  dim->add_option("--output", output, "output path, - for stdout");
  dim->add_option("--format", format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      const auto tf = szabo::generate_tensor({sig.p, sig.q}, seed, scale);
      std::ostringstream body;
      szabo::write_tensor_text(tf, body);
      emit(body.str(), output);
      return 0;
    }
    if (ana->parsed()) {
      szabo::TensorFile tf;
      try {
        tf = szabo::read_tensor_file(input);
      } catch (const szabo::SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return static_cast<int>(szabo::AnalysisStatus::SchemaError);
      }
      szabo::AnalysisStatus status = szabo::AnalysisStatus::Clean;
      const auto report = szabo::analyze_tensor(tf, {samples, seed, tol, bound}, &status);
      emit(format == "structured" ? report.dump(2) + "\n"
                                  : szabo::render_text_report(report),
           output);
      return static_cast<int>(status);
    }
    if (dim->parsed()) {
      const auto table = szabo::dimension_table(max_m);
      if (format == "structured") {
        emit(table.dump(2) + "\n", output);
      } else {
        std::ostringstream body;
        for (const auto& row : table) {
          body << "m=" << row["m"] << " act_dim=" << row["act_dim"]
               << " acdt_dim=" << row["acdt_dim"] << " kernel_dims=[";
          bool first = true;
          for (const auto& k : row["szabo_kernel_dims"]) {
            if (!first) body << " ";
            first = false;
            body << "(" << k["signature"][0] << "," << k["signature"][1]
                 << "):" << k["szabo_kernel_dim"];
          }
          body << "]\n";
        }
        emit(body.str(), output);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
