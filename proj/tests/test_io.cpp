#include "szabo/analyzer.hpp"
#include "szabo/io.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace szabo;

TEST_CASE("tensor text round trip") {
  TensorFile tf = generate_tensor({2, 3}, 77, 1.0);
  tf.label = "round-trip probe";

  std::ostringstream out;
  write_tensor_text(tf, out);

  std::istringstream in(out.str());
  const TensorFile back = parse_tensor_text(in, "mem");
  CHECK(back.signature.p == 2);
  CHECK(back.signature.q == 3);
  CHECK(back.format_version == "szabo-tensor-v1");
  REQUIRE(back.label.has_value());
  CHECK(*back.label == "round-trip probe");
  REQUIRE(back.seed.has_value());
  CHECK(*back.seed == 77);
  CHECK(back.coeffs == tf.coeffs);  // 17 significant digits round-trip doubles

  // writing is deterministic
  std::ostringstream again;
  write_tensor_text(tf, again);
  CHECK(out.str() == again.str());
}

TEST_CASE("generator determinism and validation") {
  const TensorFile a = generate_tensor({2, 2}, 5, 1.0);
  const TensorFile b = generate_tensor({2, 2}, 5, 1.0);
  CHECK(a.coeffs == b.coeffs);
  CHECK(validate_acdt(a.tensor()).passes(1e-10));

  const TensorFile z = generate_tensor({2, 2}, 5, 0.0);
  CHECK(z.coeffs.norm() == 0.0);

  CHECK_THROWS_AS(generate_tensor({4, 3}, 1, 1.0), std::out_of_range);
}

TEST_CASE("schema errors carry line and field") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_tensor_text(in, "mem");
  };

  CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("empty file"), SchemaError);
  CHECK_THROWS_WITH_AS(parse("tensor-v0\n"), doctest::Contains("unrecognized format"),
                       SchemaError);
  CHECK_THROWS_WITH_AS(parse("szabo-tensor-v1\nsignature 1 1\nbogus 3\n"),
                       doctest::Contains("unknown field 'bogus'"), SchemaError);
  CHECK_THROWS_WITH_AS(parse("szabo-tensor-v1\ncoeffs 32\n"),
                       doctest::Contains("coeffs before signature"), SchemaError);
  CHECK_THROWS_WITH_AS(parse("szabo-tensor-v1\nsignature 1 1\ncoeffs 7\n"),
                       doctest::Contains("does not equal m^5"), SchemaError);
  CHECK_THROWS_WITH_AS(parse("szabo-tensor-v1\nsignature 1 1\ncoeffs 32\n1 2 3\n"),
                       doctest::Contains("truncated at entry 3"), SchemaError);
  CHECK_THROWS_WITH_AS(parse("szabo-tensor-v1\nsignature 1 1\n"),
                       doctest::Contains("missing coeffs"), SchemaError);
  CHECK_THROWS_WITH_AS(parse("szabo-tensor-v1\nsignature -1 2\n"),
                       doctest::Contains("nonnegative"), SchemaError);

  // trailing data after a complete list
  std::ostringstream full;
  write_tensor_text(generate_tensor({1, 1}, 1, 1.0), full);
  CHECK_THROWS_WITH_AS(parse(full.str() + "9.9\n"), doctest::Contains("trailing data"),
                       SchemaError);

  // line numbers point at the offending line
  CHECK_THROWS_WITH_AS(parse("szabo-tensor-v1\nsignature 1 1\nbogus 3\n"),
                       doctest::Contains("mem:3"), SchemaError);
}

TEST_CASE("file read and write") {
  const std::string path = "io_probe_tensor.txt";
  const TensorFile tf = generate_tensor({1, 2}, 9, 1.0);
  write_tensor_file(tf, path);
  const TensorFile back = read_tensor_file(path);
  CHECK(back.coeffs == tf.coeffs);
  CHECK(back.signature.p == 1);
  std::remove(path.c_str());

  CHECK_THROWS_WITH_AS(read_tensor_file("does_not_exist.txt"),
                       doctest::Contains("cannot open"), SchemaError);
}

TEST_CASE("analysis report shape and determinism") {
  const TensorFile zero = generate_tensor({2, 3}, 1, 0.0);
  AnalysisStatus status = AnalysisStatus::SchemaError;
  const auto rep = analyze_tensor(zero, {20, 2, 1e-9, 10.0}, &status);
  CHECK(status == AnalysisStatus::Clean);
  CHECK(rep["schema_version"] == "szabo-report-v1");
  CHECK(rep["verdict"]["status"] == "clean");
  CHECK(rep["symmetry_residuals"]["relative"] == 0.0);
  for (const auto& f : rep["theorem_report"]["flags"]) CHECK(f["flag"] == "consistent");
  for (const auto& r : rep["theorem_report"]["rank_multisets"]["r_plus"]) CHECK(r == 0);

  const auto rep2 = analyze_tensor(zero, {20, 2, 1e-9, 10.0}, nullptr);
  CHECK(rep.dump() == rep2.dump());

  // symmetry-validation failure path
  TensorFile bad = zero;
  bad.coeffs(0) = 1.0;  // diagonal entry breaks antisymmetry
  const auto repb = analyze_tensor(bad, {20, 2, 1e-9, 10.0}, &status);
  CHECK(status == AnalysisStatus::ValidationFailure);
  CHECK(repb["verdict"]["status"] == "validation-failure");
  CHECK(repb["verdict"]["worst_identity"] == "antisymmetry");
}

TEST_CASE("dimension table") {
  const auto table = dimension_table(3);
  REQUIRE(table.size() == 3);
  CHECK(table[0]["act_dim"] == 0);
  CHECK(table[0]["acdt_dim"] == 0);
  CHECK(table[1]["acdt_dim"] == 2);
  CHECK(table[2]["act_dim"] == 6);
  CHECK(table[2]["acdt_dim"] == 15);
  for (const auto& row : table)
    for (const auto& k : row["szabo_kernel_dims"]) CHECK(k["szabo_kernel_dim"] == 0);
  CHECK_THROWS_AS(dimension_table(6), std::out_of_range);
}
