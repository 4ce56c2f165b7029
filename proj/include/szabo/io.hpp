#pragma once

#include "szabo/pseudo_space.hpp"
#include "szabo/tensor.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

namespace szabo {

/// Malformed tensor file: carries the offending line/field.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plain-text coefficient exchange format.  The header states the slot
/// order explicitly; slot-order bugs are the dominant failure mode in
/// rank-5 tensor code.
struct TensorFile {
  Signature signature;
  std::string format_version{"szabo-tensor-v1"};
  Eigen::VectorXd coeffs;  // m^5 reals, row-major (x,y,z,w;v)
  std::optional<std::string> label;
  std::optional<std::uint64_t> seed;

  Tensor5 tensor() const { return Tensor5(signature.dim(), coeffs); }
};

TensorFile read_tensor_file(const std::string& path);
void write_tensor_file(const TensorFile& tf, const std::string& path);

TensorFile parse_tensor_text(std::istream& in, const std::string& origin);
void write_tensor_text(const TensorFile& tf, std::ostream& out);

}  // namespace szabo
