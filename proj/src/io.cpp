#include "szabo/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace szabo {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
  throw SchemaError(origin + ":" + std::to_string(line) + ": " + what);
}

}  // namespace

TensorFile parse_tensor_text(std::istream& in, const std::string& origin) {
  TensorFile tf;
  std::string line;
  int lineno = 0;

  if (!std::getline(in, line)) fail(origin, 1, "empty file");
  ++lineno;
  if (line != "szabo-tensor-v1") fail(origin, lineno, "unrecognized format version '" + line + "'");
  tf.format_version = line;

  long expected = -1;
  bool have_sig = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key.empty()) continue;
    if (key == "signature") {
      int p, q;
      if (!(ls >> p >> q) || p < 0 || q < 0 || p + q < 1)
        fail(origin, lineno, "signature needs two nonnegative integers with p+q >= 1");
      tf.signature = {p, q};
      have_sig = true;
    } else if (key == "order") {
      std::string rest;
      std::getline(ls, rest);
      if (rest.find("x y z w v row-major") == std::string::npos)
        fail(origin, lineno, "unsupported index order '" + rest + "'");
    } else if (key == "label") {
      std::string rest;
      std::getline(ls >> std::ws, rest);
      tf.label = rest;
    } else if (key == "seed") {
      std::uint64_t s;
      if (!(ls >> s)) fail(origin, lineno, "seed needs an unsigned integer");
      tf.seed = s;
    } else if (key == "coeffs") {
      if (!have_sig) fail(origin, lineno, "coeffs before signature");
      if (!(ls >> expected)) fail(origin, lineno, "coeffs needs a count");
      const int m = tf.signature.dim();
      const long want = static_cast<long>(m) * m * m * m * m;
      if (expected != want)
        fail(origin, lineno,
             "coeff count " + std::to_string(expected) + " does not equal m^5 = " +
                 std::to_string(want));
      tf.coeffs.resize(want);
      for (long i = 0; i < want; ++i) {
        if (!(in >> tf.coeffs(i)))
          fail(origin, lineno, "coefficient list truncated at entry " + std::to_string(i));
      }
      double extra;
      if (in >> extra) fail(origin, lineno, "trailing data after coefficient list");
      return tf;
    } else {
      fail(origin, lineno, "unknown field '" + key + "'");
    }
  }
  fail(origin, lineno, "missing coeffs section");
}

void write_tensor_text(const TensorFile& tf, std::ostream& out) {
  out << "szabo-tensor-v1\n";
  out << "signature " << tf.signature.p << " " << tf.signature.q << "\n";
  out << "order x y z w v row-major\n";
  if (tf.label) out << "label " << *tf.label << "\n";
  if (tf.seed) out << "seed " << *tf.seed << "\n";
  out << "coeffs " << tf.coeffs.size() << "\n";
  out << std::setprecision(17);
  for (long i = 0; i < tf.coeffs.size(); ++i) {
    out << tf.coeffs(i) << ((i + 1) % 5 == 0 ? "\n" : " ");
  }
  if (tf.coeffs.size() % 5 != 0) out << "\n";
}

TensorFile read_tensor_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path + ": cannot open file");
  return parse_tensor_text(in, path);
}

void write_tensor_file(const TensorFile& tf, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw SchemaError(path + ": cannot open for writing");
  write_tensor_text(tf, out);
}

}  // namespace szabo
