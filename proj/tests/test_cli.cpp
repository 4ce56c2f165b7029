#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

int run(const std::string& args) {
  const std::string cmd = std::string(SZABO_CLI_PATH) + " " + args;
  const int rc = std::system(cmd.c_str());
#ifdef _WIN32
  return rc;
#else
  return WEXITSTATUS(rc);
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace

TEST_CASE("generate then analyze, clean round trip") {
  CHECK(run("generate --signature 2,2 --seed 11 --output cli_t22.txt 2>/dev/null") == 0);
  CHECK(run("analyze cli_t22.txt --seed 3 --samples 30 --output cli_r22.json "
            "--format structured 2>/dev/null") == 0);
  const std::string rep = slurp("cli_r22.json");
  CHECK(rep.find("\"schema_version\": \"szabo-report-v1\"") != std::string::npos);
  CHECK(rep.find("\"status\": \"clean\"") != std::string::npos);

  // determinism: identical flags give byte-identical reports
  CHECK(run("analyze cli_t22.txt --seed 3 --samples 30 --output cli_r22b.json "
            "--format structured 2>/dev/null") == 0);
  CHECK(slurp("cli_r22b.json") == rep);

  // generation is deterministic too
  CHECK(run("generate --signature 2,2 --seed 11 --output cli_t22b.txt 2>/dev/null") == 0);
  CHECK(slurp("cli_t22b.txt") == slurp("cli_t22.txt"));

  for (const char* f : {"cli_t22.txt", "cli_t22b.txt", "cli_r22.json", "cli_r22b.json"})
    std::remove(f);
}

TEST_CASE("schema failures exit with the schema status") {
  {
    std::ofstream out("cli_trunc.txt");
    out << "szabo-tensor-v1\nsignature 1 1\ncoeffs 32\n1 2 3\n";
  }
  CHECK(run("analyze cli_trunc.txt --seed 1 2>/dev/null") == 3);
  CHECK(run("analyze cli_missing.txt --seed 1 2>/dev/null") == 3);
  std::remove("cli_trunc.txt");
}

TEST_CASE("text report for the zero tensor") {
  CHECK(run("generate --signature 2,3 --seed 4 --scale 0 --output cli_zero.txt "
            "2>/dev/null") == 0);
  CHECK(run("analyze cli_zero.txt --seed 9 --samples 10 --output cli_zero_rep.txt "
            "2>/dev/null") == 0);
  const std::string rep = slurp("cli_zero_rep.txt");
  CHECK(rep.find("signature (2,3)") != std::string::npos);
  CHECK(rep.find("verdict: clean") != std::string::npos);
  CHECK(rep.find("theorem-1.2: consistent") != std::string::npos);
  std::remove("cli_zero.txt");
  std::remove("cli_zero_rep.txt");
}

TEST_CASE("dimension table output") {
  CHECK(run("dimensions --max-m 3 --output cli_dims.txt 2>/dev/null") == 0);
  const std::string dims = slurp("cli_dims.txt");
  CHECK(dims.find("m=3 act_dim=6 acdt_dim=15") != std::string::npos);
  CHECK(dims.find("(1,2):0") != std::string::npos);
  std::remove("cli_dims.txt");
}

TEST_CASE("argument errors") {
  CHECK(run("analyze 2>/dev/null") != 0);                      // missing input and seed
  CHECK(run("generate --signature 2 --seed 1 2>/dev/null") != 0);  // malformed signature
  CHECK(run("2>/dev/null") != 0);                              // no subcommand
}
