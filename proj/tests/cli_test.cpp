#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "vcsp/generators.hpp"
#include "vcsp/io.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

// Runs the built CLI with the given arguments, capturing combined output.
RunResult run_cli(const std::string& args, const fs::path& dir) {
  const fs::path out_file = dir / "cmd_output.txt";
  const std::string command =
      std::string(VCSP_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / "vcsp_cli_test") {
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

}  // namespace

TEST_CASE("classify prints the full dichotomy") {
  TempDir dir;
  const RunResult r = run_cli("classify", dir.path);
  CHECK(r.exit_code == 0);
  int lines = 0, non_sparsifiable = 0;
  std::istringstream in(r.output);
  for (std::string line; std::getline(in, line);) {
    ++lines;
    if (line.find("NonSparsifiable") != std::string::npos) ++non_sparsifiable;
  }
  CHECK(lines == 16);
  CHECK(non_sparsifiable == 4);
}

TEST_CASE("sparsify with verification succeeds and is byte-deterministic") {
  TempDir dir;
  const fs::path input = dir.path / "in.2lin";
  {
    std::ofstream out(input);
    out << vcsp::to_text(vcsp::random_2lin(12, 80, 0.5, 2.0, 3));
  }
  const std::string args = "sparsify " + input.string() + " --eps 0.25 --seed 7 --verify --out " +
                           (dir.path / "out.2lin").string() + " --report " +
                           (dir.path / "report.json").string();
  const RunResult first = run_cli(args, dir.path);
  CHECK(first.exit_code == 0);
  const std::string out1 = slurp(dir.path / "out.2lin");
  const std::string rep1 = slurp(dir.path / "report.json");
  CHECK(rep1.find("max_rel_error") != std::string::npos);
  CHECK(rep1.find("\"zero_mismatch\": false") != std::string::npos);

  const RunResult second = run_cli(args, dir.path);
  CHECK(second.exit_code == 0);
  CHECK(slurp(dir.path / "out.2lin") == out1);
  CHECK(slurp(dir.path / "report.json") == rep1);

  // the output parses in the same format
  const auto parsed = vcsp::parse_instance(out1);
  CHECK(std::holds_alternative<vcsp::TwoLinSystem>(parsed));
}

TEST_CASE("gamma prints a four-vertex cover for a single edge") {
  TempDir dir;
  const fs::path input = dir.path / "edge.vcsp";
  {
    std::ofstream out(input);
    out << "vcsp 2 1\nCut 0 1 2.5\n";
  }
  const RunResult r = run_cli("gamma " + input.string(), dir.path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("4 vertices") != std::string::npos);
  CHECK(r.output.find("v1 v-2 2.5") != std::string::npos);
}

TEST_CASE("verify compares instance files and reflects failures in the exit code") {
  TempDir dir;
  const vcsp::VcspInstance inst =
      vcsp::random_instance(8, 20, {vcsp::predicates::cut()}, 0.5, 2.0, 5);
  const fs::path a = dir.path / "a.vcsp";
  const fs::path b = dir.path / "b.vcsp";
  {
    std::ofstream out(a);
    out << to_text(inst);
  }
  {
    // scale every weight by 60 percent: every value lands outside eps = 0.25
    vcsp::VcspInstance bad(inst.num_variables());
    for (const auto& c : inst.constraints()) bad.add_constraint(c.u, c.v, c.p, c.weight * 1.6);
    std::ofstream out(b);
    out << to_text(bad);
  }

  CHECK(run_cli("verify " + a.string() + " " + a.string() + " --eps 0.25", dir.path).exit_code ==
        0);
  const RunResult bad_run = run_cli("verify " + a.string() + " " + b.string() + " --eps 0.25",
                                    dir.path);
  CHECK(bad_run.exit_code == 1);
  CHECK(bad_run.output.find("max_rel_error") != std::string::npos);
}

TEST_CASE("usage and parse failures exit with code 2") {
  TempDir dir;
  const fs::path bad = dir.path / "bad.vcsp";
  {
    std::ofstream out(bad);
    out << "vcsp 2 1\nFoo 0 1 1.0\n";
  }
  CHECK(run_cli("sparsify " + bad.string(), dir.path).exit_code == 2);
  CHECK(run_cli("sparsify " + (dir.path / "missing.vcsp").string(), dir.path).exit_code == 2);
  CHECK(run_cli("no-such-command", dir.path).exit_code == 2);
  const RunResult parse_err = run_cli("sparsify " + bad.string(), dir.path);
  CHECK(parse_err.output.find("unknown predicate Foo") != std::string::npos);
}

TEST_CASE("demo command exhibits both witnesses") {
  TempDir dir;
  const RunResult r = run_cli("demo-nonsparsifiable --n 5 --edges 6 --seed 2", dir.path);
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("And") != std::string::npos);
  CHECK(r.output.find("witness") != std::string::npos);
  CHECK(r.output.find("Sum_0 (mod 3)") != std::string::npos);
}

TEST_CASE("sparsify routes wcnf files with wide clauses through the k-SAT path") {
  TempDir dir;
  const fs::path input = dir.path / "in.wcnf";
  {
    std::ofstream out(input);
    out << to_text(vcsp::random_ksat(10, 60, 3, 0.5, 2.0, 11));
  }
  const RunResult r = run_cli("sparsify " + input.string() + " --eps 0.3 --seed 4 --verify " +
                                  "--out " + (dir.path / "out.wcnf").string() + " --report " +
                                  (dir.path / "rep.json").string(),
                              dir.path);
  CHECK(r.exit_code == 0);
  const auto parsed = vcsp::parse_instance(slurp(dir.path / "out.wcnf"));
  CHECK(std::holds_alternative<vcsp::KSatFormula>(parsed));
  CHECK(slurp(dir.path / "rep.json").find("\"name\": \"ksat\"") != std::string::npos);
}

TEST_CASE("bench writes a CSV sweep") {
  TempDir dir;
  const fs::path input = dir.path / "in.vcsp";
  {
    std::ofstream out(input);
    out << to_text(vcsp::random_instance(10, 40, {vcsp::predicates::cut()}, 0.5, 2.0, 9));
  }
  const fs::path csv = dir.path / "sweep.csv";
  const RunResult r = run_cli("bench " + input.string() + " --eps-list 0.5 0.9 --seeds 2 " +
                                  "--verify --out " + csv.string(),
                              dir.path);
  CHECK(r.exit_code == 0);
  const std::string content = slurp(csv);
  CHECK(content.find("eps,seed,total_in,total_out,max_rel_error,zero_mismatch") !=
        std::string::npos);
  int lines = 0;
  for (char ch : content)
    if (ch == '\n') ++lines;
  CHECK(lines == 5);  // header + 2 eps values x 2 seeds
}
