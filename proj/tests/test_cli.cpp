#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_utils.hpp"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

using namespace qconc;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QCONC_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("pure command reports both forms for a GHZ file") {
  const auto path = temp_file("qconc_cli_ghz.json");
  write_state_file(path.string(), ghz_pair(SystemDims::uniform(3, 2), 0, 1));
  const RunResult run = run_cli("pure " + path.string() + " --json");
  CHECK(run.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(run.output);
  CHECK(std::abs(doc["purity_form"].get<double>() - std::sqrt(3.0)) < 1e-9);
  CHECK(std::abs(doc["minor_form"].get<double>() - std::sqrt(3.0)) < 1e-9);
  CHECK(doc["difference"].get<double>() < 1e-9);

  const RunResult human = run_cli("pure " + path.string());
  CHECK(human.exit_code == 0);
  CHECK(human.output.find("1.73205") != std::string::npos);
  std::filesystem::remove(path);
}

TEST_CASE("pure command on a product state reports zero") {
  const auto path = temp_file("qconc_cli_product.json");
  Vector v = Vector::Zero(8);
  v(5) = 1.0;
  write_state_file(path.string(), PureState(v, SystemDims::uniform(3, 2)));
  const RunResult run = run_cli("pure " + path.string() + " --json");
  CHECK(run.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(run.output);
  CHECK(doc["purity_form"].get<double>() < 1e-9);
  CHECK(doc["minor_form"].get<double>() < 1e-9);
  std::filesystem::remove(path);
}

TEST_CASE("pure command rejects bad inputs with exit code 1") {
  const auto path = temp_file("qconc_cli_broken.json");
  std::ofstream(path) << "{ this is not json";
  CHECK(run_cli("pure " + path.string()).exit_code == 1);
  std::filesystem::remove(path);

  const auto density_path = temp_file("qconc_cli_density_for_pure.json");
  write_state_file(density_path.string(), dct_state({0.5, 0.5, 0.0, 0.0, 0.0}));
  CHECK(run_cli("pure " + density_path.string()).exit_code == 1);
  std::filesystem::remove(density_path);

  CHECK(run_cli("pure /nonexistent/state.json").exit_code == 1);
  CHECK(run_cli("nonsense-subcommand").exit_code == 1);
}

TEST_CASE("bound command reproduces the DCT benchmark and round-trips JSON") {
  const auto path = temp_file("qconc_cli_dct.json");
  write_state_file(path.string(), dct_state({1.0 / 6.0, 0.5, 1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0}));
  const RunResult run = run_cli("bound " + path.string() + " --method theorem2 --json");
  CHECK(run.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(run.output);
  CHECK(std::abs(doc["value"].get<double>() - std::sqrt(4.0 / 27.0)) < 1e-9);
  // Machine-readable round trip: value recomputes from value_squared.
  CHECK(std::sqrt(doc["value_squared"].get<double>()) == doc["value"].get<double>());

  // Hierarchy with m = 2 on 2x2x2 degenerates to theorem2.
  const RunResult hier = run_cli("bound " + path.string() + " --method hierarchy --m 2 --json");
  CHECK(hier.exit_code == 0);
  const nlohmann::json hier_doc = nlohmann::json::parse(hier.output);
  CHECK(hier_doc["value"].get<double>() == doc["value"].get<double>());
  std::filesystem::remove(path);
}

TEST_CASE("bound command handles the depolarized family and dims mismatches") {
  const auto path = temp_file("qconc_cli_depol.json");
  write_state_file(path.string(), depolarized_ghz_333(1.0));
  const RunResult run = run_cli("bound " + path.string() + " --method hierarchy --m 2 --json");
  CHECK(run.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(run.output);
  CHECK(doc["value"].get<double>() >= std::sqrt(1.5) - 1e-9);

  // theorem2 needs three qubits; 3x3x3 input must exit 1.
  CHECK(run_cli("bound " + path.string() + " --method theorem2").exit_code == 1);
  // Parallel evaluation returns the same value.
  const RunResult par =
      run_cli("bound " + path.string() + " --method hierarchy --m 2 --parallel --json");
  CHECK(par.exit_code == 0);
  CHECK(std::abs(nlohmann::json::parse(par.output)["value"].get<double>() -
                 doc["value"].get<double>()) < 1e-12);
  std::filesystem::remove(path);
}

TEST_CASE("bound command accepts convex-combination weights") {
  const auto path = temp_file("qconc_cli_dct_weights.json");
  write_state_file(path.string(), dct_state({1.0 / 6.0, 0.5, 1.0 / 18.0, 1.0 / 18.0, 1.0 / 18.0}));
  const RunResult run = run_cli("bound " + path.string() + " --weights 2:1.0 --json");
  CHECK(run.exit_code == 0);
  const nlohmann::json doc = nlohmann::json::parse(run.output);
  CHECK(std::abs(doc["value"].get<double>() - std::sqrt(4.0 / 27.0)) < 1e-9);
  CHECK(doc["components"].size() == 1);
  CHECK(run_cli("bound " + path.string() + " --weights 2:0.5").exit_code == 1);
  CHECK(run_cli("bound " + path.string() + " --weights nonsense").exit_code == 1);
  std::filesystem::remove(path);
}

TEST_CASE("sweep command writes deterministic CSV") {
  const auto out_a = temp_file("qconc_cli_sweep_a.csv");
  const auto out_b = temp_file("qconc_cli_sweep_b.csv");
  const std::string flags = "sweep depol333 --start 0 --stop 1 --steps 2 --output ";
  CHECK(run_cli(flags + out_a.string()).exit_code == 0);
  CHECK(run_cli(flags + out_b.string()).exit_code == 0);
  const std::string a = read_file(out_a);
  CHECK(a == read_file(out_b));

  // Header plus exactly two rows.
  CHECK(std::count(a.begin(), a.end(), '\n') == 3);
  CHECK(a.rfind("x,bound,pt_sum,realign_sum\n", 0) == 0);

  CHECK(run_cli("sweep depol333 --steps 5 --output /nonexistent-dir/out.csv").exit_code == 1);
  CHECK(run_cli("sweep unknown-family --output " + out_a.string()).exit_code == 1);
  std::filesystem::remove(out_a);
  std::filesystem::remove(out_b);
}

TEST_CASE("verify command exits 0 on a small healthy run and 3 under fault injection") {
  const RunResult ok = run_cli("verify --trials 3 --seed 11");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("all checks passed") != std::string::npos);

  const RunResult one = run_cli("verify --trials 1 --seed 11");
  CHECK(one.exit_code == 0);

  const RunResult fault = run_cli("verify --trials 6 --seed 11 --inject-fault coefficient");
  CHECK(fault.exit_code == 3);
  CHECK(fault.output.find("FAIL") != std::string::npos);
  CHECK(fault.output.find("seed=") != std::string::npos);
}
