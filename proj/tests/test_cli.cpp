#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string output;
};

CliResult run_cli(const std::string& args) {
  const std::string command =
      std::string(WALKCOVER_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[512];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

fs::path out_dir() {
  static const fs::path dir = [] {
    const fs::path d = fs::temp_directory_path() /
                       ("walkcover_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("coverage on the 5-node ring") {
  const fs::path csv = out_dir() / "ring_cov.csv";
  const auto result = run_cli(
      "coverage --topology ring --cols 5 --start 2 --model uniform "
      "--target 60 --csv " +
      csv.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output == "coverage_time=3\n");
  CHECK(slurp(csv) ==
        "step,start_mass,gamma,C\n"
        "0,0,1,1\n"
        "1,0.5,1,2\n"
        "2,0.5,0.5,2.5\n"
        "3,0.625,0.5,3\n");
}

TEST_CASE("coverage reports truncation with exit code 2") {
  const fs::path csv = out_dir() / "trunc.csv";
  const auto result = run_cli(
      "coverage --rows 5 --cols 5 --model biased --p 1 --target 99 "
      "--max-steps 2000 --csv " +
      csv.string());
  CHECK(result.exit_code == 2);
  CHECK(result.output == "truncated\n");
}

TEST_CASE("bias 0 covers the 5x5 torus in about 55 steps") {
  const fs::path csv = out_dir() / "bias0.csv";
  const auto result = run_cli(
      "coverage --rows 5 --cols 5 --model biased --p 0 --target 99 --csv " +
      csv.string());
  CHECK(result.exit_code == 0);
  REQUIRE(result.output.starts_with("coverage_time="));
  const int steps = std::stoi(result.output.substr(14));
  CHECK(steps >= 50);
  CHECK(steps <= 61);
}

TEST_CASE("r=1 reproduces the uniform coverage time") {
  const fs::path csv = out_dir() / "r1.csv";
  const auto uniform = run_cli(
      "coverage --rows 5 --cols 5 --model uniform --target 99 --csv " +
      csv.string());
  const auto mixed = run_cli(
      "coverage --rows 5 --cols 5 --model biased-random --p 0.5 --r 1 "
      "--target 99 --csv " +
      csv.string());
  CHECK(uniform.exit_code == 0);
  CHECK(mixed.exit_code == 0);
  CHECK(uniform.output == mixed.output);
  CHECK(uniform.output.starts_with("coverage_time="));
}

TEST_CASE("usage errors exit with code 1") {
  CHECK(run_cli("coverage --target 0").exit_code == 1);
  CHECK(run_cli("coverage --no-such-flag").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
  CHECK(run_cli("coverage --topology hexagon").exit_code == 1);
  CHECK(run_cli("validate --runs 50 --csv /dev/null").exit_code == 1);
  CHECK(run_cli("coverage --topology ring --cols 5 --model biased-random "
                "--p 0.5 --r 0.1 --csv /dev/null")
            .exit_code == 1);
}

TEST_CASE("help exits cleanly") {
  const auto result = run_cli("--help");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("sweep-bias") != std::string::npos);
}

TEST_CASE("crossover reports a missing crossing with exit code 2") {
  const fs::path csv = out_dir() / "ring_cross.csv";
  const auto result = run_cli(
      "crossover --topology ring --cols 9 --max-steps 3000 --csv " +
      csv.string());
  CHECK(result.exit_code == 2);
  CHECK(result.output == "no cross-over in range\n");
}

TEST_CASE("sweep-bias writes deterministic CSV and SVG") {
  const fs::path csv1 = out_dir() / "sweep1.csv";
  const fs::path svg1 = out_dir() / "sweep1.svg";
  const fs::path csv2 = out_dir() / "sweep2.csv";
  const fs::path svg2 = out_dir() / "sweep2.svg";
  const std::string common =
      "sweep-bias --rows 5 --cols 5 --bias-start 0 --bias-stop 0.2 "
      "--bias-step 0.1 --target 99";
  const auto first =
      run_cli(common + " --csv " + csv1.string() + " --svg " + svg1.string());
  const auto second =
      run_cli(common + " --csv " + csv2.string() + " --svg " + svg2.string());
  CHECK(first.exit_code == 0);
  CHECK(first.output.starts_with("baseline="));
  CHECK(first.output == second.output);

  const std::string csv_content = slurp(csv1);
  CHECK(csv_content == slurp(csv2));
  CHECK(csv_content.starts_with("p,coverage_time,baseline,r\n"));
  CHECK(std::count(csv_content.begin(), csv_content.end(), '\n') == 4);

  const std::string svg_content = slurp(svg1);
  CHECK(svg_content == slurp(svg2));
  CHECK(svg_content.starts_with("<?xml"));
  CHECK(svg_content.find("<polyline") != std::string::npos);
}

TEST_CASE("validate agrees with the chain on the ring fixture") {
  const fs::path csv = out_dir() / "validate.csv";
  const auto result = run_cli(
      "validate --topology ring --cols 5 --start 2 --model uniform "
      "--target 60 --runs 500 --seed 7 --csv " +
      csv.string());
  CHECK(result.exit_code == 0);
  CHECK(result.output == "validation=pass\n");
  CHECK(slurp(csv).starts_with(
      "step,macro_return,empirical_return,return_se,"
      "macro_covered,empirical_covered,covered_se,return_ok,covered_ok\n"));
}
