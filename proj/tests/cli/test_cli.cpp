// End-to-end contract tests: spawn the installed binary the way a
// shell user would and check output plus exit codes.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr interleaved
};

CommandResult run_cli(const std::string& args) {
  const std::string command =
      std::string("\"") + INFOTHRESH_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CommandResult result;
  char buffer[4096];
  while (std::fgets(buffer, sizeof buffer, pipe) != nullptr) {
    result.output += buffer;
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::size_t count_lines(const std::string& text) {
  std::size_t count = 0;
  for (const char ch : text) {
    if (ch == '\n') {
      ++count;
    }
  }
  return count;
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + needle.size())) {
    ++count;
  }
  return count;
}

std::string data_path(const std::string& relative) {
  return std::string(INFOTHRESH_DATA_DIR) + "/" + relative;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("threshold reports the point and the identity") {
  const CommandResult result =
      run_cli("threshold --tpr 0.95 --tnr 0.99");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("phi_e") != std::string::npos);
  CHECK(result.output.find("0.093") != std::string::npos);
  CHECK(result.output.find("0.907") != std::string::npos);
  CHECK(result.output.find("1.000") != std::string::npos);
}

TEST_CASE("threshold rejects the no-curve classifier") {
  const CommandResult result = run_cli("threshold --tpr 0 --tnr 1");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("undefined threshold") != std::string::npos);
}

TEST_CASE("threshold rejects rates outside the unit interval") {
  const CommandResult result = run_cli("threshold --tpr 2 --tnr 0.5");
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("curve csv goes to stdout") {
  const CommandResult result =
      run_cli("curve --tpr 0.95 --tnr 0.99 --step 0.01");
  CHECK(result.exit_code == 0);
  CHECK(count_lines(result.output) == 102);
  CHECK(result.output.rfind("phi,rho\n", 0) == 0);
  CHECK(result.output.find("\n0,0\n") != std::string::npos);
}

TEST_CASE("curve svg is annotated") {
  const CommandResult result =
      run_cli("curve --tpr 0.95 --tnr 0.99 --format svg");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("<svg") != std::string::npos);
  CHECK(result.output.find("threshold-marker") != std::string::npos);
  CHECK(result.output.find("data-phi=\"0.0930510036682\"") !=
        std::string::npos);
}

TEST_CASE("curve writes to a file") {
  const std::string path = "/tmp/infothresh_cli_curve_test.csv";
  std::remove(path.c_str());
  const CommandResult result = run_cli(
      "curve --tpr 0.85 --tnr 0.95 --step 0.01 --out " + path);
  CHECK(result.exit_code == 0);
  CHECK(result.output.empty());

  std::ifstream file(path);
  REQUIRE(file.good());
  std::string header;
  std::getline(file, header);
  CHECK(header == "phi,rho");
  file.close();
  std::remove(path.c_str());
}

TEST_CASE("curve to an unwritable path is an io error") {
  const CommandResult result = run_cli(
      "curve --tpr 0.85 --tnr 0.95 --out /nonexistent_dir_xyz/curve.csv");
  CHECK(result.exit_code == 3);
  CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("curve validates the step") {
  CHECK(run_cli("curve --tpr 0.85 --tnr 0.95 --step 0.2").exit_code == 1);
  CHECK(run_cli("curve --tpr 0.85 --tnr 0.95 --step 0.013").exit_code == 1);
}

TEST_CASE("solve finds the minimal complementary rate") {
  const CommandResult result =
      run_cli("solve --fix tnr=0.99 --lambda 0.95");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("minimal tpr") != std::string::npos);
  CHECK(result.output.find("0.66115") != std::string::npos);
  CHECK(result.output.find("achieved auc") != std::string::npos);
}

TEST_CASE("solve reports unreachable targets on exit code 2") {
  const CommandResult result =
      run_cli("solve --fix tnr=0.99 --lambda 0.97");
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("solve validates the fix argument") {
  CHECK(run_cli("solve --fix foo=0.99 --lambda 0.95").exit_code == 1);
  CHECK(run_cli("solve --fix tnr --lambda 0.95").exit_code == 1);
}

TEST_CASE("adequacy verdicts") {
  const CommandResult good =
      run_cli("adequacy --tpr 0.95 --tnr 0.99 --lambda 0.95");
  CHECK(good.exit_code == 0);
  CHECK(good.output.find("yes") != std::string::npos);

  const CommandResult weak =
      run_cli("adequacy --tpr 0.6 --tnr 0.6 --lambda 0.95");
  CHECK(weak.exit_code == 0);
  CHECK(weak.output.find("no") != std::string::npos);
}

TEST_CASE("tables flag exactly the known errata") {
  const CommandResult result = run_cli("tables");
  CHECK(result.exit_code == 0);
  CHECK(count_occurrences(result.output, "<-- differs") == 2);
}

TEST_CASE("chain runs the bundled example and stops") {
  const CommandResult result =
      run_cli("chain --config " + data_path("chains/married_couple.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("<-- stop") != std::string::npos);
  CHECK(result.output.find("stopped at") != std::string::npos);
}

TEST_CASE("chain reports when it never stops") {
  const CommandResult result = run_cli(
      "chain --config " + data_path("chains/single_uninformative.json"));
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("never") != std::string::npos);
}

TEST_CASE("chain rejects malformed configs with a location") {
  const std::string path = "/tmp/infothresh_cli_bad_config.json";
  {
    std::ofstream file(path);
    file << "{ \"initial_prior\": 0.2,\n  nope\n";
  }
  const CommandResult result = run_cli("chain --config " + path);
  CHECK(result.exit_code == 1);
  CHECK(result.output.find("error:") != std::string::npos);
  CHECK(result.output.find("line") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("chain missing config file is an io error") {
  const CommandResult result =
      run_cli("chain --config /nonexistent_dir_xyz/chain.json");
  CHECK(result.exit_code == 3);
}

TEST_CASE("simulate is reproducible for a fixed seed") {
  const std::string args =
      "simulate --tpr 0.95 --tnr 0.99 --prevalence 0.093 --n 20000 --seed 7";
  const CommandResult first = run_cli(args);
  const CommandResult second = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);
  CHECK(first.output.find("mt19937_64") != std::string::npos);

  const CommandResult other = run_cli(
      "simulate --tpr 0.95 --tnr 0.99 --prevalence 0.093 --n 20000 --seed 8");
  CHECK(other.output != first.output);
}

TEST_CASE("argument parsing failures exit with 1") {
  CHECK(run_cli("threshold --bogus 1").exit_code == 1);
  CHECK(run_cli("threshold --tpr 0.9").exit_code == 1);  // --tnr missing
  CHECK(run_cli("").exit_code == 1);                     // subcommand missing
}

TEST_CASE("help exits cleanly") {
  const CommandResult result = run_cli("--help");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("threshold") != std::string::npos);
}

}  // TEST_SUITE
