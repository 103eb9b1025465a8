#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

std::string cli_path() {
  const char* path = std::getenv("RKDISC_CLI");
  return path ? path : "";
}

struct RunResult {
  int exit_code = -1;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string out_file = "cli_test_output.tmp";
  const std::string command = cli_path() + " " + args + " > " + out_file + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_file);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  std::remove(out_file.c_str());
  return result;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("binary is configured") {
  REQUIRE(!cli_path().empty());
}

TEST_CASE("gamma subcommand") {
  const auto result =
      run("gamma --kernel hardy --points '[{\"r\":0.5,\"theta\":0},{\"r\":0.7,\"theta\":0}]'");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("0.35") != std::string::npos);

  // malformed input -> exit 2
  CHECK(run("gamma --points '[]'").exit_code == 2);
  CHECK(run("gamma --points 'not json'").exit_code == 2);
  CHECK(run("gamma --points '[{\"r\":\"half\",\"theta\":0}]'").exit_code == 2);
  CHECK(run("gamma --kernel nonsense --points '[{\"r\":0.5,\"theta\":0}]'").exit_code == 2);
  // a constraint set forcing gamma = 0 is rejected at parse time
  CHECK(run("gamma --points '[{\"r\":0.0,\"theta\":0,\"order\":0}]'").exit_code == 2);
}

TEST_CASE("atomic subcommand") {
  const auto result = run("atomic --a 0.5 --format csv");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("a,A,gamma,one_minus_gamma_x_2log") != std::string::npos);
  CHECK(result.output.find("0.344776788752") != std::string::npos);

  const auto as_json = run("atomic --a 0.5 --format json");
  CHECK(as_json.exit_code == 0);
  CHECK(as_json.output.find("\"gamma\"") != std::string::npos);

  CHECK(run("atomic --a -1").exit_code == 2);
}

TEST_CASE("gamma subcommand with the weighted kernel family") {
  const auto result = run(
      "gamma --kernel '{\"family\":\"weighted_ds\",\"s\":0.5}' "
      "--points '[{\"r\":0.5,\"theta\":0}]'");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("gamma") != std::string::npos);
}

TEST_CASE("certify subcommand emits a decomposition certificate") {
  const auto result = run(
      "certify --points '[{\"r\":0.9,\"theta\":0.0},{\"r\":0.95,\"theta\":0.02},"
      "{\"r\":0.9,\"theta\":3.14},{\"r\":0.95,\"theta\":3.16}]' --grid 2048");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("condition_sum") != std::string::npos);
  CHECK(result.output.find("\"dominated\": true") != std::string::npos);
}

TEST_CASE("certify subcommand: a single Stolz-angle family lands in one cluster") {
  const auto result = run(
      "certify --points '[{\"r\":0.5,\"theta\":0.0},{\"r\":0.7,\"theta\":0.01},"
      "{\"r\":0.9,\"theta\":-0.01}]' --grid 2048");
  CHECK(result.exit_code == 0);
  // exactly one cluster in the JSON report
  std::size_t clusters = 0, pos = 0;
  while ((pos = result.output.find("\"a_k\"", pos)) != std::string::npos) {
    ++clusters;
    ++pos;
  }
  CHECK(clusters == 1);
}

TEST_CASE("certify subcommand handles atomic measures") {
  const auto result = run(
      "certify --measure '[{\"theta\":0.0,\"mass\":0.01},{\"theta\":1.0,\"mass\":0.02}]' "
      "--s 0.5 --nodes 512");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("ss_atomic_sum") != std::string::npos);
  CHECK(result.output.find("weighted_sum") != std::string::npos);
  CHECK(result.output.find("gamma_product") != std::string::npos);
  CHECK(result.output.find("log_plus_v_integral") != std::string::npos);

  CHECK(run("certify --measure '[{\"theta\":0.0,\"mass\":-1}]'").exit_code == 2);
}

TEST_CASE("gamma subcommand with derivative constraints") {
  const auto result = run(
      "gamma --kernel dirichlet --points "
      "'[{\"r\":0.5,\"theta\":0,\"order\":0},{\"r\":0.5,\"theta\":0,\"order\":1}]'");
  CHECK(result.exit_code == 0);
  // multiplicity-2 value matches the n = 2 Blaschke-approximant route
  // (r = 1 - a/2 with a = 1): gamma_2 = sqrt(A_2 r^3), frozen from that route
  CHECK(result.output.find("0.15115087065849") != std::string::npos);
}

TEST_CASE("appendix-figure subcommand") {
  const auto result = run("appendix-figure --t-min 0.2 --t-max 0.4 --step 0.1");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("t,gamma_gramian,gamma_formula,abs_diff") != std::string::npos);
  CHECK(result.output.find("max |gamma_gramian - gamma_formula|") != std::string::npos);

  // a = 0: discontinuity marker at t = r
  const auto jump = run("appendix-figure --a 0 --t-min 0.45 --t-max 0.55 --step 0.05");
  CHECK(jump.exit_code == 0);
  CHECK(jump.output.find("discontinuity") != std::string::npos);

  // custom a: no formula column
  const auto custom = run("appendix-figure --a 0.1 --t-min 0.2 --t-max 0.4 --step 0.1");
  CHECK(custom.exit_code == 0);
  CHECK(custom.output.find("gamma_formula") == std::string::npos);

  // SVG plot emission
  const auto with_plot =
      run("appendix-figure --t-min 0.2 --t-max 0.4 --step 0.1 --plot cli_test_plot.svg");
  CHECK(with_plot.exit_code == 0);
  std::ifstream svg("cli_test_plot.svg");
  std::ostringstream content;
  content << svg.rdbuf();
  CHECK(content.str().find("<svg") != std::string::npos);
  CHECK(content.str().find("polyline") != std::string::npos);
  std::remove("cli_test_plot.svg");
}

TEST_CASE("check subcommand") {
  const auto quick = run("check --trials 3");
  CHECK(quick.exit_code == 0);
  CHECK(quick.output.find("[PASS]") != std::string::npos);
  CHECK(quick.output.find("[FAIL]") == std::string::npos);

  // expected-failure mode for the even-weighted kernel
  const auto counter = run("check --suite pushout --kernel '{\"family\":\"appendix_a\",\"a\":0.01}'");
  CHECK(counter.exit_code == 0);
  CHECK(counter.output.find("failure expected") != std::string::npos);
  CHECK(counter.output.find("counterexample") != std::string::npos);

  CHECK(run("check --suite nope").exit_code == 2);
}

TEST_CASE("byte-identical output for identical config and seed") {
  const std::string args = "check --seed 99 --trials 5";
  const auto first = run(args);
  const auto second = run(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output == second.output);

  const auto sweep1 = run("atomic --a 0.25 0.5 1.0 --format csv");
  const auto sweep2 = run("atomic --a 0.25 0.5 1.0 --format csv");
  CHECK(sweep1.output == sweep2.output);
}

}  // TEST_SUITE
