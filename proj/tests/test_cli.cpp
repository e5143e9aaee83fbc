#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "fpst/cli.hpp"

using fpst::cli::run;

namespace {
struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; returns exit status and stdout.
std::pair<int, std::string> spawn(const std::string& args) {
  const std::string cmd = std::string(FPST_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string text;
  std::array<char, 4096> buf{};
  while (fgets(buf.data(), buf.size(), pipe)) text += buf.data();
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}
}  // namespace

TEST_CASE("json report schema") {
  const auto r = call({"stieltjes", "--f", "exp_neg", "--omega", "0.1", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "stieltjes");
  CHECK(j["params"]["omega"].get<double>() == 0.1);
  REQUIRE(j["results"].size() == 1);
  const auto& row = j["results"][0];
  CHECK(row.contains("value"));
  CHECK(row.contains("singular_term"));
  CHECK(row.contains("terms"));
  CHECK(j.contains("diagnostics"));
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"kummeru", "--n", "2", "--alpha", "0.5", "--omega", "0.3", "--format", "json"};
  CHECK(call(args).out == call(args).out);
}

TEST_CASE("formats") {
  const auto csv = call({"k0", "--x", "0.5", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("value", 0) == 0);
  const auto text = call({"k0", "--x", "0.5", "--format", "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("value = ") != std::string::npos);
  CHECK(fpst::cli::format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("sweep emits one row per grid point") {
  const auto r = call({"sweep", "--cmd", "stieltjes", "--f", "exp_neg", "--omega-grid", "1e-3:1:20", "--threads",
                       "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["results"].size() == 20);
  double prev = 0.0;
  for (const auto& row : j["results"]) {
    const double w = row["omega"].get<double>();
    CHECK(w > prev);
    prev = w;
    CHECK(row["rel_err"].get<double>() < 1e-8);
  }
}

TEST_CASE("error reporting") {
  const auto usage = call({"stieltjes", "--omega"});
  CHECK(usage.code == 2);
  CHECK(usage.err.rfind("error: E_USAGE: ", 0) == 0);

  const auto domain = call({"stieltjes", "--f", "exp_neg", "--omega", "-1"});
  CHECK(domain.code == 2);
  CHECK(domain.err.rfind("error: E_DOMAIN: ", 0) == 0);

  const auto nonconv = call({"stieltjes", "--f", "exp_neg", "--omega", "1.2", "--a", "1", "--no-oracle"});
  CHECK(nonconv.code == 3);
  CHECK(nonconv.err.rfind("error: E_NONCONV: ", 0) == 0);

  const auto both = call({"stieltjes", "--f", "exp_neg", "--coeff-file", "x.txt", "--omega", "0.1"});
  CHECK(both.code == 2);
}

TEST_CASE("binary exit codes") {
  CHECK(spawn("k0 --x 0.5").first == 0);
  CHECK(spawn("k0").first == 2);
  CHECK(spawn("stieltjes --f exp_neg --omega 1.2 --a 1 --no-oracle").first == 3);
  const auto listing = spawn("functions");
  CHECK(listing.first == 0);
  CHECK(listing.second.find("gauss_exp") != std::string::npos);
}
