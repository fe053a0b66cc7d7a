#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "flagclean/cli.hpp"
#include "flagclean/reports.hpp"

namespace flagclean {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, DeriveBuiltin) {
  const Invocation r = run({"derive", "--builtin"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "mu_-1\nmu_0\nmu_-1 + 2*mu_0 + Lambda + 3*kappa\nmu_0 + Lambda + kappa\n");
}

TEST(Cli, DeriveWithWitnesses) {
  const Invocation r = run({"derive", "--witnesses"});
  EXPECT_NE(r.out.find("mu_0 + Lambda + kappa  [chart 3: y, chart 4: y]"), std::string::npos);
}

TEST(Cli, DeriveSpecialized) {
  const Invocation r = run({"derive", "--set", "Lambda=0", "kappa=1"});
  EXPECT_EQ(r.out, "mu_-1\nmu_0\nmu_-1 + 2*mu_0\n");
}

TEST(Cli, CheckClean) {
  const Invocation r = run({"check", "--builtin", "--set", "Lambda=0", "kappa=0", "mu_-1=1/2", "mu_0=1/3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, 6), "CLEAN\n");
  EXPECT_NE(r.out.find("mu_-1 + 2*mu_0 + Lambda + 3*kappa = 7/6"), std::string::npos);
}

TEST(Cli, CheckNotClean) {
  const Invocation r = run({"check", "--set", "Lambda=1/2", "kappa=0", "mu_-1=1/2", "mu_0=1/2"});
  EXPECT_EQ(r.code, kExitNegative);
  EXPECT_NE(r.out.find("NOT CLEAN"), std::string::npos);
  EXPECT_NE(r.out.find("mu_0 + Lambda + kappa = 1  (integral)"), std::string::npos);
}

TEST(Cli, CheckMissingParameter) {
  const Invocation r = run({"check", "--set", "mu_0=1/2"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_NE(r.err.find("MissingParameter"), std::string::npos);
}

TEST(Cli, CheckRejectsDecimals) {
  EXPECT_EQ(run({"check", "--set", "Lambda=0.5", "kappa=0", "mu_-1=1/2", "mu_0=1/3"}).code, kExitInput);
  EXPECT_EQ(run({"check", "--set", "lambda=1/2"}).code, kExitInput);
}

TEST(Cli, Transitions) {
  const Invocation r = run({"transitions"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("Psi_12: (x, y, a, v) -> (1/x, y/x^2, a/x, v/x^3)\n"), std::string::npos);
  EXPECT_NE(r.out.find("Psi_14: (x, y, a, v) -> (1/x, 1/(x^2*y), a/(x*y), v/(x^3*y))\n"), std::string::npos);
}

TEST(Cli, LineBundle) {
  const Invocation r = run({"linebundle"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("t_12^-1 = 1/x^3"), std::string::npos);
  EXPECT_NE(r.out.find("t_13^-1 = 1/y"), std::string::npos);
  EXPECT_NE(r.out.find("line bundle: ok"), std::string::npos);
}

TEST(Cli, OracleSimple) {
  EXPECT_EQ(run({"oracle", "simple", "--mu", "1/2,1/3", "--window", "4"}).code, kExitOk);
  EXPECT_EQ(run({"oracle", "simple", "--mu", "0,1/2", "--window", "4"}).code, kExitNegative);
  EXPECT_EQ(run({"oracle", "simple", "--mu=-1/2,-1/3", "--window", "4"}).out, "simple\n");
}

TEST(Cli, OracleWindowTooSmall) {
  const Invocation r = run({"oracle", "simple", "--mu", "5,1/2", "--window", "3"});
  EXPECT_EQ(r.code, kExitPrecondition);
  EXPECT_NE(r.err.find("WindowTooSmall"), std::string::npos);
}

TEST(Cli, OracleClean) {
  const Invocation r = run({"oracle", "clean", "--set", "Lambda=0", "kappa=0", "mu_-1=1/2", "mu_0=1/3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("agree\n"), std::string::npos);
  const Invocation n = run({"oracle", "clean", "--set", "Lambda=1/2", "kappa=0", "mu_-1=1/2", "mu_0=1/2"});
  EXPECT_EQ(n.code, kExitNegative);
  EXPECT_NE(n.out.find("chart 3: exponents (1/2, -1) not clean"), std::string::npos);
}

TEST(Cli, OracleGrid) {
  const Invocation r = run({"oracle", "grid", "--builtin", "--denominator-bound", "2", "--range", "1", "--max-cases", "300"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("agreement 100%"), std::string::npos);
}

TEST(Cli, Verify) {
  const Invocation r = run({"verify"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("cocycles: 4 triangles, 0 failures"), std::string::npos);
  EXPECT_NE(r.out.find("verify: ok"), std::string::npos);
}

TEST(Cli, ModelErrors) {
  EXPECT_EQ(run({"derive", "--model", "/nonexistent.model"}).code, kExitInput);
  EXPECT_EQ(run({"frobnicate"}).code, kExitInput);
  EXPECT_EQ(run({}).code, kExitInput);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, kExitOk); }

TEST(Cli, JsonMirrorsText) {
  const Invocation text = run({"derive"});
  const Invocation json = run({"--json", "derive"});
  const auto doc = nlohmann::json::parse(json.out);
  std::string lines;
  for (const auto& f : doc["forms"]) lines += f["form"].get<std::string>() + "\n";
  EXPECT_EQ(lines, text.out);
  EXPECT_EQ(doc["forms"][2]["witnesses"][0]["chart"], "2");
  EXPECT_EQ(render_derive(Json::parse(json.out), false), text.out);
}

TEST(Cli, JsonIsDeterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--json", "verify"}, {"--json", "transitions"},
        {"--json", "check", "--set", "Lambda=1/2", "kappa=0", "mu_-1=1/2", "mu_0=1/2"},
        {"--json", "oracle", "grid", "--denominator-bound", "2", "--range", "1", "--max-cases", "100"}}) {
    const Invocation a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_TRUE(nlohmann::json::accept(a.out));
  }
}

TEST(Cli, JsonReportsRenderToText) {
  for (const auto& [cmd, render] :
       std::vector<std::pair<std::vector<std::string>, std::string (*)(const Json&)>>{
           {{"verify"}, render_verify},
           {{"linebundle"}, render_linebundle},
           {{"transitions"}, render_transitions},
           {{"check", "--set", "Lambda=0", "kappa=0", "mu_-1=1/2", "mu_0=1/3"}, render_check}}) {
    std::vector<std::string> with_json{"--json"};
    with_json.insert(with_json.end(), cmd.begin(), cmd.end());
    EXPECT_EQ(render(Json::parse(run(with_json).out)), run(cmd).out);
  }
}

TEST(Cli, AgreementPercentNeverRoundsUp) {
  EXPECT_EQ(agreement_percent(5000, 5000), "100");
  EXPECT_EQ(agreement_percent(4999, 5000), "99.98");
  EXPECT_EQ(agreement_percent(1, 3), "33.33");
  EXPECT_EQ(agreement_percent(1, 20), "5.00");
}

}  // namespace
}  // namespace flagclean
