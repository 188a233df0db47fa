#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "psisum/canonical.hpp"
#include "psisum/catalog.hpp"
#include "psisum/group.hpp"

using namespace psisum;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, PsiPrintsValue) {
  EXPECT_EQ(run({"psi", "Q8"}).out, "27\n");
  EXPECT_EQ(run({"psi", "C1"}).out, "1\n");
  EXPECT_EQ(run({"psi", "C2xC2xC3"}).out, "49\n");
  EXPECT_EQ(run({"psi", "Q8"}).code, cli::kExitOk);
  const auto j = nlohmann::json::parse(run({"--format", "json", "psi", "SD(3,2,2)"}).out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["psi"], "13");
  EXPECT_EQ(j["order"], 6);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run({"psi", "Z5"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"psi", "M(2,3)"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "thm99"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "psi", "C2"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"catalog", "13"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--enum-bound", "13", "catalog", "13"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--enum-bound", "17", "--allow-slow-enumeration", "catalog", "4"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"verify", "equality", "--n", "20"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kExitOk);
}

TEST(Cli, UnknownClaimRejectedBeforeWork) {
  const auto dir = std::filesystem::temp_directory_path() / "psisum_cli_unknown";
  std::filesystem::remove_all(dir);
  EXPECT_EQ(run({"--cache-dir", dir.string(), "verify", "nope"}).code, cli::kExitUsage);
  EXPECT_FALSE(std::filesystem::exists(dir / "catalog"));
}

TEST(Cli, SlowEnumerationNeedsAcknowledgment) {
  const auto r = run({"--enum-bound", "13", "--allow-slow-enumeration", "spectrum", "13"});
  EXPECT_EQ(r.code, cli::kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, SpectrumAndCatalog) {
  const auto r = run({"--format", "json", "spectrum", "12"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  std::vector<std::string> values;
  for (const auto& e : j["spectrum"]) values.push_back(e["psi"]);
  EXPECT_EQ(values, (std::vector<std::string>{"77", "49", "45", "33", "31"}));
  const auto c = nlohmann::json::parse(run({"--format", "json", "catalog", "8"}).out);
  EXPECT_EQ(c["classes"].size(), 5u);
  EXPECT_NE(run({"--format", "csv", "catalog", "6"}).out.find("D6,13,false,false"), std::string::npos);
}

TEST(Cli, VerifyEqualityFamilyJson) {
  const auto r = run({"--format", "json", "verify", "thm4", "--q", "2", "--kmax", "60"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["verdict"], "holds");
  const auto& family = j["reports"][0];
  EXPECT_EQ(family["params"]["q"], "2");
  EXPECT_EQ(family["witnesses"].size(), 30u);  // odd k <= 60
  EXPECT_EQ(family["witnesses"][0], "A[2,2]");
  EXPECT_EQ(family["witnesses"][1], "A[2,2]xC3");
}

TEST(Cli, CsvHeader) {
  const auto r = run({"--format", "csv", "verify", "q8"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "claim_id,params,lhs,rhs,verdict,witness");
}

TEST(Cli, AuditSubcommand) {
  const auto r = run({"--format", "json", "audit", "--qmax", "11", "--pmax", "31", "--smax", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["command"], "audit");
}

TEST(Cli, OutputIsDeterministicColdOrWarm) {
  const auto dir = std::filesystem::temp_directory_path() / "psisum_cli_determinism";
  std::filesystem::remove_all(dir);
  const std::vector<std::string> args = {"--format", "json", "--cache-dir", dir.string(), "verify", "thm3"};
  const auto cold = run(args);
  const auto warm = run(args);
  const auto uncached = run({"--format", "json", "verify", "thm3"});
  ASSERT_EQ(cold.code, 0);
  EXPECT_EQ(cold.out, warm.out);
  EXPECT_EQ(cold.out, uncached.out);
  EXPECT_TRUE(std::filesystem::exists(dir / "catalog" / "n=12.json"));
}

TEST(Cli, ReportedWitnessesReparse) {
  Catalog catalog;
  for (const char* claim : {"thm3", "thm4", "lem7", "mqr"}) {
    const auto r = run({"--format", "json", "verify", claim});
    ASSERT_EQ(r.code, 0) << claim;
    for (const auto& report : nlohmann::json::parse(r.out)["reports"]) {
      for (const auto& w : report["witnesses"]) {
        const std::string text = w.get<std::string>();
        const GroupSpec spec = parse_group_spec(text);
        EXPECT_EQ(to_string(spec), text);
        const Group g = build_group(spec);
        if (g.order() > catalog.bound()) continue;
        // The catalog class carrying this name is the class the spec builds.
        bool named = false;
        for (const auto& e : catalog.groups(g.order())) {
          if (e.name != text) continue;
          named = true;
          EXPECT_EQ(e.table, canonical_form(g).table) << text;
        }
        if (!named) EXPECT_NO_THROW(catalog.find_class(g)) << text;
      }
    }
  }
}
