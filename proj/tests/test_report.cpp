#include <gtest/gtest.h>

#include <sstream>

#include "psisum/report.hpp"

using namespace psisum;

TEST(Evaluate, Relations) {
  EXPECT_EQ(evaluate(1, Relation::Lt, 2), Verdict::Holds);
  EXPECT_EQ(evaluate(2, Relation::Lt, 2), Verdict::Fails);
  EXPECT_EQ(evaluate(2, Relation::Le, 2), Verdict::Equality);
  EXPECT_EQ(evaluate(3, Relation::Le, 2), Verdict::Fails);
  EXPECT_EQ(evaluate(2, Relation::Eq, 2), Verdict::Equality);
  EXPECT_EQ(evaluate(1, Relation::Ne, 2), Verdict::Holds);
  EXPECT_EQ(evaluate(2, Relation::Ne, 2), Verdict::Fails);
  EXPECT_EQ(evaluate(341, Relation::Gt, 336), Verdict::Holds);
  EXPECT_EQ(evaluate(2, Relation::Ge, 2), Verdict::Equality);
}

TEST(Report, VerdictIsRecomputedFromValues) {
  VerificationReport r;
  r.claim_id = "demo";
  r.add("a", Rational(27), Relation::Lt, Rational(301, 11));
  EXPECT_EQ(r.verdict(), Verdict::Holds);
  r.add("b", Rational(49), Relation::Le, Rational(7, 11) * Rational(77));
  EXPECT_EQ(r.verdict(), Verdict::Equality);
  r.checks[0].lhs = Rational(28);
  EXPECT_EQ(r.verdict(), Verdict::Fails);
  EXPECT_EQ(r.failures(), 1u);
  r.applicable = false;
  EXPECT_EQ(r.verdict(), Verdict::NotApplicable);
}

TEST(Report, JsonCarriesExactStrings) {
  VerificationReport r;
  r.claim_id = "q8";
  r.param("n", "8");
  r.add("psi(Q8) < (7/11) psi(C8)", Rational(27), Relation::Lt, Rational(301, 11), "Q8");
  r.witnesses.push_back("Q8");
  const auto j = reports_to_json({r});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["verdict"], "holds");
  const auto& c = j["reports"][0]["checks"][0];
  EXPECT_EQ(c["lhs"], "27/1");
  EXPECT_EQ(c["rhs"], "301/11");
  EXPECT_EQ(c["relation"], "lt");
  EXPECT_EQ(c["verdict"], "holds");
  EXPECT_EQ(j["reports"][0]["params"]["n"], "8");
  EXPECT_EQ(Rational::parse(c["rhs"].get<std::string>()), Rational(301, 11));
}

TEST(Report, CsvColumns) {
  VerificationReport r;
  r.claim_id = "demo";
  r.param("q", "2").param("k", "3");
  r.add("x, y", Rational(1, 2), Relation::Lt, Rational(1), "A[2,2]xC3");
  std::ostringstream os;
  write_csv(os, {r});
  std::istringstream lines(os.str());
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "claim_id,params,lhs,rhs,verdict,witness");
  EXPECT_EQ(row, "demo,\"q=2;k=3;check=x, y\",1/2,1/1,holds,\"A[2,2]xC3\"");
}

TEST(Report, AllHoldIgnoresNotApplicable) {
  VerificationReport a;
  a.applicable = false;
  VerificationReport b;
  b.add("x", 1, Relation::Lt, 2);
  EXPECT_TRUE(all_hold({a, b}));
  b.add("y", 3, Relation::Lt, 2);
  EXPECT_FALSE(all_hold({a, b}));
}
