#include <gtest/gtest.h>

#include <json.hpp>

#include "zeroheavy/expr.hpp"
#include "zeroheavy/hausdorff.hpp"
#include "zeroheavy/serialize.hpp"
#include "zeroheavy/zigzag.hpp"

using namespace zeroheavy;

TEST(Serialize, CertificatesJson) {
  ConstructionResult r = run_single(parse("x^2"), Interval(Rational(1, 4), Rational(3, 4)), 10, 30, 32, {});
  auto j = nlohmann::json::parse(certificates_json(r));
  EXPECT_EQ(j.at("status"), "complete");
  EXPECT_TRUE(j.at("all_valid").get<bool>());
  ASSERT_EQ(j.at("certificates").size(), r.certificates.size());
  for (const auto& c : j.at("certificates")) EXPECT_FALSE(c.at("checkpoints").empty());
}

TEST(Serialize, TranscriptOneLinePerStep) {
  ConstructionResult r = run_single(parse("x"), Interval(Rational(1, 4), Rational(3, 4)), 10, 30, 32, {});
  std::string t = transcript_jsonl(r.transcript);
  EXPECT_EQ(static_cast<std::size_t>(std::count(t.begin(), t.end(), '\n')), r.transcript.size());
  std::istringstream in(t);
  for (std::string line; std::getline(in, line);) EXPECT_TRUE(nlohmann::json::accept(line));
}

TEST(Serialize, CoverCsv) {
  CoverBoundReport rep = cover_cost(2, Rational(1), Rational(1, 32), 10, 20);
  std::string csv = cover_report_csv(rep);
  EXPECT_EQ(csv.rfind("M,count,cost_upper\n", 0), 0u);
  auto j = nlohmann::json::parse(cover_report_json(rep));
  EXPECT_TRUE(j.at("total_le_formula").get<bool>());
}
