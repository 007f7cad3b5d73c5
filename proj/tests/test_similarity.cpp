#include <gtest/gtest.h>

#include "jdiff/jdiff.hpp"
#include "support/generators.hpp"

namespace jdiff {
namespace {

struct Scored {
  double score;
  Recorder recorder;
};

Scored score(const JsonValue& a, const JsonValue& b, const EngineSettings& settings = {}, bool drill = false) {
  Scored out{0.0, {}};
  DiffContext ctx(settings, out.recorder);
  const JsonPath root;
  if (drill) {
    auto scope = ctx.drill();
    out.score = similarity(Level{a, b, root, root}, ctx);
  } else {
    out.score = similarity(Level{a, b, root, root}, ctx);
  }
  return out;
}

JsonValue J(const char* text) { return parse_json(text); }

TEST(Similarity, NoneScoresZero) {
  EXPECT_EQ(score(JsonValue(1), JsonValue::none()).score, 0.0);
  EXPECT_EQ(score(JsonValue::none(), JsonValue(1)).score, 0.0);
  EXPECT_EQ(score(J(R"({"a":[1]})"), JsonValue::none()).score, 0.0);
}

TEST(Similarity, CrossTypeScoresZeroAndReportsChange) {
  auto s = score(JsonValue("a"), JsonValue(1));
  EXPECT_EQ(s.score, 0.0);
  ASSERT_EQ(s.recorder.events().size(), 1u);
  EXPECT_EQ(s.recorder.events()[0].category, category::kValueChange);

  // Every ordered pair of distinct kinds, exhaustively.
  const std::vector<JsonValue> samples{JsonValue(nullptr), JsonValue(true), JsonValue(0), JsonValue(""),
                                       JsonValue(Object{}), JsonValue(Array{})};
  for (std::size_t i = 0; i < samples.size(); ++i) {
    for (std::size_t j = 0; j < samples.size(); ++j) {
      EXPECT_EQ(score(samples[i], samples[j]).score, i == j ? 1.0 : 0.0) << i << "," << j;
    }
  }
}

TEST(PrimitiveSimilarity, Equality) {
  EXPECT_EQ(primitive_similarity(JsonValue(800), JsonValue(800)), 1.0);
  EXPECT_EQ(primitive_similarity(JsonValue("View"), JsonValue("view")), 0.0);
  EXPECT_EQ(primitive_similarity(JsonValue(nullptr), JsonValue(nullptr)), 1.0);
  EXPECT_EQ(primitive_similarity(JsonValue(true), JsonValue(false)), 0.0);
  EXPECT_EQ(primitive_similarity(JsonValue(1), JsonValue(1.0)), 1.0);
}

TEST(ObjectSimilarity, KeyPairAverage) {
  EXPECT_DOUBLE_EQ(score(J(R"({"a":1})"), J(R"({"a":1,"b":2})")).score, 0.5);
  EXPECT_EQ(score(J("{}"), J("{}")).score, 1.0);
  EXPECT_EQ(score(J(R"({"a":1,"b":2})"), J(R"({"a":1,"b":2})")).score, 1.0);
  EXPECT_DOUBLE_EQ(score(J(R"({"a":1,"b":2,"c":3})"), J(R"({"a":1,"b":5,"d":3})")).score, 1.0 / 4.0);
  EXPECT_DOUBLE_EQ(score(J(R"({"a":{"x":1,"y":1}})"), J(R"({"a":{"x":1,"y":2}})")).score, 0.5);
}

TEST(ObjectSimilarity, ReportsAddRemoveAndLeafChanges) {
  auto s = score(J(R"({"a":1,"n":{"x":1,"y":2}})"), J(R"({"b":1,"n":{"x":1,"y":3}})"));
  std::map<std::string, std::vector<std::string>> seen;
  for (const auto& e : s.recorder.events()) seen[e.category].push_back(e.left_path + "|" + e.right_path);
  EXPECT_EQ(seen["object:remove"], std::vector<std::string>{"a|"});
  EXPECT_EQ(seen["object:add"], std::vector<std::string>{"|b"});
  EXPECT_EQ(seen["value:change"], std::vector<std::string>{"n->y|n->y"});
  EXPECT_EQ(seen.size(), 3u);
}

TEST(Similarity, DrillSuppressesEventsButNotScores) {
  const auto a = J(R"({"a":[1,2,{"q":1}],"b":"x","c":{"d":null}})");
  const auto b = J(R"({"a":[2,{"q":2}],"b":"y","e":1})");
  for (auto mode : {MatchMode::ordered_exact(), MatchMode::ordered_fuzzy(), MatchMode::unordered_exact(),
                    MatchMode::unordered_fuzzy()}) {
    EngineSettings settings;
    settings.default_mode = mode;
    auto loud = score(a, b, settings, false);
    auto quiet = score(a, b, settings, true);
    EXPECT_EQ(loud.score, quiet.score) << mode_name(mode);
    EXPECT_FALSE(loud.recorder.empty());
    EXPECT_TRUE(quiet.recorder.empty());
  }
}

TEST(Similarity, DepthLimit) {
  JsonValue deep = JsonValue(1);
  for (int i = 0; i < 20; ++i) deep = JsonValue(Array{deep});
  EngineSettings settings;
  settings.max_depth = 10;
  EXPECT_THROW(score(deep, deep, settings), ResourceError);
  settings.max_depth = 21;
  EXPECT_EQ(score(deep, deep, settings).score, 1.0);
}

class SimilarityProperties : public ::testing::TestWithParam<MatchMode> {};

TEST_P(SimilarityProperties, RangeIdentitySymmetryNone) {
  EngineSettings settings;
  settings.default_mode = GetParam();
  testing::DocumentGenerator gen(1234 + (GetParam().ordered ? 0 : 2) + (GetParam().fuzzy ? 1 : 0));
  for (int i = 0; i < 150; ++i) {
    const JsonValue x = gen.document();
    const JsonValue y = gen.chance(0.5) ? gen.mutate(x) : gen.document();
    const double xy = score(x, y, settings, true).score;
    const double yx = score(y, x, settings, true).score;
    ASSERT_GE(xy, 0.0);
    ASSERT_LE(xy, 1.0);
    ASSERT_EQ(xy, yx) << to_json_text(x) << " vs " << to_json_text(y);
    ASSERT_EQ(score(x, x, settings).score, 1.0) << to_json_text(x);
    ASSERT_EQ(score(x, JsonValue::none(), settings).score, 0.0);
  }
}

INSTANTIATE_TEST_SUITE_P(AllModes, SimilarityProperties,
                         ::testing::Values(MatchMode::ordered_exact(), MatchMode::ordered_fuzzy(),
                                           MatchMode::unordered_exact(), MatchMode::unordered_fuzzy()),
                         [](const auto& info) {
                           std::string name(mode_name(info.param));
                           std::replace(name.begin(), name.end(), '-', '_');
                           return name;
                         });

}  // namespace
}  // namespace jdiff
