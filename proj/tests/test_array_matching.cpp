#include <gtest/gtest.h>

#include "jdiff/jdiff.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace jdiff {
namespace {

JsonValue J(const char* text) { return parse_json(text); }

DiffResult run(const char* a, const char* b, MatchMode mode, double threshold = 0.5) {
  DiffConfig config;
  config.default_array_mode = mode;
  config.pair_threshold = threshold;
  return diff(J(a), J(b), config);
}

std::vector<std::string> paths(const DiffResult& r, std::string_view category) {
  std::vector<std::string> out;
  auto it = r.events.find(std::string(category));
  if (it == r.events.end()) return out;
  for (const auto& e : it->second) out.push_back(e.left_path + "|" + e.right_path);
  return out;
}

TEST(ArrayModes, ReversedLetters) {
  EXPECT_DOUBLE_EQ(run(R"(["a","b","c"])", R"(["c","b","a"])", MatchMode::ordered_exact()).similarity, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(run(R"(["a","b","c"])", R"(["c","b","a"])", MatchMode::ordered_fuzzy()).similarity, 1.0 / 3.0);
  EXPECT_EQ(run(R"(["a","b","c"])", R"(["c","b","a"])", MatchMode::unordered_exact()).similarity, 1.0);
  EXPECT_EQ(run(R"(["a","b","c"])", R"(["c","b","a"])", MatchMode::unordered_fuzzy()).similarity, 1.0);
}

TEST(ArrayModes, EmptyArrays) {
  for (auto mode : {MatchMode::ordered_exact(), MatchMode::ordered_fuzzy(), MatchMode::unordered_exact(),
                    MatchMode::unordered_fuzzy()}) {
    auto r = run("[]", "[]", mode);
    EXPECT_EQ(r.similarity, 1.0);
    EXPECT_TRUE(r.identical);
    EXPECT_EQ(run("[]", "[1,2]", mode).similarity, 0.0);
  }
}

TEST(ArrayModes, OrderedExactReportsRemovedId) {
  auto r = run("[116, 943, 234, 38793]", "[116, 234, 38793]", MatchMode::ordered_exact());
  EXPECT_DOUBLE_EQ(r.similarity, 6.0 / 7.0);
  EXPECT_EQ(paths(r, category::kArrayRemove), std::vector<std::string>{"[1]|"});
  EXPECT_TRUE(paths(r, category::kArrayAdd).empty());
  ASSERT_EQ(r.pairs.size(), 3u);
  EXPECT_EQ(r.pairs[1].left_path, "[2]");
  EXPECT_EQ(r.pairs[1].right_path, "[1]");
}

TEST(ArrayModes, FuzzyPairsPartialMatches) {
  const char* a = R"([{"a":1,"b":2}, 5])";
  const char* b = R"([{"a":1,"b":3}, 5])";
  auto exact = run(a, b, MatchMode::ordered_exact());
  EXPECT_DOUBLE_EQ(exact.similarity, 0.5);
  EXPECT_EQ(paths(exact, category::kArrayRemove), std::vector<std::string>{"[0]|"});
  EXPECT_EQ(paths(exact, category::kArrayAdd), std::vector<std::string>{"|[0]"});

  auto fuzzy = run(a, b, MatchMode::ordered_fuzzy());
  EXPECT_DOUBLE_EQ(fuzzy.similarity, 0.75);
  EXPECT_TRUE(paths(fuzzy, category::kArrayRemove).empty());
  EXPECT_EQ(paths(fuzzy, category::kValueChange), std::vector<std::string>{"[0]->b|[0]->b"});

  auto unordered = run(a, R"([5, {"a":1,"b":3}])", MatchMode::unordered_fuzzy());
  EXPECT_DOUBLE_EQ(unordered.similarity, 0.75);
  EXPECT_EQ(paths(unordered, category::kValueChange), std::vector<std::string>{"[0]->b|[1]->b"});
}

TEST(ArrayModes, ThresholdDropsWeakPairs) {
  const char* a = R"([{"a":1,"b":2}])";
  const char* b = R"([{"a":1,"b":3,"c":4}])";
  for (auto mode : {MatchMode::ordered_fuzzy(), MatchMode::unordered_fuzzy()}) {
    auto strict = run(a, b, mode, 0.5);
    EXPECT_EQ(strict.similarity, 0.0) << mode_name(mode);
    EXPECT_TRUE(strict.pairs.empty());
    EXPECT_EQ(paths(strict, category::kArrayRemove), std::vector<std::string>{"[0]|"});
    EXPECT_EQ(paths(strict, category::kArrayAdd), std::vector<std::string>{"|[0]"});

    auto loose = run(a, b, mode, 0.3);
    EXPECT_DOUBLE_EQ(loose.similarity, 1.0 / 3.0) << mode_name(mode);
    ASSERT_EQ(loose.pairs.size(), 1u);
    EXPECT_DOUBLE_EQ(loose.pairs[0].score, 1.0 / 3.0);
    EXPECT_EQ(paths(loose, category::kObjectAdd), std::vector<std::string>{"|[0]->c"});
  }
}

TEST(ArrayModes, ThresholdAwareOptimum) {
  // Crossing pairs score 0.4 each and out-sum the 0.75 pair, but both fall
  // below the threshold.
  const char* a = R"([{"a":1,"b":1,"c":1,"d":1}, {"c":1,"d":2,"f":0}])";
  const char* b = R"([{"a":1,"b":1,"c":1,"d":2}, {"a":1,"b":1,"e":0}])";
  auto r = run(a, b, MatchMode::unordered_fuzzy());
  ASSERT_EQ(r.pairs.size(), 1u);
  EXPECT_EQ(r.pairs[0].left_path, "[0]");
  EXPECT_EQ(r.pairs[0].right_path, "[0]");
  EXPECT_DOUBLE_EQ(r.similarity, 2.0 * 0.75 / 4.0);
  EXPECT_EQ(paths(r, category::kArrayRemove), std::vector<std::string>{"[1]|"});
  EXPECT_EQ(paths(r, category::kArrayAdd), std::vector<std::string>{"|[1]"});
}

TEST(ArrayModes, NestedArraysUseTheSameMode) {
  auto r = run("[[1,2],[3,4]]", "[[4,3],[2,1]]", MatchMode::unordered_exact());
  EXPECT_EQ(r.similarity, 1.0);
  EXPECT_TRUE(r.identical);
  EXPECT_DOUBLE_EQ(run("[[1,2],[3,4]]", "[[4,3],[2,1]]", MatchMode::ordered_exact()).similarity, 0.0);
}

TEST(ArraySimilarityHelper, DiceNormalization) {
  EngineSettings settings;
  Recorder recorder;
  DiffContext ctx(settings, recorder);
  auto drill = ctx.drill();
  const JsonPath root;
  const auto a = J("[1,2,3,4]");
  const auto b = J("[1,2]");
  const Level level{a, b, root, root};
  EXPECT_DOUBLE_EQ(array_similarity_helper(level, {{0, 0, 1.0}, {1, 1, 1.0}}, ctx), 4.0 / 6.0);
  EXPECT_DOUBLE_EQ(array_similarity_helper(level, {{0, 0, 0.5}}, ctx), 1.0 / 6.0);
  EXPECT_EQ(array_similarity_helper(level, {}, ctx), 0.0);
  EXPECT_TRUE(recorder.empty());
}

TEST(ArrayModes, OptimalityAgainstOracles) {
  testing::DocumentGenerator gen(21, 2, 4);
  EngineSettings settings;
  settings.pair_threshold = 0.0;
  for (int round = 0; round < 100; ++round) {
    Array left, right;
    const std::size_t n = gen.pick(6), m = gen.pick(6);
    for (std::size_t i = 0; i < n; ++i) left.push_back(gen.value(1));
    for (std::size_t j = 0; j < m; ++j) right.push_back(gen.value(1));
    const JsonValue a(left), b(right);
    const JsonPath root;
    const Level level{a, b, root, root};

    Recorder recorder;
    DiffContext ctx(settings, recorder);
    auto drill = ctx.drill();
    const Matrix sim = similarity_matrix(level, ctx);
    const double total = static_cast<double>(n + m);
    if (total == 0) continue;

    Matrix exact(sim.rows(), sim.cols());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) exact(i, j) = sim(i, j) == 1.0 ? 1.0 : 0.0;

    ASSERT_NEAR(array_similarity(level, MatchMode::ordered_exact(), ctx),
                2.0 * oracle::best_monotone_pairing(exact) / total, 1e-9);
    ASSERT_NEAR(array_similarity(level, MatchMode::ordered_fuzzy(), ctx),
                2.0 * oracle::best_monotone_pairing(sim) / total, 1e-9);
    ASSERT_NEAR(array_similarity(level, MatchMode::unordered_exact(), ctx),
                2.0 * oracle::best_injective_pairing(exact) / total, 1e-9);
    ASSERT_NEAR(array_similarity(level, MatchMode::unordered_fuzzy(), ctx),
                2.0 * oracle::best_injective_pairing(sim) / total, 1e-9);
  }
}

}  // namespace
}  // namespace jdiff
