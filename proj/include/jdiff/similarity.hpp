#pragma once

#include <algorithm>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "jdiff/context.hpp"

namespace jdiff {

inline void DiffContext::report(std::string_view category, const Level& level, std::optional<JsonValue> info) {
  if (drilling_) return;
  recorder_.event(ChangeEvent{std::string(category), detail::render_side(level.left, level.left_path),
                              detail::render_side(level.right, level.right_path), level.left, level.right,
                              std::move(info)});
}

inline void DiffContext::record_pair(const Level& level, double score) {
  if (drilling_) return;
  recorder_.pair(PairRecord{render_path(level.left_path), render_path(level.right_path), score});
}

inline double DiffContext::similarity(const Level& level) { return jdiff::similarity(level, *this); }

inline double DiffContext::array_similarity(const Level& level, MatchMode mode) {
  return jdiff::array_similarity(level, mode, *this);
}

// Consults the operators whose rule matches the rendered left path, in
// registration order. The first one that handles the pair decides; its score
// is clamped to [0, 1]. Failures other than the engine's own limits are
// rethrown as OperatorError naming the operator.
inline std::optional<double> apply_operators(const Level& level, DiffContext& ctx) {
  const auto& operators = ctx.settings().operators;
  if (operators.empty()) return std::nullopt;
  const std::string rendered = render_path(level.left_path);
  for (const auto& op : operators) {
    if (!op->rule().matches(rendered)) continue;
    Verdict verdict;
    try {
      verdict = op->diff(level, ctx);
    } catch (const OperatorError&) {
      throw;
    } catch (const ResourceError&) {
      throw;
    } catch (const std::exception& e) {
      throw OperatorError(op->name(), e.what());
    } catch (...) {
      throw OperatorError(op->name(), "unknown exception");
    }
    if (verdict.handled) return detail::clamp_score(verdict.score);
  }
  return std::nullopt;
}

inline double similarity(const Level& level, DiffContext& ctx) {
  auto depth = ctx.descend();
  if (auto score = apply_operators(level, ctx)) return *score;
  return default_similarity(level, ctx);
}

// Built-in similarity, without consulting operators at this level.
inline double default_similarity(const Level& level, DiffContext& ctx) {
  const JsonValue& left = level.left;
  const JsonValue& right = level.right;
  if (left.is_none() || right.is_none()) return 0.0;
  if (left.kind() != right.kind()) {
    ctx.report(category::kValueChange, level);
    return 0.0;
  }
  switch (left.kind()) {
    case Kind::Object: return object_similarity(level, ctx);
    case Kind::Array: return array_similarity(level, ctx.settings().default_mode, ctx);
    default: {
      double score = primitive_similarity(left, right);
      if (score < 1.0) ctx.report(category::kValueChange, level);
      return score;
    }
  }
}

// 1 for equal primitives, 0 otherwise. Numbers compare as doubles, strings
// byte-wise.
inline double primitive_similarity(const JsonValue& left, const JsonValue& right) {
  return left == right ? 1.0 : 0.0;
}

// Mean similarity over the union of keys; a key present on one side only
// scores against None (0 unless an operator claims it) and is reported as
// an addition or removal. Two empty objects score 1.
inline double object_similarity(const Level& level, DiffContext& ctx) {
  const Object& left = level.left.as_object();
  const Object& right = level.right.as_object();
  std::vector<double> scores;

  for (const auto& [key, left_value] : left) {
    const JsonPath left_path = level.left_path.child(key);
    const JsonPath right_path = level.right_path.child(key);
    if (const JsonValue* right_value = right.find(key)) {
      scores.push_back(similarity(Level{left_value, *right_value, left_path, right_path}, ctx));
      continue;
    }
    const Level child{left_value, JsonValue::none(), left_path, right_path};
    auto depth = ctx.descend();
    if (auto score = apply_operators(child, ctx)) {
      scores.push_back(*score);
    } else {
      scores.push_back(0.0);
      ctx.report(category::kObjectRemove, child);
    }
  }
  for (const auto& [key, right_value] : right) {
    if (left.contains(key)) continue;
    const JsonPath left_path = level.left_path.child(key);
    const JsonPath right_path = level.right_path.child(key);
    const Level child{JsonValue::none(), right_value, left_path, right_path};
    auto depth = ctx.descend();
    if (auto score = apply_operators(child, ctx)) {
      scores.push_back(*score);
    } else {
      scores.push_back(0.0);
      ctx.report(category::kObjectAdd, child);
    }
  }
  if (scores.empty()) return 1.0;
  const double count = static_cast<double>(scores.size());
  return detail::canonical_sum(std::move(scores)) / count;
}

}  // namespace jdiff

#include "jdiff/array_matching.hpp"
