#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "jdiff/context.hpp"
#include "jdiff/similarity.hpp"

namespace jdiff {

// Matching nodes always score 1 and report nothing; neither subtree is
// visited. Also claims keys present on one side only.
class IgnoreOperator final : public Operator {
 public:
  explicit IgnoreOperator(const PathRule& rule) : Operator("ignore:" + rule.pattern(), rule) {}

  Verdict diff(const Level&, DiffContext&) const override { return Verdict::scored(1.0); }
};

// Compares matching arrays as sets, regardless of the configured default
// mode. Anything other than two arrays falls through.
class UnorderedOperator final : public Operator {
 public:
  UnorderedOperator(const PathRule& rule, bool fuzzy)
      : Operator("unordered:" + rule.pattern(), rule), fuzzy_(fuzzy) {}

  bool fuzzy() const noexcept { return fuzzy_; }

  Verdict diff(const Level& level, DiffContext& ctx) const override {
    if (!level.left.is_array() || !level.right.is_array()) return Verdict::pass();
    return Verdict::scored(ctx.array_similarity(level, MatchMode{false, fuzzy_}));
  }

 private:
  bool fuzzy_;
};

// Points {x, y}: score 1 when their Euclidean distance is strictly below the
// threshold, else 0. Reports {distance, distance_threshold, pass} for every
// evaluated pair outside drilling, passing pairs included. Operands that are
// not two objects with numeric x and y fall through.
class L2DistanceOperator final : public Operator {
 public:
  static constexpr std::string_view kDefaultName = "operator:l2distance";

  L2DistanceOperator(PathRule rule, double distance_threshold, std::string name = std::string(kDefaultName))
      : Operator(std::move(name), std::move(rule)), distance_threshold_(distance_threshold) {}

  double distance_threshold() const noexcept { return distance_threshold_; }

  Verdict diff(const Level& level, DiffContext& ctx) const override {
    double lx, ly, rx, ry;
    if (!coordinates(level.left, lx, ly) || !coordinates(level.right, rx, ry)) return Verdict::pass();
    const double distance = std::sqrt((lx - rx) * (lx - rx) + (ly - ry) * (ly - ry));
    const bool pass = distance < distance_threshold_;
    if (!ctx.drilling()) {
      ctx.report(name(), level,
                 JsonValue(Object{{"distance", distance},
                                  {"distance_threshold", distance_threshold_},
                                  {"pass", pass}}));
    }
    return Verdict::scored(pass ? 1.0 : 0.0);
  }

 private:
  static bool coordinates(const JsonValue& v, double& x, double& y) {
    if (!v.is_object()) return false;
    const JsonValue* px = v.as_object().find("x");
    const JsonValue* py = v.as_object().find("y");
    if (px == nullptr || py == nullptr || !px->is_number() || !py->is_number()) return false;
    x = px->as_number();
    y = py->as_number();
    return true;
  }

  double distance_threshold_;
};

namespace detail {

// Code points of well-formed UTF-8; stray bytes map to themselves.
inline std::u32string decode_utf8(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size();) {
    const auto lead = static_cast<unsigned char>(text[i]);
    std::size_t length = lead < 0x80 ? 1 : (lead >> 5) == 0x6 ? 2 : (lead >> 4) == 0xe ? 3 : (lead >> 3) == 0x1e ? 4 : 1;
    if (i + length > text.size()) length = 1;
    char32_t cp = length == 1 ? lead : lead & (0xff >> (length + 1));
    for (std::size_t k = 1; k < length; ++k) cp = (cp << 6) | (static_cast<unsigned char>(text[i + k]) & 0x3f);
    out.push_back(cp);
    i += length;
  }
  return out;
}

}  // namespace detail

// Classic Levenshtein distance (unit-cost insert, delete, substitute) over
// code points.
inline std::size_t levenshtein(std::string_view a, std::string_view b) {
  const std::u32string s = detail::decode_utf8(a);
  const std::u32string t = detail::decode_utf8(b);
  std::vector<std::size_t> row(t.size() + 1);
  for (std::size_t j = 0; j <= t.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= s.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= t.size(); ++j) {
      const std::size_t above = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diagonal + (s[i - 1] == t[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[t.size()];
}

// Strings score 1 - levenshtein / max length (1 for two empty strings).
// Differing pairs report {distance, similarity}. Non-strings fall through.
class StringEditDistanceOperator final : public Operator {
 public:
  static constexpr std::string_view kDefaultName = "operator:string-edit-distance";

  explicit StringEditDistanceOperator(PathRule rule, std::string name = std::string(kDefaultName))
      : Operator(std::move(name), std::move(rule)) {}

  static double score(std::string_view a, std::string_view b) {
    const std::size_t longest = std::max(detail::decode_utf8(a).size(), detail::decode_utf8(b).size());
    if (longest == 0) return 1.0;
    return 1.0 - static_cast<double>(levenshtein(a, b)) / static_cast<double>(longest);
  }

  Verdict diff(const Level& level, DiffContext& ctx) const override {
    if (!level.left.is_string() || !level.right.is_string()) return Verdict::pass();
    const double s = score(level.left.as_string(), level.right.as_string());
    if (s < 1.0 && !ctx.drilling()) {
      const auto distance = static_cast<double>(levenshtein(level.left.as_string(), level.right.as_string()));
      ctx.report(name(), level, JsonValue(Object{{"distance", distance}, {"similarity", s}}));
    }
    return Verdict::scored(s);
  }
};

inline OperatorPtr ignore_operator(PathRule rule) { return std::make_shared<IgnoreOperator>(std::move(rule)); }

inline OperatorPtr unordered_operator(PathRule rule, bool fuzzy) {
  return std::make_shared<UnorderedOperator>(std::move(rule), fuzzy);
}

inline OperatorPtr l2_distance_operator(PathRule rule, double distance_threshold) {
  return std::make_shared<L2DistanceOperator>(std::move(rule), distance_threshold);
}

inline OperatorPtr string_edit_distance_operator(PathRule rule) {
  return std::make_shared<StringEditDistanceOperator>(std::move(rule));
}

namespace detail {

inline void check_params(const std::string& op, const Object& params, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : params) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw ConfigError("operator '" + op + "': unknown parameter '" + key + "'");
    }
  }
}

inline std::string event_param(const std::string& op, const Object& params, std::string_view fallback) {
  const JsonValue* event = params.find("event");
  if (event == nullptr) return std::string(fallback);
  if (!event->is_string() || event->as_string().empty()) {
    throw ConfigError("operator '" + op + "': 'event' must be a non-empty string");
  }
  return event->as_string();
}

}  // namespace detail

// Instantiates a built-in from a config-file binding
// {"name": ..., "path_regex": ..., "params": {...}}. Known names: ignore,
// unordered (fuzzy: bool), l2distance (distance_threshold: number, event),
// string-edit-distance (event). The "operator:" prefix is accepted.
inline OperatorPtr make_builtin_operator(std::string_view name, const std::string& path_regex,
                                         const Object& params = {}) {
  std::string op(name);
  if (op.rfind("operator:", 0) == 0) op = op.substr(9);
  PathRule rule(path_regex, op == "ignore" ? RuleKind::Ignore : op == "unordered" ? RuleKind::Unordered
                                                                                  : RuleKind::Operator);
  if (op == "ignore") {
    detail::check_params(op, params, {});
    return ignore_operator(std::move(rule));
  }
  if (op == "unordered") {
    detail::check_params(op, params, {"fuzzy"});
    bool fuzzy = false;
    if (const JsonValue* f = params.find("fuzzy")) {
      if (!f->is_boolean()) throw ConfigError("operator 'unordered': 'fuzzy' must be a boolean");
      fuzzy = f->as_boolean();
    }
    return unordered_operator(std::move(rule), fuzzy);
  }
  if (op == "l2distance") {
    detail::check_params(op, params, {"distance_threshold", "event"});
    const JsonValue* threshold = params.find("distance_threshold");
    if (threshold == nullptr || !threshold->is_number()) {
      throw ConfigError("operator 'l2distance': 'distance_threshold' number is required");
    }
    return std::make_shared<L2DistanceOperator>(std::move(rule), threshold->as_number(),
                                                detail::event_param(op, params, L2DistanceOperator::kDefaultName));
  }
  if (op == "string-edit-distance") {
    detail::check_params(op, params, {"event"});
    return std::make_shared<StringEditDistanceOperator>(
        std::move(rule), detail::event_param(op, params, StringEditDistanceOperator::kDefaultName));
  }
  throw ConfigError("unknown operator '" + std::string(name) + "'");
}

}  // namespace jdiff
