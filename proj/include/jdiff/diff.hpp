#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "jdiff/array_matching.hpp"
#include "jdiff/context.hpp"
#include "jdiff/json.hpp"
#include "jdiff/json_io.hpp"
#include "jdiff/operators.hpp"
#include "jdiff/similarity.hpp"

namespace jdiff {

struct UnorderedRule {
  PathRule rule;
  bool fuzzy = false;
};

// User-facing configuration. ignore_rules and unordered_rules are shorthand
// for the ignore and unordered built-in operators; the effective operator
// order is ignore rules, then unordered rules, then `operators`.
struct DiffConfig {
  MatchMode default_array_mode = MatchMode::ordered_exact();
  double pair_threshold = 0.5;
  std::size_t max_depth = 512;
  std::vector<PathRule> ignore_rules;
  std::vector<UnorderedRule> unordered_rules;
  std::vector<OperatorPtr> operators;
};

// Validates a DiffConfig and expands its shorthand rules. Repeated shorthand
// patterns collapse to one operator; duplicate explicit operator names are an
// error.
inline EngineSettings compile_settings(const DiffConfig& config) {
  if (!(config.pair_threshold >= 0.0 && config.pair_threshold <= 1.0)) {
    throw ConfigError("pair_threshold must lie in [0, 1]");
  }
  if (config.max_depth == 0) throw ConfigError("max_depth must be positive");

  EngineSettings settings;
  settings.default_mode = config.default_array_mode;
  settings.pair_threshold = config.pair_threshold;
  settings.max_depth = config.max_depth;

  std::set<std::string> names;
  auto add_shorthand = [&](OperatorPtr op) {
    if (names.insert(op->name()).second) settings.operators.push_back(std::move(op));
  };
  for (const auto& rule : config.ignore_rules) add_shorthand(ignore_operator(rule));
  for (const auto& unordered : config.unordered_rules) add_shorthand(unordered_operator(unordered.rule, unordered.fuzzy));
  for (const auto& op : config.operators) {
    if (!op) throw ConfigError("null operator in configuration");
    if (!names.insert(op->name()).second) throw ConfigError("duplicate operator name '" + op->name() + "'");
    settings.operators.push_back(op);
  }
  return settings;
}

// Outcome of one diff: the recorded array pairings and the root similarity.
// Events are grouped by category and ordered by (left_path, right_path).
struct DiffResult {
  double similarity = 0.0;
  bool identical = false;
  std::map<std::string, std::vector<ChangeEvent>> events;
  std::vector<PairRecord> pairs;

  std::size_t event_count() const {
    std::size_t n = 0;
    for (const auto& [name, list] : events) n += list.size();
    return n;
  }
};

// Immutable once built; diff() may be called concurrently.
class Differ {
 public:
  Differ() : Differ(DiffConfig{}) {}
  explicit Differ(const DiffConfig& config) : settings_(compile_settings(config)) {}
  explicit Differ(EngineSettings settings) : settings_(std::move(settings)) {}

  const EngineSettings& settings() const noexcept { return settings_; }

  DiffResult diff(const JsonValue& left, const JsonValue& right) const {
    if (left.is_none() || right.is_none()) throw Error("diff operands must be JSON values, not None");
    Recorder recorder;
    DiffContext ctx(settings_, recorder);
    const JsonPath root;

    DiffResult result;
    result.similarity = similarity(Level{left, right, root, root}, ctx);

    for (const auto& e : recorder.events()) result.events[e.category].push_back(e);
    for (auto& [name, list] : result.events) {
      std::stable_sort(list.begin(), list.end(), [](const ChangeEvent& a, const ChangeEvent& b) {
        return std::tie(a.left_path, a.right_path) < std::tie(b.left_path, b.right_path);
      });
    }
    result.pairs = recorder.pairs();
    std::stable_sort(result.pairs.begin(), result.pairs.end(), [](const PairRecord& a, const PairRecord& b) {
      return std::tie(a.left_path, a.right_path) < std::tie(b.left_path, b.right_path);
    });
    result.identical = result.similarity == 1.0 && result.events.empty();
    return result;
  }

 private:
  EngineSettings settings_;
};

inline DiffResult diff(const JsonValue& left, const JsonValue& right, const DiffConfig& config = {}) {
  return Differ(config).diff(left, right);
}

inline JsonValue result_to_json(const DiffResult& result) {
  Object events;
  for (const auto& [name, list] : result.events) {
    Array items;
    items.reserve(list.size());
    for (const auto& e : list) {
      Object item{{"left_path", e.left_path}, {"right_path", e.right_path}, {"left", e.left}, {"right", e.right}};
      if (e.info) item.insert("info", *e.info);
      items.emplace_back(std::move(item));
    }
    events.insert(name, std::move(items));
  }
  Array pairs;
  pairs.reserve(result.pairs.size());
  for (const auto& p : result.pairs) {
    pairs.emplace_back(Object{{"left_path", p.left_path}, {"right_path", p.right_path}, {"score", p.score}});
  }
  return Object{{"similarity", result.similarity},
                {"identical", result.identical},
                {"events", std::move(events)},
                {"pairs", std::move(pairs)}};
}

// Canonical diff-result JSON: fixed key order, no whitespace. Parsing the
// text and re-serializing it reproduces the same bytes.
inline std::string serialize_result(const DiffResult& result) { return to_json_text(result_to_json(result)); }

// One header line, then one indented "category: count" line per category.
inline std::string format_summary(const DiffResult& result) {
  char header[96];
  std::snprintf(header, sizeof header, "similarity %.3f, %zu events, %s\n", result.similarity,
                result.event_count(), result.identical ? "identical" : "different");
  std::string out = header;
  for (const auto& [name, list] : result.events) {
    out += "  " + name + ": " + std::to_string(list.size()) + "\n";
  }
  return out;
}

}  // namespace jdiff
