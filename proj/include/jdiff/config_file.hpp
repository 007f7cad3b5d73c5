#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jdiff/diff.hpp"
#include "jdiff/error.hpp"
#include "jdiff/json.hpp"
#include "jdiff/operators.hpp"

namespace jdiff {

// Parsed form of a configuration document:
//
//   {
//     "default_mode": "ordered-exact" | "ordered-fuzzy" | "unordered-exact" | "unordered-fuzzy",
//     "pair_threshold": 0.5,
//     "max_depth": 512,
//     "ignore": ["regex", ...],
//     "unordered": [{"path_regex": "regex", "fuzzy": false}, ...],
//     "operators": [{"name": "l2distance", "path_regex": "regex", "params": {...}}, ...]
//   }
//
// Every key is optional; unknown keys are rejected. An unordered rule without
// "fuzzy" follows the fuzziness of the effective default mode.
struct ConfigFile {
  struct Unordered {
    std::string path_regex;
    std::optional<bool> fuzzy;
  };
  struct Binding {
    std::string name;
    std::string path_regex;
    Object params;
  };

  std::optional<MatchMode> default_mode;
  std::optional<double> pair_threshold;
  std::optional<std::size_t> max_depth;
  std::vector<std::string> ignore;
  std::vector<Unordered> unordered;
  std::vector<Binding> operators;

  // Compiles every regex and operator binding.
  DiffConfig to_diff_config() const {
    DiffConfig config;
    if (default_mode) config.default_array_mode = *default_mode;
    if (pair_threshold) config.pair_threshold = *pair_threshold;
    if (max_depth) config.max_depth = *max_depth;
    for (const auto& pattern : ignore) config.ignore_rules.emplace_back(pattern, RuleKind::Ignore);
    for (const auto& u : unordered) {
      config.unordered_rules.push_back(
          {PathRule(u.path_regex, RuleKind::Unordered), u.fuzzy.value_or(config.default_array_mode.fuzzy)});
    }
    for (const auto& b : operators) config.operators.push_back(make_builtin_operator(b.name, b.path_regex, b.params));
    return config;
  }
};

namespace detail {

inline const std::string& expect_string(const JsonValue& v, std::string_view what) {
  if (!v.is_string()) throw ConfigError(std::string(what) + " must be a string");
  return v.as_string();
}

inline const Array& expect_array(const JsonValue& v, std::string_view what) {
  if (!v.is_array()) throw ConfigError(std::string(what) + " must be an array");
  return v.as_array();
}

inline const Object& expect_object(const JsonValue& v, std::string_view what) {
  if (!v.is_object()) throw ConfigError(std::string(what) + " must be an object");
  return v.as_object();
}

}  // namespace detail

inline ConfigFile load_config(const JsonValue& document) {
  const Object& root = detail::expect_object(document, "configuration");
  ConfigFile out;
  for (const auto& [key, value] : root) {
    if (key == "default_mode") {
      const auto& name = detail::expect_string(value, "default_mode");
      out.default_mode = parse_mode(name);
      if (!out.default_mode) throw ConfigError("unknown default_mode '" + name + "'");
    } else if (key == "pair_threshold") {
      if (!value.is_number()) throw ConfigError("pair_threshold must be a number");
      out.pair_threshold = value.as_number();
    } else if (key == "max_depth") {
      if (!value.is_number() || value.as_number() < 1 || value.as_number() != std::floor(value.as_number())) {
        throw ConfigError("max_depth must be a positive integer");
      }
      out.max_depth = static_cast<std::size_t>(value.as_number());
    } else if (key == "ignore") {
      for (const auto& item : detail::expect_array(value, "ignore")) {
        out.ignore.push_back(detail::expect_string(item, "ignore entry"));
      }
    } else if (key == "unordered") {
      for (const auto& item : detail::expect_array(value, "unordered")) {
        ConfigFile::Unordered rule;
        for (const auto& [field, v] : detail::expect_object(item, "unordered entry")) {
          if (field == "path_regex") {
            rule.path_regex = detail::expect_string(v, "unordered.path_regex");
          } else if (field == "fuzzy") {
            if (!v.is_boolean()) throw ConfigError("unordered.fuzzy must be a boolean");
            rule.fuzzy = v.as_boolean();
          } else {
            throw ConfigError("unknown key 'unordered." + field + "'");
          }
        }
        if (!item.as_object().contains("path_regex")) throw ConfigError("unordered entry needs path_regex");
        out.unordered.push_back(std::move(rule));
      }
    } else if (key == "operators") {
      for (const auto& item : detail::expect_array(value, "operators")) {
        ConfigFile::Binding binding;
        for (const auto& [field, v] : detail::expect_object(item, "operator binding")) {
          if (field == "name") {
            binding.name = detail::expect_string(v, "operators.name");
          } else if (field == "path_regex") {
            binding.path_regex = detail::expect_string(v, "operators.path_regex");
          } else if (field == "params") {
            binding.params = detail::expect_object(v, "operators.params");
          } else {
            throw ConfigError("unknown key 'operators." + field + "'");
          }
        }
        if (binding.name.empty() || !item.as_object().contains("path_regex")) {
          throw ConfigError("operator binding needs name and path_regex");
        }
        out.operators.push_back(std::move(binding));
      }
    } else {
      throw ConfigError("unknown configuration key '" + key + "'");
    }
  }
  return out;
}

}  // namespace jdiff
