#pragma once

#include <charconv>
#include <cstddef>
#include <regex>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "jdiff/error.hpp"
#include "jdiff/json.hpp"

namespace jdiff {

// Separator between rendered path segments.
inline constexpr std::string_view kArrow = "->";

// Location of a node inside a document: a chain of object keys and array
// indices starting at the root. Keys containing "->" render ambiguously; no
// escaping is applied.
class JsonPath {
 public:
  using Segment = std::variant<std::string, std::size_t>;

  JsonPath() = default;
  explicit JsonPath(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  JsonPath child(std::string key) const {
    JsonPath out = *this;
    out.segments_.emplace_back(std::move(key));
    return out;
  }
  JsonPath child(std::size_t index) const {
    JsonPath out = *this;
    out.segments_.emplace_back(index);
    return out;
  }

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  bool is_root() const noexcept { return segments_.empty(); }
  std::size_t depth() const noexcept { return segments_.size(); }

  bool operator==(const JsonPath&) const = default;

 private:
  std::vector<Segment> segments_;
};

// "b->[0]->d" style rendering; the root renders as "".
inline std::string render_path(const JsonPath& path) {
  std::string out;
  bool first = true;
  for (const auto& segment : path.segments()) {
    if (!first) out += kArrow;
    first = false;
    if (const auto* key = std::get_if<std::string>(&segment)) {
      out += *key;
    } else {
      out += '[';
      out += std::to_string(std::get<std::size_t>(segment));
      out += ']';
    }
  }
  return out;
}

struct PathMatch {
  JsonPath path;
  const JsonValue* value;  // points into the resolved document
};

namespace detail {

struct PathToken {
  enum class Type { Key, Index, AnyIndex } type;
  std::string key;
  std::size_t index = 0;
};

inline std::vector<PathToken> tokenize_path(std::string_view expression) {
  std::vector<PathToken> tokens;
  if (expression.empty()) return tokens;
  std::size_t start = 0;
  while (true) {
    std::size_t end = expression.find(kArrow, start);
    std::string_view part =
        expression.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (part.empty()) {
      throw PathError("empty segment in path expression '" + std::string(expression) + "'");
    }
    if (part.front() == '[') {
      if (part == "[*]") {
        tokens.push_back({PathToken::Type::AnyIndex, {}, 0});
      } else {
        std::string_view digits = part.substr(1);
        if (digits.size() < 2 || digits.back() != ']') {
          throw PathError("malformed index segment '" + std::string(part) + "'");
        }
        digits.remove_suffix(1);
        std::size_t index = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
        if (ec != std::errc() || ptr != digits.data() + digits.size()) {
          throw PathError("malformed index segment '" + std::string(part) + "'");
        }
        tokens.push_back({PathToken::Type::Index, {}, index});
      }
    } else {
      tokens.push_back({PathToken::Type::Key, std::string(part), 0});
    }
    if (end == std::string_view::npos) break;
    start = end + kArrow.size();
  }
  return tokens;
}

inline void resolve_from(const JsonValue& node, const JsonPath& at, const std::vector<PathToken>& tokens,
                         std::size_t next, std::vector<PathMatch>& out) {
  if (next == tokens.size()) {
    out.push_back({at, &node});
    return;
  }
  const auto& token = tokens[next];
  switch (token.type) {
    case PathToken::Type::Key:
      if (node.is_object()) {
        if (const JsonValue* child = node.as_object().find(token.key)) {
          resolve_from(*child, at.child(token.key), tokens, next + 1, out);
        }
      }
      break;
    case PathToken::Type::Index:
      if (node.is_array() && token.index < node.as_array().size()) {
        resolve_from(node.as_array()[token.index], at.child(token.index), tokens, next + 1, out);
      }
      break;
    case PathToken::Type::AnyIndex:
      if (node.is_array()) {
        const auto& items = node.as_array();
        for (std::size_t i = 0; i < items.size(); ++i) {
          resolve_from(items[i], at.child(i), tokens, next + 1, out);
        }
      }
      break;
  }
}

}  // namespace detail

// All nodes addressed by an arrow-notation expression, in document order.
// "[*]" matches every index of an array. Throws PathError on a malformed
// expression; a well-formed expression that addresses nothing yields {}.
inline std::vector<PathMatch> resolve_path(const JsonValue& root, std::string_view expression) {
  auto tokens = detail::tokenize_path(expression);
  std::vector<PathMatch> out;
  detail::resolve_from(root, JsonPath{}, tokens, 0, out);
  return out;
}

enum class RuleKind { Ignore, Unordered, Operator };

// A regular expression over rendered paths. Matching is anchored to the whole
// string. An invalid pattern throws ConfigError at construction.
class PathRule {
 public:
  explicit PathRule(std::string pattern, RuleKind kind = RuleKind::Operator)
      : pattern_(std::move(pattern)), kind_(kind), regex_(compile(pattern_)) {}

  const std::string& pattern() const noexcept { return pattern_; }
  RuleKind kind() const noexcept { return kind_; }

  bool matches(std::string_view rendered) const {
    return std::regex_match(rendered.begin(), rendered.end(), regex_);
  }

 private:
  static std::regex compile(const std::string& pattern) {
    try {
      return std::regex(pattern, std::regex::ECMAScript);
    } catch (const std::regex_error& e) {
      throw ConfigError("invalid path regex '" + pattern + "': " + e.what());
    }
  }

  std::string pattern_;
  RuleKind kind_;
  std::regex regex_;
};

inline bool path_matches(const PathRule& rule, std::string_view rendered) { return rule.matches(rendered); }

}  // namespace jdiff
