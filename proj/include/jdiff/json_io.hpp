#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "jdiff/error.hpp"
#include "jdiff/json.hpp"

namespace jdiff {

struct ParseOptions {
  // Nesting deeper than this is rejected; the tree is recursive and very deep
  // inputs would exhaust the stack on copy or destruction.
  std::size_t max_depth = 10000;
};

namespace detail {

struct TextPosition {
  std::size_t line = 1;
  std::size_t column = 1;
};

inline TextPosition position_of(std::string_view text, std::size_t offset) {
  TextPosition pos;
  if (offset > text.size()) offset = text.size();
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Offset of the opening quote of the n-th object key (0-based) in text that is
// well-formed up to that key.
inline std::size_t locate_key(std::string_view text, std::size_t ordinal) {
  std::size_t seen = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '"') continue;
    const std::size_t start = i;
    for (++i; i < text.size() && text[i] != '"'; ++i) {
      if (text[i] == '\\') ++i;
    }
    std::size_t next = i + 1;
    while (next < text.size() &&
           (text[next] == ' ' || text[next] == '\t' || text[next] == '\n' || text[next] == '\r')) {
      ++next;
    }
    if (next < text.size() && text[next] == ':') {
      if (seen == ordinal) return start;
      ++seen;
    }
  }
  return text.size();
}

// SAX consumer that builds a JsonValue tree from nlohmann's tokenizer.
class ValueBuilder {
 public:
  using json = nlohmann::json;

  explicit ValueBuilder(std::size_t max_depth) : max_depth_(max_depth) {}

  bool null() { return emit(JsonValue(nullptr)); }
  bool boolean(bool value) { return emit(JsonValue(value)); }
  bool number_integer(json::number_integer_t value) { return emit(JsonValue(static_cast<double>(value))); }
  bool number_unsigned(json::number_unsigned_t value) { return emit(JsonValue(static_cast<double>(value))); }
  bool number_float(json::number_float_t value, const std::string&) { return emit(JsonValue(value)); }
  bool string(std::string& value) { return emit(JsonValue(std::move(value))); }
  bool binary(json::binary_t&) { return false; }

  bool start_object(std::size_t) { return open(JsonValue(Object{})); }
  bool start_array(std::size_t) { return open(JsonValue(Array{})); }
  bool end_object() { return close(); }
  bool end_array() { return close(); }

  bool key(std::string& name) {
    auto& frame = stack_.back();
    if (frame.value.as_object().contains(name)) {
      failure_ = Failure::DuplicateKey;
      message_ = "duplicate object key \"" + name + "\"";
      return false;
    }
    frame.pending_key = std::move(name);
    ++keys_seen_;
    return true;
  }

  bool parse_error(std::size_t position, const std::string&, const json::exception& ex) {
    failure_ = Failure::Syntax;
    error_byte_ = position;
    std::string what = ex.what();
    auto marker = what.find("column");
    auto colon = marker == std::string::npos ? std::string::npos : what.find(": ", marker);
    message_ = colon == std::string::npos ? what : what.substr(colon + 2);
    return false;
  }

  JsonValue take_root() { return std::move(root_); }

  JsonValue finish(std::string_view text) {
    switch (failure_) {
      case Failure::None: return take_root();
      case Failure::Syntax: {
        auto pos = position_of(text, error_byte_ == 0 ? 0 : error_byte_ - 1);
        throw ParseError(message_, pos.line, pos.column);
      }
      case Failure::DuplicateKey: {
        auto pos = position_of(text, locate_key(text, keys_seen_));
        throw ParseError(message_, pos.line, pos.column);
      }
      case Failure::TooDeep: {
        auto pos = position_of(text, locate_depth_breach(text));
        throw ParseError(message_, pos.line, pos.column);
      }
    }
    return take_root();
  }

 private:
  enum class Failure { None, Syntax, DuplicateKey, TooDeep };

  struct Frame {
    JsonValue value;
    std::string pending_key;
  };

  bool open(JsonValue container) {
    if (stack_.size() >= max_depth_) {
      failure_ = Failure::TooDeep;
      message_ = "nesting deeper than " + std::to_string(max_depth_) + " levels";
      return false;
    }
    stack_.push_back(Frame{std::move(container), {}});
    return true;
  }

  bool close() {
    JsonValue done = std::move(stack_.back().value);
    stack_.pop_back();
    return emit(std::move(done));
  }

  bool emit(JsonValue value) {
    if (stack_.empty()) {
      root_ = std::move(value);
      return true;
    }
    auto& frame = stack_.back();
    if (frame.value.is_array()) {
      frame.value.as_array().push_back(std::move(value));
    } else {
      frame.value.as_object().insert(std::move(frame.pending_key), std::move(value));
      frame.pending_key.clear();
    }
    return true;
  }

  std::size_t locate_depth_breach(std::string_view text) const {
    std::size_t depth = 0;
    bool in_string = false;
    for (std::size_t i = 0; i < text.size(); ++i) {
      char c = text[i];
      if (in_string) {
        if (c == '\\') ++i;
        else if (c == '"') in_string = false;
      } else if (c == '"') {
        in_string = true;
      } else if (c == '[' || c == '{') {
        if (++depth > max_depth_) return i;
      } else if (c == ']' || c == '}') {
        --depth;
      }
    }
    return text.size();
  }

  std::size_t max_depth_;
  std::vector<Frame> stack_;
  JsonValue root_;
  Failure failure_ = Failure::None;
  std::string message_;
  std::size_t error_byte_ = 0;
  std::size_t keys_seen_ = 0;
};

inline void append_number(std::string& out, double value) {
  if (value == 0) {
    out += '0';
    return;
  }
  char buffer[32];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  out.append(buffer, end);
}

inline void append_string(std::string& out, std::string_view text) {
  static constexpr char kHex[] = "0123456789abcdef";
  out += '"';
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          out += "\\u00";
          out += kHex[(c >> 4) & 0xf];
          out += kHex[c & 0xf];
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

inline void append_value(std::string& out, const JsonValue& value) {
  switch (value.kind()) {
    case Kind::None:
    case Kind::Null: out += "null"; break;
    case Kind::Boolean: out += value.as_boolean() ? "true" : "false"; break;
    case Kind::Number: append_number(out, value.as_number()); break;
    case Kind::String: append_string(out, value.as_string()); break;
    case Kind::Array: {
      out += '[';
      bool first = true;
      for (const auto& item : value.as_array()) {
        if (!first) out += ',';
        first = false;
        append_value(out, item);
      }
      out += ']';
      break;
    }
    case Kind::Object: {
      out += '{';
      bool first = true;
      for (const auto& [key, item] : value.as_object()) {
        if (!first) out += ',';
        first = false;
        append_string(out, key);
        out += ':';
        append_value(out, item);
      }
      out += '}';
      break;
    }
  }
}

}  // namespace detail

// Parses UTF-8 JSON text. Throws ParseError with line/column on malformed
// input and on duplicate keys within one object.
inline JsonValue parse_json(std::string_view text, const ParseOptions& options = {}) {
  detail::ValueBuilder builder(options.max_depth);
  nlohmann::json::sax_parse(text, &builder);
  return builder.finish(text);
}

// Compact canonical text: no whitespace, members in insertion order, numbers
// in shortest round-trip form (integral values without a fraction). None
// serializes as null.
inline std::string to_json_text(const JsonValue& value) {
  std::string out;
  detail::append_value(out, value);
  return out;
}

}  // namespace jdiff
