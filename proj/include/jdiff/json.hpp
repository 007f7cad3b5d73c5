#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace jdiff {

enum class Kind { None, Null, Boolean, Number, String, Object, Array };

constexpr std::string_view kind_name(Kind kind) noexcept {
  switch (kind) {
    case Kind::None: return "none";
    case Kind::Null: return "null";
    case Kind::Boolean: return "boolean";
    case Kind::Number: return "number";
    case Kind::String: return "string";
    case Kind::Object: return "object";
    case Kind::Array: return "array";
  }
  return "unknown";
}

class JsonValue;
using Array = std::vector<JsonValue>;

// Insertion-ordered map of unique keys.
class Object {
 public:
  using Member = std::pair<std::string, JsonValue>;
  using const_iterator = std::vector<Member>::const_iterator;

  Object() = default;
  Object(std::initializer_list<Member> members);

  // Returns false (and leaves the object untouched) when the key already exists.
  bool insert(std::string key, JsonValue value);

  const JsonValue* find(std::string_view key) const;
  bool contains(std::string_view key) const { return index_.find(key) != index_.end(); }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }

 private:
  std::vector<Member> members_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

// A JSON document node, or the None sentinel standing for a value that does
// not exist. None is only ever a comparison operand; it never sits inside an
// Object or Array.
class JsonValue {
 public:
  struct NoneTag {
    bool operator==(const NoneTag&) const = default;
  };

  JsonValue() noexcept : storage_(nullptr) {}
  JsonValue(std::nullptr_t) noexcept : storage_(nullptr) {}
  JsonValue(bool value) noexcept : storage_(value) {}
  JsonValue(double value) noexcept : storage_(value) {}
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  JsonValue(T value) noexcept : storage_(static_cast<double>(value)) {}
  JsonValue(const char* value) : storage_(std::string(value)) {}
  JsonValue(std::string value) noexcept : storage_(std::move(value)) {}
  JsonValue(std::string_view value) : storage_(std::string(value)) {}
  JsonValue(Object value) : storage_(std::move(value)) {}
  JsonValue(Array value) : storage_(std::move(value)) {}

  static const JsonValue& none() {
    static const JsonValue instance{NoneTag{}};
    return instance;
  }

  Kind kind() const noexcept {
    switch (storage_.index()) {
      case 0: return Kind::None;
      case 1: return Kind::Null;
      case 2: return Kind::Boolean;
      case 3: return Kind::Number;
      case 4: return Kind::String;
      case 5: return Kind::Object;
      default: return Kind::Array;
    }
  }

  bool is_none() const noexcept { return kind() == Kind::None; }
  bool is_null() const noexcept { return kind() == Kind::Null; }
  bool is_boolean() const noexcept { return kind() == Kind::Boolean; }
  bool is_number() const noexcept { return kind() == Kind::Number; }
  bool is_string() const noexcept { return kind() == Kind::String; }
  bool is_object() const noexcept { return kind() == Kind::Object; }
  bool is_array() const noexcept { return kind() == Kind::Array; }
  bool is_primitive() const noexcept {
    auto k = kind();
    return k == Kind::Null || k == Kind::Boolean || k == Kind::Number || k == Kind::String;
  }

  // Accessors throw std::bad_variant_access on a kind mismatch.
  bool as_boolean() const { return std::get<bool>(storage_); }
  double as_number() const { return std::get<double>(storage_); }
  const std::string& as_string() const { return std::get<std::string>(storage_); }
  const Object& as_object() const { return std::get<Object>(storage_); }
  Object& as_object() { return std::get<Object>(storage_); }
  const Array& as_array() const { return std::get<Array>(storage_); }
  Array& as_array() { return std::get<Array>(storage_); }

  // Structural equality: object member order is irrelevant, numbers compare
  // as doubles.
  friend bool operator==(const JsonValue& lhs, const JsonValue& rhs);

 private:
  explicit JsonValue(NoneTag tag) noexcept : storage_(tag) {}

  std::variant<NoneTag, std::nullptr_t, bool, double, std::string, Object, Array> storage_;
};

inline Object::Object(std::initializer_list<Member> members) {
  for (const auto& [key, value] : members) insert(key, value);
}

inline bool Object::insert(std::string key, JsonValue value) {
  if (index_.find(key) != index_.end()) return false;
  index_.emplace(key, members_.size());
  members_.emplace_back(std::move(key), std::move(value));
  return true;
}

inline const JsonValue* Object::find(std::string_view key) const {
  auto it = index_.find(key);
  return it == index_.end() ? nullptr : &members_[it->second].second;
}

inline bool operator==(const JsonValue& lhs, const JsonValue& rhs) {
  if (lhs.kind() != rhs.kind()) return false;
  switch (lhs.kind()) {
    case Kind::None:
    case Kind::Null: return true;
    case Kind::Boolean: return lhs.as_boolean() == rhs.as_boolean();
    case Kind::Number: return lhs.as_number() == rhs.as_number();
    case Kind::String: return lhs.as_string() == rhs.as_string();
    case Kind::Array: return lhs.as_array() == rhs.as_array();
    case Kind::Object: {
      const auto& a = lhs.as_object();
      const auto& b = rhs.as_object();
      if (a.size() != b.size()) return false;
      for (const auto& [key, value] : a) {
        const JsonValue* other = b.find(key);
        if (other == nullptr || !(*other == value)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace jdiff
