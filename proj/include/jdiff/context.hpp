#pragma once

#include <algorithm>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jdiff/error.hpp"
#include "jdiff/json.hpp"
#include "jdiff/matrix.hpp"
#include "jdiff/path.hpp"

namespace jdiff {

// How arrays are compared: positions matter (ordered) or not, and whether only
// identical elements may pair (exact) or partial matches are optimized (fuzzy).
struct MatchMode {
  bool ordered = true;
  bool fuzzy = false;

  static constexpr MatchMode ordered_exact() { return {true, false}; }
  static constexpr MatchMode ordered_fuzzy() { return {true, true}; }
  static constexpr MatchMode unordered_exact() { return {false, false}; }
  static constexpr MatchMode unordered_fuzzy() { return {false, true}; }

  bool operator==(const MatchMode&) const = default;
};

constexpr std::string_view mode_name(MatchMode mode) noexcept {
  if (mode.ordered) return mode.fuzzy ? "ordered-fuzzy" : "ordered-exact";
  return mode.fuzzy ? "unordered-fuzzy" : "unordered-exact";
}

inline std::optional<MatchMode> parse_mode(std::string_view name) noexcept {
  for (auto mode : {MatchMode::ordered_exact(), MatchMode::ordered_fuzzy(), MatchMode::unordered_exact(),
                    MatchMode::unordered_fuzzy()}) {
    if (mode_name(mode) == name) return mode;
  }
  return std::nullopt;
}

// Event categories emitted by the engine itself. Operators add their own.
namespace category {
inline constexpr std::string_view kObjectAdd = "object:add";
inline constexpr std::string_view kObjectRemove = "object:remove";
inline constexpr std::string_view kValueChange = "value:change";
inline constexpr std::string_view kArrayAdd = "array:add";
inline constexpr std::string_view kArrayRemove = "array:remove";
}  // namespace category

// The two operands of one comparison and where they sit in their documents.
// Either side may be JsonValue::none() when it does not exist.
struct Level {
  const JsonValue& left;
  const JsonValue& right;
  const JsonPath& left_path;
  const JsonPath& right_path;
};

// A path is empty in events when its side does not exist.
struct ChangeEvent {
  std::string category;
  std::string left_path;
  std::string right_path;
  JsonValue left = JsonValue::none();
  JsonValue right = JsonValue::none();
  std::optional<JsonValue> info;
};

struct PairRecord {
  std::string left_path;
  std::string right_path;
  double score = 0.0;
};

// Collects what a single diff execution reports. Not shared between threads.
class Recorder {
 public:
  void event(ChangeEvent e) { events_.push_back(std::move(e)); }
  void pair(PairRecord p) { pairs_.push_back(std::move(p)); }

  const std::vector<ChangeEvent>& events() const noexcept { return events_; }
  const std::vector<PairRecord>& pairs() const noexcept { return pairs_; }
  bool empty() const noexcept { return events_.empty() && pairs_.empty(); }

 private:
  std::vector<ChangeEvent> events_;
  std::vector<PairRecord> pairs_;
};

// An operator's answer: handled=false falls through to the next operator and
// finally to the default similarity.
struct Verdict {
  bool handled = false;
  double score = 0.0;

  static Verdict pass() { return {}; }
  static Verdict scored(double score) { return {true, score}; }
};

class DiffContext;

// A similarity hook scoped to the paths its rule matches. The rule is tested
// against the rendered left path. Implementations must be stateless (or
// synchronized): one instance may serve concurrent diffs.
class Operator {
 public:
  Operator(std::string name, PathRule rule) : name_(std::move(name)), rule_(std::move(rule)) {}
  virtual ~Operator() = default;

  Operator(const Operator&) = delete;
  Operator& operator=(const Operator&) = delete;

  // Also the category of the events this operator reports.
  const std::string& name() const noexcept { return name_; }
  const PathRule& rule() const noexcept { return rule_; }

  virtual Verdict diff(const Level& level, DiffContext& ctx) const = 0;

 private:
  std::string name_;
  PathRule rule_;
};

using OperatorPtr = std::shared_ptr<const Operator>;

// Validated engine parameters. Operators are consulted in order, first match
// wins.
struct EngineSettings {
  MatchMode default_mode = MatchMode::ordered_exact();
  double pair_threshold = 0.5;
  std::size_t max_depth = 512;
  std::vector<OperatorPtr> operators;
};

// State of one diff execution: settings, the event sink and the drill flag.
// While drilling (exploratory comparisons inside matchers) nothing reaches
// the recorder.
class DiffContext {
 public:
  DiffContext(const EngineSettings& settings, Recorder& recorder) : settings_(settings), recorder_(recorder) {}

  DiffContext(const DiffContext&) = delete;
  DiffContext& operator=(const DiffContext&) = delete;

  const EngineSettings& settings() const noexcept { return settings_; }
  bool drilling() const noexcept { return drilling_; }
  double pair_threshold() const noexcept { return settings_.pair_threshold; }

  // Full dispatch: operators, then the None rule, then the default by kind.
  double similarity(const Level& level);
  // Array comparison under an explicit mode, bypassing operators at this level.
  double array_similarity(const Level& level, MatchMode mode);

  // Records an event built from the level unless drilling.
  void report(std::string_view category, const Level& level, std::optional<JsonValue> info = std::nullopt);
  void record_pair(const Level& level, double score);

  class DrillScope {
   public:
    explicit DrillScope(DiffContext& ctx) : ctx_(ctx), saved_(ctx.drilling_) { ctx_.drilling_ = true; }
    ~DrillScope() { ctx_.drilling_ = saved_; }
    DrillScope(const DrillScope&) = delete;
    DrillScope& operator=(const DrillScope&) = delete;

   private:
    DiffContext& ctx_;
    bool saved_;
  };
  [[nodiscard]] DrillScope drill() { return DrillScope(*this); }

  class DepthGuard {
   public:
    explicit DepthGuard(DiffContext& ctx) : ctx_(ctx) {
      if (++ctx_.depth_ > ctx_.settings_.max_depth) {
        --ctx_.depth_;
        throw ResourceError("recursion depth limit of " + std::to_string(ctx_.settings_.max_depth) + " exceeded");
      }
    }
    ~DepthGuard() { --ctx_.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;

   private:
    DiffContext& ctx_;
  };
  [[nodiscard]] DepthGuard descend() { return DepthGuard(*this); }

 private:
  const EngineSettings& settings_;
  Recorder& recorder_;
  bool drilling_ = false;
  std::size_t depth_ = 0;
};

namespace detail {

inline double clamp_score(double score) {
  if (!(score > 0.0)) return 0.0;  // also catches NaN
  return score > 1.0 ? 1.0 : score;
}

// Sums in ascending order so the result does not depend on which operand was
// on the left.
inline double canonical_sum(std::vector<double> terms) {
  std::sort(terms.begin(), terms.end());
  double total = 0.0;
  for (double t : terms) total += t;
  return total;
}

inline std::string render_side(const JsonValue& value, const JsonPath& path) {
  return value.is_none() ? std::string() : render_path(path);
}

}  // namespace detail

// Similarity functions. Definitions live in similarity.hpp and
// array_matching.hpp, which include each other.

inline double similarity(const Level& level, DiffContext& ctx);
inline std::optional<double> apply_operators(const Level& level, DiffContext& ctx);
inline double default_similarity(const Level& level, DiffContext& ctx);
inline double primitive_similarity(const JsonValue& left, const JsonValue& right);
inline double object_similarity(const Level& level, DiffContext& ctx);

inline double array_similarity(const Level& level, MatchMode mode, DiffContext& ctx);
inline double array_similarity_helper(const Level& level, const std::vector<IndexPair>& pairs, DiffContext& ctx);
inline void record_array_outcome(const Level& level, const std::vector<IndexPair>& pairs, DiffContext& ctx);
inline std::vector<IndexPair> match_arrays(const Level& level, MatchMode mode, DiffContext& ctx);

inline Matrix similarity_matrix(const Level& level, DiffContext& ctx);
inline DpTable lcs_table(const Level& level, DiffContext& ctx);
inline std::vector<IndexPair> backtrack_lcs(const Level& level, const DpTable& table, DiffContext& ctx);
inline DpTable edit_alignment_table(const Level& level, DiffContext& ctx);
inline std::vector<IndexPair> backtrack_edit_alignment(const Level& level, const DpTable& table, DiffContext& ctx);
inline std::vector<IndexPair> brute_force_matching(const Level& level, DiffContext& ctx);
inline std::vector<IndexPair> unordered_fuzzy_matching(const Level& level, DiffContext& ctx);

}  // namespace jdiff
