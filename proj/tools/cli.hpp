#pragma once

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jdiff/config_file.hpp"
#include "jdiff/jdiff.hpp"

namespace jdiff::cli {

enum ExitCode : int {
  kIdentical = 0,
  kDifferent = 1,
  kUsageError = 2,
  kInternalError = 3,
};

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string read_source(const std::string& name, std::istream& in) {
  if (name == "-") {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  std::ifstream file(name, std::ios::binary);
  if (!file) throw UsageError("cannot read '" + name + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

inline JsonValue load_document(const std::string& name, std::istream& in) {
  const std::string text = read_source(name, in);
  try {
    return parse_json(text);
  } catch (const ParseError& e) {
    throw UsageError((name == "-" ? std::string("<stdin>") : name) + ": " + e.what());
  }
}

}  // namespace detail

// jdiff LEFT RIGHT [--config FILE] [--out FILE] [--mode MODE] [--ignore REGEX]...
//                  [--unordered REGEX]... [--threshold N] [--summary | --quiet]
//
// Exit status: 0 identical, 1 different, 2 usage/IO/parse/config error,
// 3 operator or internal failure.
inline int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Structural JSON diff with configurable array matching", "jdiff"};
  std::string left_name;
  std::string right_name;
  std::string config_path;
  std::string out_path;
  std::string mode_name_flag;
  std::vector<std::string> ignore_flags;
  std::vector<std::string> unordered_flags;
  std::optional<double> threshold_flag;
  bool summary_flag = false;
  bool quiet_flag = false;

  app.add_option("left", left_name, "Left document (file or - for stdin)")->required();
  app.add_option("right", right_name, "Right document (file or - for stdin)")->required();
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", out_path, "Write the diff result JSON here (- for stdout)");
  app.add_option("--mode", mode_name_flag, "Default array mode")
      ->check(CLI::IsMember({"ordered-exact", "ordered-fuzzy", "unordered-exact", "unordered-fuzzy"}));
  app.add_option("--ignore", ignore_flags, "Path regex to ignore (repeatable)")->allow_extra_args(false)->take_all();
  app.add_option("--unordered", unordered_flags, "Path regex compared as a set (repeatable)")->allow_extra_args(false)->take_all();
  app.add_option("--threshold", threshold_flag, "Fuzzy pair acceptance threshold in [0, 1]");
  auto* summary_opt = app.add_flag("--summary", summary_flag, "Print the summary (default)");
  auto* quiet_opt = app.add_flag("--quiet", quiet_flag, "Print nothing on success");
  summary_opt->excludes(quiet_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kIdentical;
  } catch (const CLI::ParseError& e) {
    err << "jdiff: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (left_name == "-" && right_name == "-") throw detail::UsageError("at most one document may come from stdin");

    ConfigFile file;
    if (!config_path.empty()) {
      const std::string text = detail::read_source(config_path, in);
      try {
        file = load_config(parse_json(text));
      } catch (const ParseError& e) {
        throw detail::UsageError(config_path + ": " + e.what());
      }
    }
    if (!mode_name_flag.empty()) file.default_mode = parse_mode(mode_name_flag);
    if (threshold_flag) file.pair_threshold = *threshold_flag;
    for (const auto& pattern : ignore_flags) file.ignore.push_back(pattern);
    for (const auto& pattern : unordered_flags) file.unordered.push_back({pattern, std::nullopt});

    const Differ differ(file.to_diff_config());
    const JsonValue left = detail::load_document(left_name, in);
    const JsonValue right = detail::load_document(right_name, in);
    const DiffResult result = differ.diff(left, right);

    std::ostream* summary_stream = &out;
    if (!out_path.empty()) {
      const std::string text = serialize_result(result);
      if (out_path == "-") {
        out << text << "\n";
        summary_stream = &err;
      } else {
        std::ofstream file_out(out_path, std::ios::binary | std::ios::trunc);
        if (!(file_out << text)) throw detail::UsageError("cannot write '" + out_path + "'");
      }
    }
    if (!quiet_flag) *summary_stream << format_summary(result);
    return result.identical ? kIdentical : kDifferent;
  } catch (const detail::UsageError& e) {
    err << "jdiff: " << e.what() << "\n";
    return kUsageError;
  } catch (const ConfigError& e) {
    err << "jdiff: configuration error: " << e.what() << "\n";
    return kUsageError;
  } catch (const OperatorError& e) {
    err << "jdiff: " << e.what() << "\n";
    return kInternalError;
  } catch (const std::exception& e) {
    err << "jdiff: internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace jdiff::cli
