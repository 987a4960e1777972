#pragma once

#include <string>

namespace coind {

/// Outcome of a check. Renders as `PASS` or `FAIL <reason> @ <where>`.
struct Verdict {
  bool pass = true;
  std::string reason;
  std::string where;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string reason, std::string where) {
    return {false, std::move(reason), std::move(where)};
  }

  explicit operator bool() const { return pass; }
  std::string to_string() const { return pass ? "PASS" : "FAIL " + reason + " @ " + where; }
};

}  // namespace coind
