#pragma once

#include <string>
#include <vector>

namespace gw {

enum class Severity {
  Fatal,    // a failure invalidates the run
  Warning,  // reported, run still succeeds
  Info,     // recorded value, never a failure
};

const char* to_string(Severity s);

struct Verdict {
  std::string name;
  bool passed = false;
  std::string detail;  // residual or explanation, exact text
  Severity severity = Severity::Fatal;
};

/// True when no Fatal verdict failed.
bool all_fatal_passed(const std::vector<Verdict>& verdicts);
bool any_warning_failed(const std::vector<Verdict>& verdicts);

}  // namespace gw
