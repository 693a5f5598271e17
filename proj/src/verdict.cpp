#include "gw/verdict.hpp"

#include <algorithm>

#include "gw/stably_free.hpp"

namespace gw {

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Fatal: return "fatal";
    case Severity::Warning: return "warning";
    case Severity::Info: return "info";
  }
  return "fatal";
}

bool all_fatal_passed(const std::vector<Verdict>& verdicts) {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.passed || v.severity != Severity::Fatal; });
}

bool any_warning_failed(const std::vector<Verdict>& verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return !v.passed && v.severity == Severity::Warning; });
}

nlohmann::json to_json(const Verdict& v) {
  return {{"name", v.name}, {"pass", v.passed}, {"residual", v.detail}, {"severity", to_string(v.severity)}};
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : c.verdicts) verdicts.push_back(to_json(v));
  return {{"verdicts", verdicts}, {"notes", c.notes}, {"all_passed", c.all_passed()}};
}

}  // namespace gw
