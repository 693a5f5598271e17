// Command-line front end. Exit codes: 0 all verdicts pass, 1 failure or
// bad input, 2 hypotheses not met for the given BS parameters.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "gw/bs_group.hpp"
#include "gw/error.hpp"
#include "gw/presentation.hpp"
#include "gw/smith.hpp"
#include "gw/stably_free.hpp"
#include "gw/torus_knot.hpp"

using nlohmann::json;

namespace {

struct Report {
  std::string command;
  json inputs = json::object();
  std::vector<gw::Verdict> verdicts;
  json result = json::object();
  std::vector<std::string> notes;
  bool warning = false;
};

void emit(const Report& r, const std::string& format, double ms) {
  if (format == "json") {
    json verdicts = json::array();
    for (const auto& v : r.verdicts) verdicts.push_back(gw::to_json(v));
    json out = {{"schema", 1},         {"command", r.command}, {"inputs", r.inputs},  {"verdicts", verdicts},
                {"warning", r.warning}, {"result", r.result},   {"notes", r.notes},   {"timing_ms", ms}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << r.command << "\n";
  for (const auto& v : r.verdicts) {
    const char* tag = v.passed ? "PASS" : (v.severity == gw::Severity::Fatal ? "FAIL" : v.severity == gw::Severity::Warning ? "WARN" : "NOTE");
    std::cout << "  " << tag << "  " << v.name << ": " << v.detail << "\n";
  }
  for (const auto& [k, v] : r.result.items())
    std::cout << "  " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (const auto& n : r.notes) std::cout << "  - " << n << "\n";
  if (r.warning) std::cout << "  warning: see WARN verdicts\n";
}

std::string read_input(const std::string& arg) {
  if (!arg.empty() && arg.front() == '<') return arg;
  std::ifstream in(arg);
  if (!in) throw gw::Error(gw::ErrorKind::Precondition, "cannot read '" + arg + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::pair<gw::Word, gw::Word>> parse_gluing(const std::string& text, const gw::Presentation& p1,
                                                        const gw::Presentation& p2) {
  std::vector<std::pair<gw::Word, gw::Word>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t\n") == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw gw::Error(gw::ErrorKind::Syntax, "gluing entry '" + item + "' lacks '='");
    out.emplace_back(gw::parse_word(item.substr(0, eq), p1.generators()), gw::parse_word(item.substr(eq + 1), p2.generators()));
  }
  return out;
}

std::map<std::string, std::string> parse_renaming(const std::string& text) {
  std::map<std::string, std::string> out;
  std::stringstream ss(text);
  std::string item;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw gw::Error(gw::ErrorKind::Syntax, "renaming entry '" + item + "' lacks '='");
    out[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
  }
  return out;
}

json matrix_json(const gw::IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

int torus_knot(bool printed_psi, bool tamper, Report& r) {
  r.command = "verify-torus-knot";
  r.inputs = {{"use_printed_psi", printed_psi}, {"tamper_phi", tamper}};
  const gw::TorusKnotReport rep = gw::verify_torus_knot({printed_psi, tamper});
  r.verdicts = rep.verdicts;
  r.notes = rep.notes;
  r.warning = rep.warning;
  r.result["gcd"] = rep.gcd.to_string();
  return rep.exit_code();
}

int verify_bs(long m, long n, Report& r) {
  r.command = "verify-bs";
  r.inputs = {{"m", m}, {"n", n}};
  const gw::BSParams params(m, n);
  const gw::BSPipelineReport rep = gw::verify_bs(params);
  r.verdicts = rep.hypotheses.verdicts;
  r.verdicts.insert(r.verdicts.end(), rep.certificate.verdicts.begin(), rep.certificate.verdicts.end());
  r.notes = rep.certificate.notes;
  const auto d = gw::bs_module_data(params);
  r.result = {{"group", params.to_string()}, {"abelianization", rep.hypotheses.abelianization.to_string()},
              {"r", d.r.to_string()},       {"s", d.s.to_string()},
              {"s1", d.s1.to_string()},     {"s2", d.s2.to_string()},
              {"w1", d.w1.to_string()},     {"w2", d.w2.to_string()}};
  return rep.exit_code();
}

int presentation_cmd(const std::string& sub, const std::vector<std::string>& args, const std::string& glue,
                     bool simplify, const std::string& rename, Report& r) {
  r.command = "presentation " + sub;
  const std::size_t need = sub == "pushout" ? 2 : 1;
  if (args.size() != need)
    throw gw::Error(gw::ErrorKind::Precondition, sub + " takes " + std::to_string(need) + " presentation(s)");
  const gw::Presentation p = gw::parse_presentation(read_input(args[0]));
  r.inputs["presentation"] = p.to_string();
  if (sub == "snf") {
    const auto snf = gw::smith_normal_form(gw::relation_matrix(p));
    r.result = {{"relation_matrix", matrix_json(gw::relation_matrix(p))}, {"d", matrix_json(snf.d)},
                {"u", matrix_json(snf.u)}, {"v", matrix_json(snf.v)}};
    const bool ok = snf.u * gw::relation_matrix(p) * snf.v == snf.d;
    r.verdicts.push_back({"U M V = D", ok, ok ? "residual 0" : "mismatch", gw::Severity::Fatal});
  } else if (sub == "abelianize") {
    r.result["abelianization"] = gw::abelianization(p).to_string();
  } else if (sub == "deficiency") {
    r.result["deficiency"] = gw::deficiency(p);
  } else if (sub == "tietze") {
    const auto t = gw::tietze_eliminate(p);
    r.result["presentation"] = t.presentation.to_string();
    for (const auto& step : t.log) r.notes.push_back(step.description);
    const bool ok = gw::abelianization(t.presentation) == gw::abelianization(p);
    r.verdicts.push_back({"abelianization unchanged", ok, gw::abelianization(t.presentation).to_string(), gw::Severity::Fatal});
  } else if (sub == "pushout") {
    const gw::Presentation p2 = gw::parse_presentation(read_input(args[1]));
    r.inputs["second"] = p2.to_string();
    r.inputs["gluing"] = glue;
    auto res = gw::pushout_presentation(p, p2, parse_gluing(glue, p, p2));
    gw::Presentation out = res.presentation;
    r.notes = res.warnings;
    if (simplify) {
      const auto t = gw::tietze_eliminate(out);
      out = t.presentation;
      for (const auto& step : t.log) r.notes.push_back(step.description);
    }
    if (!rename.empty()) out = out.renamed(parse_renaming(rename));
    r.result = {{"presentation", out.to_string()}, {"deficiency", gw::deficiency(out)},
                {"abelianization", gw::abelianization(out).to_string()}};
    r.warning = !res.warnings.empty();
  } else {
    throw gw::Error(gw::ErrorKind::Precondition, "unknown presentation subcommand '" + sub + "'");
  }
  if (r.verdicts.empty()) r.verdicts.push_back({"parsed", true, p.to_string(), gw::Severity::Info});
  return gw::all_fatal_passed(r.verdicts) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact group-ring and presentation computations"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* tk = app.add_subcommand("verify-torus-knot", "gcd certificate and case analysis for T(2,3) <= T(10,15)");
  bool printed_psi = false, tamper = false;
  tk->add_flag("--use-printed-psi", printed_psi, "Also take the gcd of the realised pi(psi), pi(phi)");
  tk->add_flag("--tamper-phi", tamper, "Negate the v^-15 coefficient of phi");

  auto* bs = app.add_subcommand("verify-bs", "hypothesis checks and stably free certificate over Z BS(m,n)");
  long m = 0, n = 0;
  bs->add_option("--m", m)->required();
  bs->add_option("--n", n)->required();

  auto* pres = app.add_subcommand("presentation", "snf | abelianize | deficiency | tietze | pushout");
  std::string sub, glue, rename;
  std::vector<std::string> args;
  bool simplify = false;
  pres->add_option("operation", sub)->required()->check(CLI::IsMember({"snf", "abelianize", "deficiency", "tietze", "pushout"}));
  pres->add_option("inputs", args, "Presentation text (starting with '<') or a file")->required();
  pres->add_option("--glue", glue, "Gluing pairs, e.g. \"x = a^5, y = b^5\"");
  pres->add_flag("--simplify", simplify, "Run Tietze elimination on the pushout");
  pres->add_option("--rename", rename, "Final renaming, e.g. \"a=p, b=q\"");

  for (auto* s : {tk, bs, pres}) s->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  Report report;
  const auto start = std::chrono::steady_clock::now();
  int code = 1;
  try {
    if (*tk) code = torus_knot(printed_psi, tamper, report);
    else if (*bs) code = verify_bs(m, n, report);
    else code = presentation_cmd(sub, args, glue, simplify, rename, report);
  } catch (const gw::Error& e) {
    std::cerr << "error (" << gw::to_string(e.kind()) << "): " << e.what() << "\n";
    return 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  emit(report, format, ms);
  return code;
}
