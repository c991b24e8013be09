#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "paw/engine.hpp"
#include "paw/kernel.hpp"
#include "paw/parse.hpp"
#include "paw/print.hpp"
#include "paw/relations.hpp"
#include "paw/report.hpp"

namespace fs = std::filesystem;
using paw::Json;

namespace {

// Exit codes: 0 success, 1 semantic negative (rejected proof, witness
// found), 2 input error.
constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

struct Config {
  unsigned bound = 64;
  std::string mode = "standard";
  std::uint64_t budget = 10000;
  unsigned coverage = 10;
  bool json = false;
  bool unicode = false;
  bool strict_pa = false;
  bool no_assumptions = false;

  paw::Mode mode_enum() const {
    return paw::mode_from_string(mode).value_or(paw::Mode::Standard);
  }
};

Json config_json(const Config& cfg, const std::vector<std::string>& inputs) {
  Json j;
  j["bound"] = cfg.bound;
  j["mode"] = cfg.mode;
  j["budget"] = cfg.budget;
  j["output"] = cfg.json ? "json" : "text";
  j["inputs"] = inputs;
  return j;
}

int emit(const std::string& command, const Config& cfg, const std::vector<std::string>& inputs,
         Json payload, int exit_code, const std::string& text) {
  if (cfg.json) {
    Json report;
    report["command"] = command;
    report["config"] = config_json(cfg, inputs);
    report["payload"] = std::move(payload);
    report["exit_code"] = exit_code;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return exit_code;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int fail_input(const std::string& command, const Config& cfg,
               const std::vector<std::string>& inputs, const std::string& message) {
  Json payload;
  payload["error"] = message;
  return emit(command, cfg, inputs, payload, kInputError, "error: " + message + "\n");
}

int fail_parse(const std::string& command, const Config& cfg,
               const std::vector<std::string>& inputs, const paw::ParseError& err) {
  Json payload;
  payload["error"] = "parse error";
  payload["detail"] = paw::to_json(err);
  std::ostringstream text;
  text << "parse error at offset " << err.span.start << ": " << err.message << "\n";
  return emit(command, cfg, inputs, payload, kInputError, text.str());
}

paw::PrintOptions primitive_opts(const Config& cfg) {
  return paw::PrintOptions{paw::PrintMode::Primitive, cfg.unicode};
}

paw::PrintOptions sugared_opts(const Config& cfg) {
  return paw::PrintOptions{paw::PrintMode::Sugared, cfg.unicode};
}

int cmd_parse(const Config& cfg, const std::string& path) {
  auto text = read_file(path);
  if (!text) return fail_input("parse", cfg, {path}, "cannot read '" + path + "'");
  paw::ParseResult r = paw::parse_formula(*text);
  if (auto* err = std::get_if<paw::ParseError>(&r)) return fail_parse("parse", cfg, {path}, *err);
  const paw::Formula& f = std::get<paw::Formula>(r);

  Json payload;
  payload["primitive"] = paw::print_formula(f, {paw::PrintMode::Primitive, false});
  payload["sugared"] = paw::print_formula(f, {paw::PrintMode::Sugared, false});
  Json fv = Json::array();
  std::ostringstream fv_text;
  for (paw::Variable v : paw::free_variables(f)) {
    fv.push_back(paw::variable_name(v));
    fv_text << " " << paw::variable_name(v);
  }
  payload["free_variables"] = fv;

  std::ostringstream text_out;
  text_out << "primitive: " << paw::print_formula(f, primitive_opts(cfg)) << "\n"
           << "sugared:   " << paw::print_formula(f, sugared_opts(cfg)) << "\n"
           << "free variables:" << (fv.empty() ? " (none)" : fv_text.str()) << "\n";
  return emit("parse", cfg, {path}, payload, kOk, text_out.str());
}

int cmd_check(const Config& cfg, const std::string& path) {
  auto text = read_file(path);
  if (!text) return fail_input("check", cfg, {path}, "cannot read '" + path + "'");
  auto pr = paw::parse_proof(*text);
  if (auto* err = std::get_if<paw::ParseError>(&pr)) return fail_parse("check", cfg, {path}, *err);
  const paw::Proof& proof = std::get<paw::Proof>(pr);

  paw::CheckOptions opts;
  opts.strict_pa = cfg.strict_pa;
  opts.allow_assumptions = !cfg.no_assumptions;
  paw::CheckReport report = paw::check_proof(proof, opts);

  Json payload = paw::to_json(report);
  payload["goal"] = paw::print_formula(proof.goal, {paw::PrintMode::Primitive, false});
  payload["goal_sugared"] = paw::print_formula(proof.goal, {paw::PrintMode::Sugared, false});

  std::ostringstream out;
  if (report.accepted) {
    out << "accepted: " << proof.lines.size() << " lines, goal "
        << paw::print_formula(proof.goal, sugared_opts(cfg)) << "\n";
    if (!report.assumption_lines.empty()) {
      out << "note: relies on " << report.assumption_lines.size() << " assumption line(s)\n";
    }
  } else {
    out << "rejected at line " << report.failing_line << ": " << report.reason << "\n";
  }
  return emit("check", cfg, {path}, std::move(payload), report.accepted ? kOk : kNegative,
              out.str());
}

int cmd_eval(const Config& cfg, const std::string& path) {
  auto text = read_file(path);
  if (!text) return fail_input("eval", cfg, {path}, "cannot read '" + path + "'");
  paw::ParseResult r = paw::parse_formula(*text);
  if (auto* err = std::get_if<paw::ParseError>(&r)) return fail_parse("eval", cfg, {path}, *err);
  const paw::Formula& f = std::get<paw::Formula>(r);

  paw::RelationRegistry registry = paw::default_registry(cfg.budget);
  paw::SatisfactionMethod sm{"term-evaluation", &registry};
  paw::Verdict v = paw::evaluate_truth(f, cfg.bound, cfg.mode_enum(), sm);

  Json payload;
  payload["formula"] = paw::print_formula(f, {paw::PrintMode::Primitive, false});
  payload["closure"] =
      paw::print_formula(paw::universal_closure(f), {paw::PrintMode::Primitive, false});
  payload["verdict"] = paw::to_json(v);

  std::ostringstream out;
  out << "formula: " << paw::print_formula(f, sugared_opts(cfg)) << "\n"
      << "verdict: " << paw::to_string(v.kind) << " (bound " << cfg.bound << ", mode " << cfg.mode
      << ")\n"
      << "evidence: " << v.evidence.algorithm_id << " ["
      << (v.evidence.method == paw::EvidenceMethod::Uniform ? "uniform" : "per-instance") << "]\n";
  return emit("eval", cfg, {path}, std::move(payload), kOk, out.str());
}

int cmd_verify(const Config& cfg, const std::string& path) {
  auto text = read_file(path);
  if (!text) return fail_input("verify", cfg, {path}, "cannot read '" + path + "'");
  paw::ParseResult r = paw::parse_formula(*text);
  if (auto* err = std::get_if<paw::ParseError>(&r)) return fail_parse("verify", cfg, {path}, *err);
  const paw::Formula& f = std::get<paw::Formula>(r);
  if (paw::free_variables(f).empty())
    return fail_input("verify", cfg, {path}, "no free variables");

  paw::RelationRegistry registry = paw::default_registry(cfg.budget);
  paw::SatisfactionMethod sm{"term-evaluation", &registry};
  paw::VerifyTable table = paw::verify_up_to(f, cfg.bound, sm);

  Json payload;
  payload["formula"] = paw::print_formula(f, {paw::PrintMode::Primitive, false});
  payload["table"] = paw::to_json(table);

  std::ostringstream out;
  out << "formula: " << paw::print_formula(f, sugared_opts(cfg)) << "\n"
      << "instances up to n = " << table.n << " (" << table.polarity() << ")\n";
  for (const paw::EvidenceRow& row : table.rows) {
    out << " ";
    for (std::size_t i = 0; i < row.args.size(); ++i)
      out << " " << paw::variable_name(table.vars[i]) << "=" << row.args[i].str();
    out << " -> " << (row.value ? (*row.value ? "true" : "false") : "undetermined") << " (steps "
        << row.steps << (row.certified ? ", certified" : "") << ")\n";
  }
  return emit("verify", cfg, {path}, std::move(payload), kOk, out.str());
}

int cmd_classify(const Config& cfg, const std::string& path) {
  auto text = read_file(path);
  if (!text) return fail_input("classify", cfg, {path}, "cannot read '" + path + "'");
  paw::ParseResult r = paw::parse_formula(*text);
  if (auto* err = std::get_if<paw::ParseError>(&r))
    return fail_parse("classify", cfg, {path}, *err);
  const paw::Formula& f = std::get<paw::Formula>(r);

  paw::RelationRegistry registry = paw::default_registry(cfg.budget);
  paw::SatisfactionMethod sm{"term-evaluation", &registry};
  paw::ClassifyResult c = paw::classify(f, cfg.bound, sm);

  Json payload;
  payload["formula"] = paw::print_formula(f, {paw::PrintMode::Primitive, false});
  payload["result"] = paw::to_json(c);

  std::ostringstream out;
  out << "formula: " << paw::print_formula(f, sugared_opts(cfg)) << "\n"
      << "classification: " << paw::to_string(c.classification) << " (bound " << cfg.bound
      << ")\n";
  if (c.decider) out << "decider: " << c.decider->algorithm_id << "\n";
  if (c.why_not)
    out << "no uniform decider: " << c.why_not->reason << " [" << c.why_not->blocking << "]\n";
  return emit("classify", cfg, {path}, std::move(payload), kOk, out.str());
}

int cmd_scan(const Config& cfg, const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    return fail_input("scan", cfg, {dir}, "'" + dir + "' is not a directory");

  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".proof")
      files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) return fail_input("scan", cfg, {dir}, "no .proof files in '" + dir + "'");

  paw::CheckOptions opts;
  opts.strict_pa = cfg.strict_pa;
  opts.allow_assumptions = !cfg.no_assumptions;

  std::vector<paw::CorpusEntry> corpus;
  for (const std::string& file : files) {
    auto text = read_file(file);
    if (!text) return fail_input("scan", cfg, {dir}, "cannot read '" + file + "'");
    auto pr = paw::parse_proof(*text);
    if (std::holds_alternative<paw::ParseError>(pr))
      return fail_input("scan", cfg, {dir}, "unchecked proof present: '" + file + "' does not parse");
    const paw::Proof& proof = std::get<paw::Proof>(pr);
    paw::CheckReport report = paw::check_proof(proof, opts);
    if (!report.accepted)
      return fail_input("scan", cfg, {dir},
                        "unchecked proof present: '" + file + "' rejected at line " +
                            std::to_string(report.failing_line) + " (" + report.reason + ")");
    corpus.push_back(paw::CorpusEntry{fs::path(file).filename().string(), proof.goal,
                                      !report.assumption_lines.empty()});
  }

  paw::ScanReport report = paw::consistency_scan(corpus, cfg.coverage);

  Json payload = paw::to_json(report);
  Json names = Json::array();
  for (const paw::CorpusEntry& e : corpus) {
    Json entry;
    entry["name"] = e.name;
    entry["goal"] = paw::print_formula(e.goal, {paw::PrintMode::Primitive, false});
    entry["uses_assumptions"] = e.uses_assumptions;
    names.push_back(entry);
  }
  payload["corpus"] = names;

  std::ostringstream out;
  out << "corpus: " << corpus.size() << " accepted proof(s), coverage " << cfg.coverage << "\n";
  for (const auto& w : report.simple)
    out << "simple inconsistency witness: " << w.formula << " [" << w.positive_name << "] vs ~("
        << w.formula << ") [" << w.negative_name << "]\n";
  for (const auto& w : report.omega)
    out << "omega pattern up to " << w.coverage << ": ~(A..)(" << w.formula << ") ["
        << w.negative_name << "] with all instances present\n";
  if (report.clean()) out << "no witness patterns found\n";
  return emit("scan", cfg, {dir}, std::move(payload), report.clean() ? kOk : kNegative, out.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"paw: parse, check and evaluate first-order arithmetic"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--bound", cfg.bound, "enumeration bound / instance count (default 64)")
      ->envname("PAW_BOUND")
      ->check(CLI::Range(1u, 1000000u));
  app.add_option("--mode", cfg.mode, "standard | algorithmic (default standard)")
      ->envname("PAW_MODE")
      ->check(CLI::IsMember({"standard", "algorithmic"}));
  app.add_option("--budget", cfg.budget, "step budget for machine-backed relations (default 10000)")
      ->envname("PAW_BUDGET")
      ->check(CLI::Range(std::uint64_t(1), std::uint64_t(1000000000000)));
  app.add_option("--coverage", cfg.coverage, "omega-pattern coverage for scan (default 10)")
      ->envname("PAW_COVERAGE");
  app.add_flag("--json", cfg.json, "machine-readable output")->envname("PAW_JSON");
  app.add_flag("--unicode", cfg.unicode, "logical symbols in text output");
  app.add_flag("--strict-pa", cfg.strict_pa, "disable the reflexivity axiom EQ");
  app.add_flag("--no-assumptions", cfg.no_assumptions, "reject ASSUME lines in proofs");

  std::string path;
  CLI::App* parse_cmd = app.add_subcommand("parse", "parse a formula file");
  parse_cmd->add_option("file", path)->required();
  CLI::App* check_cmd = app.add_subcommand("check", "check a proof file");
  check_cmd->add_option("file", path)->required();
  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate the truth of a formula");
  eval_cmd->add_option("file", path)->required();
  CLI::App* verify_cmd = app.add_subcommand("verify", "instance-by-instance verification table");
  verify_cmd->add_option("file", path)->required();
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "computable / verifiable-only classification");
  classify_cmd->add_option("file", path)->required();
  CLI::App* scan_cmd = app.add_subcommand("scan", "consistency-definition scan over proofs");
  scan_cmd->add_option("dir", path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (parse_cmd->parsed()) return cmd_parse(cfg, path);
    if (check_cmd->parsed()) return cmd_check(cfg, path);
    if (eval_cmd->parsed()) return cmd_eval(cfg, path);
    if (verify_cmd->parsed()) return cmd_verify(cfg, path);
    if (classify_cmd->parsed()) return cmd_classify(cfg, path);
    if (scan_cmd->parsed()) return cmd_scan(cfg, path);
  } catch (const std::exception& e) {
    return fail_input("error", cfg, {path}, e.what());
  }
  return kInputError;
}
