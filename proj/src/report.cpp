#include "paw/report.hpp"

#include <iomanip>
#include <sstream>

#include "paw/print.hpp"

namespace paw {

namespace {

std::string digest_hex(std::uint64_t d) {
  std::ostringstream out;
  out << "fnv1a64:" << std::hex << std::setfill('0') << std::setw(16) << d;
  return out.str();
}

Json rows_to_json(const std::vector<EvidenceRow>& rows) {
  Json arr = Json::array();
  for (const EvidenceRow& r : rows) {
    Json row;
    Json args = Json::array();
    for (const Nat& a : r.args) args.push_back(a.str());
    row["args"] = args;
    if (r.value)
      row["value"] = *r.value;
    else
      row["value"] = nullptr;
    row["steps"] = r.steps;
    row["certified"] = r.certified;
    arr.push_back(row);
  }
  return arr;
}

}  // namespace

Json to_json(const ParseError& e) {
  Json j;
  j["message"] = e.message;
  j["span"] = Json{{"start", e.span.start}, {"end", e.span.end}};
  j["expected"] = e.expected;
  return j;
}

Json to_json(const Evidence& e) {
  Json j;
  j["algorithm_id"] = e.algorithm_id;
  j["method"] = e.method == EvidenceMethod::Uniform ? "uniform" : "per-instance";
  j["note"] = e.note;
  j["instances"] = rows_to_json(e.instances);
  j["trace_digest"] = digest_hex(trace_digest(e));
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["kind"] = to_string(v.kind);
  if (v.holds)
    j["holds"] = *v.holds;
  else
    j["holds"] = nullptr;
  j["polarity"] = v.polarity();
  j["bound"] = v.bound;
  j["steps"] = v.steps;
  j["evidence"] = to_json(v.evidence);
  return j;
}

Json to_json(const VerifyTable& t) {
  Json j;
  Json vars = Json::array();
  for (Variable v : t.vars) vars.push_back(variable_name(v));
  j["vars"] = vars;
  j["n"] = t.n;
  j["polarity"] = t.polarity();
  j["fully_decided"] = t.fully_decided();
  j["evidence"] = to_json(t.to_evidence());
  return j;
}

Json to_json(const CheckReport& r) {
  Json j;
  j["verdict"] = r.accepted ? "accepted" : "rejected";
  if (!r.accepted) {
    j["failing_line"] = r.failing_line;
    j["reason"] = r.reason;
  }
  Json lines = Json::array();
  for (const LineReport& lr : r.lines) {
    Json line;
    line["index"] = lr.index;
    line["justification"] = lr.justification;
    line["resolved"] = lr.resolved;
    lines.push_back(line);
  }
  j["lines"] = lines;
  j["assumptions"] = r.assumption_lines;
  return j;
}

Json to_json(const Decider& d) {
  Json j;
  j["algorithm_id"] = d.algorithm_id;
  j["description"] = d.description;
  j["domain_note"] = d.domain_note;
  Json params = Json::array();
  for (Variable v : d.params) params.push_back(variable_name(v));
  j["params"] = params;
  return j;
}

Json to_json(const NotFound& n) {
  Json j;
  j["reason"] = n.reason;
  j["blocking"] = n.blocking;
  return j;
}

Json to_json(const ClassifyResult& c) {
  Json j;
  j["classification"] = to_string(c.classification);
  j["bound"] = c.bound;
  if (c.decider) j["decider"] = to_json(*c.decider);
  if (c.why_not) j["why_not"] = to_json(*c.why_not);
  if (c.table) j["table"] = to_json(*c.table);
  if (c.closed_verdict) j["closed_verdict"] = to_json(*c.closed_verdict);
  return j;
}

Json to_json(const ScanReport& s) {
  Json j;
  j["coverage"] = s.coverage;
  j["clean"] = s.clean();
  Json simple = Json::array();
  for (const SimpleInconsistencyWitness& w : s.simple) {
    Json e;
    e["formula"] = w.formula;
    e["positive"] = w.positive_name;
    e["negative"] = w.negative_name;
    simple.push_back(e);
  }
  j["simple_inconsistency"] = simple;
  Json omega = Json::array();
  for (const OmegaPatternWitness& w : s.omega) {
    Json e;
    e["formula"] = w.formula;
    e["negative"] = w.negative_name;
    e["coverage"] = w.coverage;
    e["instances"] = w.instance_names;
    omega.push_back(e);
  }
  j["omega_pattern"] = omega;
  return j;
}

}  // namespace paw
