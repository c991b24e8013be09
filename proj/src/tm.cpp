#include "paw/tm.hpp"

#include <stdexcept>

namespace paw {

namespace {

const char* symbol_text(TapeSymbol s) {
  switch (s) {
    case TapeSymbol::S0: return "0";
    case TapeSymbol::S1: return "1";
    case TapeSymbol::Blank: return "_";
  }
  return "?";
}

TapeSymbol symbol_from_text(const std::string& s) {
  if (s == "0") return TapeSymbol::S0;
  if (s == "1") return TapeSymbol::S1;
  if (s == "_") return TapeSymbol::Blank;
  throw std::invalid_argument("machine spec: bad symbol '" + s + "'");
}

const char* move_text(TapeMove m) {
  switch (m) {
    case TapeMove::Left: return "L";
    case TapeMove::Right: return "R";
    case TapeMove::Halt: return "H";
  }
  return "?";
}

TapeMove move_from_text(const std::string& s) {
  if (s == "L") return TapeMove::Left;
  if (s == "R") return TapeMove::Right;
  if (s == "H") return TapeMove::Halt;
  throw std::invalid_argument("machine spec: bad move '" + s + "'");
}

}  // namespace

void MachineSpec::validate() const {
  if (states == 0) throw std::invalid_argument("machine spec: no states");
  if (initial >= states) throw std::invalid_argument("machine spec: initial state out of range");
  for (unsigned q = 0; q < states; ++q) {
    for (TapeSymbol sym : {TapeSymbol::S0, TapeSymbol::S1, TapeSymbol::Blank}) {
      auto it = table.find({q, sym});
      if (it == table.end())
        throw std::invalid_argument("machine spec '" + name + "': no transition for state " +
                                    std::to_string(q) + " on symbol " + symbol_text(sym));
      if (it->second.next_state >= states)
        throw std::invalid_argument("machine spec '" + name + "': transition target out of range");
    }
  }
  for (const auto& [key, t] : table) {
    if (key.first >= states)
      throw std::invalid_argument("machine spec '" + name + "': transition from unknown state");
  }
}

RunResult run_tm(const MachineSpec& m, const std::vector<int>& input_bits, std::uint64_t budget) {
  if (budget == 0) throw std::invalid_argument("run_tm: budget must be positive");
  m.validate();

  std::map<long long, TapeSymbol> tape;
  for (std::size_t i = 0; i < input_bits.size(); ++i)
    tape[static_cast<long long>(i)] = input_bits[i] ? TapeSymbol::S1 : TapeSymbol::S0;

  long long head = 0;
  unsigned state = m.initial;
  RunResult result;
  result.budget = budget;

  auto read = [&](long long pos) {
    auto it = tape.find(pos);
    return it == tape.end() ? TapeSymbol::Blank : it->second;
  };

  for (std::uint64_t step = 1; step <= budget; ++step) {
    const Transition& t = m.table.at({state, read(head)});
    if (t.write == TapeSymbol::Blank)
      tape.erase(head);
    else
      tape[head] = t.write;
    state = t.next_state;
    if (t.move == TapeMove::Halt) {
      result.halted = true;
      result.steps = step;
      break;
    }
    head += t.move == TapeMove::Right ? 1 : -1;
  }
  if (!result.halted) result.steps = budget;

  // digest: trimmed non-blank window plus the head offset within it
  long long lo = 0, hi = -1;
  bool any = false;
  for (const auto& [pos, sym] : tape) {
    if (sym == TapeSymbol::Blank) continue;
    if (!any) {
      lo = hi = pos;
      any = true;
    } else {
      hi = pos;
    }
  }
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&](char c) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  };
  if (any) {
    for (long long p = lo; p <= hi; ++p) feed(symbol_text(read(p))[0]);
    for (char c : std::to_string(head - lo)) feed(c);
    result.first_output_bit = read(lo) == TapeSymbol::S1 ? 1 : 0;
  } else {
    feed('e');
  }
  result.tape_digest = h;
  return result;
}

nlohmann::ordered_json machine_to_json(const MachineSpec& m) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["name"] = m.name;
  j["states"] = m.states;
  j["initial"] = m.initial;
  nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
  for (const auto& [key, t] : m.table) {
    nlohmann::ordered_json row;
    row["state"] = key.first;
    row["read"] = symbol_text(key.second);
    row["next"] = t.next_state;
    row["write"] = symbol_text(t.write);
    row["move"] = move_text(t.move);
    transitions.push_back(row);
  }
  j["transitions"] = transitions;
  return j;
}

MachineSpec machine_from_json(const nlohmann::json& j) {
  if (!j.contains("version") || j.at("version").get<int>() != 1)
    throw std::invalid_argument("machine spec: unsupported version");
  MachineSpec m;
  m.name = j.value("name", "");
  m.states = j.at("states").get<unsigned>();
  m.initial = j.value("initial", 0u);
  for (const auto& row : j.at("transitions")) {
    unsigned state = row.at("state").get<unsigned>();
    TapeSymbol read = symbol_from_text(row.at("read").get<std::string>());
    if (m.table.count({state, read}))
      throw std::invalid_argument("machine spec '" + m.name + "': duplicate transition for state " +
                                  std::to_string(state) + " on symbol " +
                                  row.at("read").get<std::string>());
    Transition t;
    t.next_state = row.at("next").get<unsigned>();
    t.write = symbol_from_text(row.at("write").get<std::string>());
    t.move = move_from_text(row.at("move").get<std::string>());
    m.table[{state, read}] = t;
  }
  m.validate();
  return m;
}

}  // namespace paw
