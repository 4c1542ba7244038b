#include "rev/scenario.hpp"

#include <fstream>
#include <sstream>

#include "rev/counteracts.hpp"

namespace rev {

namespace {

std::string strip(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Extracts the next double-quoted string from `rest`, consuming it.
std::string take_quoted(std::string& rest, int line) {
  std::size_t open = rest.find('"');
  if (open == std::string::npos) throw ScenarioError("expected a quoted formula", line);
  std::size_t close = rest.find('"', open + 1);
  if (close == std::string::npos) throw ScenarioError("unterminated quote", line);
  std::string out = rest.substr(open + 1, close - open - 1);
  rest = rest.substr(close + 1);
  return out;
}

ModelSet compile(const std::string& formula, const Language& lang, int line) {
  try {
    return models(formula, lang);
  } catch (const ParseError& e) {
    throw ScenarioError("formula error: " + std::string(e.what()), line);
  }
}

std::string set_text(const ModelSet& s, const Language& lang) {
  std::string out = "{";
  bool first = true;
  for (Valuation v : s.members()) {
    if (!first) out += ' ';
    out += lang.bitstring(v);
    first = false;
  }
  return out + "}";
}

}  // namespace

Scenario parse_scenario(const std::string& source) {
  std::istringstream in(source);
  std::string raw;
  int line_no = 0;

  std::optional<Language> lang;
  std::optional<TotalPreorder> initial;
  std::vector<ScenarioStep> steps;
  bool saw_op_before_revise = false;
  bool saw_revise = false;
  int first_revise_line = 0;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    std::istringstream ls(line);
    std::string word;
    ls >> word;
    std::string rest;
    std::getline(ls, rest);

    if (word == "atoms") {
      if (lang) throw ScenarioError("duplicate atoms directive", line_no);
      std::vector<std::string> names;
      std::istringstream as(rest);
      std::string a;
      while (as >> a) names.push_back(a);
      try {
        lang = Language(names);
      } catch (const LanguageError& e) {
        throw ScenarioError(e.what(), line_no);
      }
      continue;
    }
    if (!lang) throw ScenarioError("atoms directive must come first", line_no);

    if (word == "kb") {
      if (initial) throw ScenarioError("initial state already set", line_no);
      ModelSet kb = compile(take_quoted(rest, line_no), *lang, line_no);
      if (kb.empty()) throw ScenarioError("kb is unsatisfiable", line_no);
      initial = faithful_from_kb(*lang, kb);
      continue;
    }
    if (word == "levels") {
      if (initial) throw ScenarioError("initial state already set", line_no);
      try {
        initial = TotalPreorder::parse_text(*lang, rest);
      } catch (const PreorderError& e) {
        throw ScenarioError(e.what(), line_no);
      }
      continue;
    }

    ScenarioStep step;
    step.line = line_no;
    if (word == "op") {
      std::string opname = strip(rest);
      auto op = operator_by_name(opname);
      if (!op) throw ScenarioError("unknown operator '" + opname + "'", line_no);
      step.kind = ScenarioStep::Kind::SetOp;
      step.op = *op;
      if (!saw_revise) saw_op_before_revise = true;
    } else if (word == "revise") {
      step.kind = ScenarioStep::Kind::Revise;
      step.text = take_quoted(rest, line_no);
      step.set = compile(step.text, *lang, line_no);
      if (!saw_revise) first_revise_line = line_no;
      saw_revise = true;
    } else if (word == "assert-believes") {
      step.kind = ScenarioStep::Kind::AssertBelieves;
      step.text = take_quoted(rest, line_no);
      step.set = compile(step.text, *lang, line_no);
    } else if (word == "assert-not-believes") {
      step.kind = ScenarioStep::Kind::AssertNotBelieves;
      step.text = take_quoted(rest, line_no);
      step.set = compile(step.text, *lang, line_no);
    } else if (word == "assert-state") {
      step.kind = ScenarioStep::Kind::AssertState;
      try {
        step.state = TotalPreorder::parse_text(*lang, rest);
      } catch (const PreorderError& e) {
        throw ScenarioError(e.what(), line_no);
      }
    } else if (word == "counteracts") {
      step.kind = ScenarioStep::Kind::Counteracts;
      step.text = take_quoted(rest, line_no);
      step.text2 = take_quoted(rest, line_no);
      step.set = compile(step.text, *lang, line_no);
      step.set2 = compile(step.text2, *lang, line_no);
    } else if (word == "show") {
      step.kind = ScenarioStep::Kind::Show;
    } else {
      throw ScenarioError("unknown directive '" + word + "'", line_no);
    }
    steps.push_back(std::move(step));
  }

  if (!lang) throw ScenarioError("scenario has no atoms directive", 0);
  if (!initial) throw ScenarioError("scenario has no kb or levels directive", 0);
  if (saw_revise && !saw_op_before_revise)
    throw ScenarioError("an op directive must precede the first revise", first_revise_line);
  return Scenario{*lang, *initial, std::move(steps)};
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'", 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

RunResult run_scenario(const Scenario& s, std::optional<Operator> forced_op) {
  RunResult result;
  std::ostringstream out;
  const Language& lang = s.lang;
  TotalPreorder state = s.initial;
  Operator current_op = forced_op.value_or(Operator::Restrained);

  out << "initial " << state.to_text(lang) << '\n';
  int step_index = 0;
  for (const auto& step : s.steps) {
    ++step_index;
    switch (step.kind) {
      case ScenarioStep::Kind::SetOp:
        if (!forced_op) current_op = step.op;
        out << "op " << name(current_op) << '\n';
        break;
      case ScenarioStep::Kind::Revise: {
        if (step.set->empty()) {
          out << "abort: revise \"" << step.text << "\" is inconsistent (step "
              << step_index << ")\n";
          result.transcript = out.str();
          result.exit_status = 2;
          return result;
        }
        state = revise(current_op, state, *step.set);
        out << "revise " << name(current_op) << " \"" << step.text << "\" -> "
            << state.to_text(lang) << '\n';
        break;
      }
      case ScenarioStep::Kind::AssertBelieves: {
        bool ok = believes(state, *step.set);
        if (!ok) ++result.assertions_failed;
        out << "assert-believes \"" << step.text << "\" " << (ok ? "PASS" : "FAIL") << '\n';
        break;
      }
      case ScenarioStep::Kind::AssertNotBelieves: {
        bool ok = !believes(state, *step.set);
        if (!ok) ++result.assertions_failed;
        out << "assert-not-believes \"" << step.text << "\" " << (ok ? "PASS" : "FAIL")
            << '\n';
        break;
      }
      case ScenarioStep::Kind::AssertState: {
        bool ok = state == *step.state;
        if (!ok) ++result.assertions_failed;
        out << "assert-state " << step.state->to_text(lang) << ' '
            << (ok ? "PASS" : "FAIL");
        if (!ok) out << " (actual " << state.to_text(lang) << ')';
        out << '\n';
        break;
      }
      case ScenarioStep::Kind::Counteracts: {
        bool c = counteracts(state, *step.set, *step.set2);
        out << "counteracts \"" << step.text << "\" \"" << step.text2 << "\" -> "
            << (c ? "true" : "false") << '\n';
        break;
      }
      case ScenarioStep::Kind::Show:
        out << "state " << state.to_text(lang) << " belief "
            << set_text(belief_set(state), lang) << '\n';
        break;
    }
  }
  out << "final-belief " << set_text(belief_set(state), lang) << '\n';
  result.transcript = out.str();
  result.exit_status = result.assertions_failed > 0 ? 1 : 0;
  return result;
}

CompareResult compare(const std::vector<Operator>& ops, const Scenario& s) {
  if (ops.size() < 2) throw std::invalid_argument("compare needs at least two operators");
  CompareResult out;
  std::ostringstream table;
  for (Operator op : ops) {
    RunResult r = run_scenario(s, op);
    table << "== " << name(op) << " ==\n" << r.transcript;
    out.exit_status = std::max(out.exit_status, r.exit_status);
    out.runs.push_back(std::move(r));
  }
  out.table = table.str();
  return out;
}

}  // namespace rev
