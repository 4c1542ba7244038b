#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "rev/scenario.hpp"

using namespace rev;

namespace {

int error_line(const std::string& source) {
  try {
    parse_scenario(source);
  } catch (const ScenarioError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("a full scenario parses into language, state, and steps") {
  Scenario s = parse_scenario(
      "# comment\n"
      "atoms p q\n"
      "op restrained\n"
      "kb \"p\"\n"
      "revise \"q\"\n"
      "assert-believes \"p & q\"\n"
      "show\n");
  CHECK(s.lang.atom_count() == 2);
  CHECK(s.initial == faithful_from_kb(s.lang, ModelSet::from_mask(2, 0b1100)));
  CHECK(s.steps.size() == 4);
  CHECK(s.steps[0].kind == ScenarioStep::Kind::SetOp);
  CHECK(s.steps[1].kind == ScenarioStep::Kind::Revise);
  CHECK(s.steps[1].line == 5);
}

TEST_CASE("levels directive builds the initial state directly") {
  Scenario s = parse_scenario("atoms p q\nlevels {10 01} {11 00}\nop natural\nrevise \"p\"\n");
  CHECK(belief_set(s.initial) == ModelSet::from_mask(2, 0b0110));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("op restrained\n") == 1);                   // atoms must come first
  CHECK(error_line("atoms p q\nkb \"p\"\nrevise \"q\"\n") == 3);  // no op chosen
  CHECK(error_line("atoms p q\nfrobnicate\n") == 2);
  CHECK(error_line("atoms p q\nop restrained\nkb \"p &\"\n") == 3);
  CHECK(error_line("atoms p q\nop quantum\nkb \"p\"\n") == 2);
  CHECK(error_line("atoms p p\n") == 1);
  CHECK(error_line("atoms p q\nop natural\nkb \"p\"\nlevels {11} {10 01 00}\n") == 4);
  CHECK(error_line("atoms p q\nop natural\nkb \"p\"\nrevise \"q\"\nassert-state {11}\n") == 5);
  CHECK(error_line("") == 0);
}

TEST_CASE("running a scenario produces a transcript and assertion tallies") {
  Scenario s = parse_scenario(
      "atoms b r\n"
      "op restrained\n"
      "kb \"b\"\n"
      "revise \"r\"\n"
      "revise \"~b\"\n"
      "assert-believes \"r\"\n");
  RunResult ok = run_scenario(s);
  CHECK(ok.exit_status == 0);
  CHECK(ok.assertions_failed == 0);
  CHECK(ok.transcript.find("assert-believes \"r\" PASS") != std::string::npos);
  CHECK(ok.transcript.find("final-belief {01}") != std::string::npos);

  RunResult natural_run = run_scenario(s, Operator::Natural);
  CHECK(natural_run.exit_status == 1);
  CHECK(natural_run.assertions_failed == 1);
  CHECK(natural_run.transcript.find("assert-believes \"r\" FAIL") != std::string::npos);
}

TEST_CASE("transcripts are byte-stable") {
  Scenario s = parse_scenario(
      "atoms p q\nlevels {10 01} {11 00}\nop restrained\nrevise \"p\"\nrevise \"q\"\nshow\n");
  CHECK(run_scenario(s).transcript == run_scenario(s).transcript);
}

TEST_CASE("execution continues past a failed assertion") {
  Scenario s = parse_scenario(
      "atoms p q\n"
      "op natural\n"
      "kb \"p\"\n"
      "assert-believes \"q\"\n"
      "assert-believes \"p\"\n");
  RunResult r = run_scenario(s);
  CHECK(r.assertions_failed == 1);
  CHECK(r.transcript.find("assert-believes \"p\" PASS") != std::string::npos);
}

TEST_CASE("revising by an unsatisfiable formula aborts with the step index") {
  Scenario s = parse_scenario(
      "atoms p q\nop natural\nkb \"p\"\nrevise \"q\"\nrevise \"p & ~p\"\nrevise \"q\"\n");
  RunResult r = run_scenario(s);
  CHECK(r.exit_status == 2);
  CHECK(r.transcript.find("abort") != std::string::npos);
}

TEST_CASE("operator switching mid-scenario") {
  Scenario s = parse_scenario(
      "atoms p q\n"
      "levels {11 10 01 00}\n"
      "op lexicographic\n"
      "revise \"p\"\n"
      "op natural\n"
      "revise \"~p | q\"\n"
      "assert-state {11} {10} {01 00}\n");
  CHECK(run_scenario(s).exit_status == 0);
}

TEST_CASE("counteracts steps report against the current state") {
  Scenario s = parse_scenario(
      "atoms j m\nlevels {10 01} {11 00}\nop restrained\ncounteracts \"j\" \"m\"\n"
      "revise \"j & m\"\ncounteracts \"j\" \"m\"\n");
  RunResult r = run_scenario(s);
  CHECK(r.exit_status == 0);
  // once j & m is believed the two no longer exclude each other
  CHECK(r.transcript.find("counteracts \"j\" \"m\" -> true") != std::string::npos);
  CHECK(r.transcript.find("counteracts \"j\" \"m\" -> false") != std::string::npos);
}

TEST_CASE("compare replays the scenario once per operator") {
  Scenario s = parse_scenario(
      "atoms red bird\nop restrained\nkb \"red\"\nrevise \"red -> bird\"\nrevise \"~bird\"\n");
  CompareResult c = compare({Operator::Restrained, Operator::Lexicographic}, s);
  CHECK(c.exit_status == 0);
  CHECK(c.runs.size() == 2);
  CHECK(c.table.find("== restrained ==") != std::string::npos);
  CHECK(c.table.find("== lexicographic ==") != std::string::npos);
  CHECK(c.runs[0].transcript.find("final-belief {10}") != std::string::npos);   // red
  CHECK(c.runs[1].transcript.find("final-belief {00}") != std::string::npos);   // ~red

  // restrained and composite produce identical columns on any scenario
  CompareResult rc = compare({Operator::Restrained, Operator::Composite}, s);
  std::string a = rc.runs[0].transcript, b = rc.runs[1].transcript;
  // transcripts differ only in the operator name
  auto scrub = [](std::string t, const std::string& from) {
    for (std::size_t at; (at = t.find(from)) != std::string::npos;) t.erase(at, from.size());
    return t;
  };
  CHECK(scrub(a, "restrained") == scrub(b, "composite"));
}
