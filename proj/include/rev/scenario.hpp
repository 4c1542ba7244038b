#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rev/formula.hpp"
#include "rev/operators.hpp"
#include "rev/preorder.hpp"

namespace rev {

class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& what, int line) : std::runtime_error(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented scenario script:
//   atoms p q
//   op restrained
//   kb "p | q"            (or: levels {11 10} {01 00})
//   revise "q"
//   assert-believes "p"
//   assert-not-believes "q"
//   assert-state {11} {10} {01 00}
//   counteracts "p" "q"
//   show
// '#' starts a comment. The operator may be switched between steps.
struct ScenarioStep {
  enum class Kind {
    SetOp, Revise, AssertBelieves, AssertNotBelieves, AssertState, Counteracts, Show
  };
  Kind kind;
  int line = 0;
  Operator op = Operator::Restrained;     // SetOp
  std::string text;                        // source text of the first formula
  std::string text2;                       // counteracts second formula
  std::optional<ModelSet> set;             // compiled formula(s)
  std::optional<ModelSet> set2;
  std::optional<TotalPreorder> state;      // AssertState
};

struct Scenario {
  Language lang;
  TotalPreorder initial;
  std::vector<ScenarioStep> steps;
};

Scenario parse_scenario(const std::string& source);
Scenario load_scenario(const std::string& path);

struct RunResult {
  std::string transcript;
  int assertions_failed = 0;
  int exit_status = 0;  // 0 pass, 1 assertion failed, 2 aborted
};

// Applies the steps in order; assertion failures are recorded and execution
// continues; a revision by an unsatisfiable formula aborts with the step
// index. `forced_op` overrides every op directive (used by compare).
RunResult run_scenario(const Scenario& s, std::optional<Operator> forced_op = std::nullopt);

// Side-by-side replay under several operators.
struct CompareResult {
  std::string table;
  std::vector<RunResult> runs;
  int exit_status = 0;
};

CompareResult compare(const std::vector<Operator>& ops, const Scenario& s);

}  // namespace rev
