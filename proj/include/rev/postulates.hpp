#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rev/counteracts.hpp"
#include "rev/operators.hpp"
#include "rev/preorder.hpp"

#include <nlohmann/json_fwd.hpp>

namespace rev {

// Every syntactic and semantic postulate the checker knows. Syntactic ones
// quantify over epistemic inputs and compare extracted belief sets; semantic
// ones constrain valuation pairs of the revised preorder. O and Q quantify
// over input sequences.
enum class Postulate {
  RAGM, C1, C2, C3, C4, P, D, CB, REC, C1P, C2D, T, U, O, Q, S,
  Disj1, Disj2, CR1, CR2, CR3, CR4, PR, DR, RR, UR, CBR, R,
};

enum class PostulateArity { One, Two, Three, Sequence };

const char* name(Postulate p);
std::optional<Postulate> postulate_by_name(std::string_view s);
std::vector<Postulate> all_postulates();
PostulateArity arity(Postulate p);
bool is_semantic(Postulate p);

// A revision operator under test, as a black box.
using OperatorFn = std::function<TotalPreorder(const TotalPreorder&, const ModelSet&)>;
OperatorFn operator_fn(Operator op);

struct Check {
  bool holds = true;
  bool vacuous = false;  // the antecedent failed (or the pair class was empty)
};

// Evaluates one postulate on one instance. For O the inputs are the sequence
// gamma_1..gamma_n; for Q the first input is alpha and the rest the sequence.
Check check(Postulate p, const OperatorFn& op, const TotalPreorder& state,
            const std::vector<ModelSet>& inputs);

struct Instance {
  TotalPreorder state;
  std::vector<ModelSet> inputs;
};

enum class VerifyMode { Exhaustive, Sample };

struct VerifyBudget {
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  int max_seq_len = 3;
};

struct PostulateReport {
  std::string operator_name;
  Postulate postulate;
  VerifyMode mode = VerifyMode::Exhaustive;
  std::uint64_t instances_checked = 0;
  std::uint64_t vacuous_count = 0;
  std::uint64_t violations = 0;
  std::optional<Instance> first_counterexample;  // canonical order
};

// Sweeps the postulate over states and inputs. Exhaustive mode enumerates
// states in canonical order and nonempty model sets in ascending bitmask
// order; the first counterexample is the first in that order. Sample mode is
// a deterministic function of the seed.
PostulateReport verify_one(const OperatorFn& op, const std::string& op_name, Postulate p,
                           const Language& lang, VerifyMode mode, const VerifyBudget& budget);

std::vector<PostulateReport> verify(const OperatorFn& op, const std::string& op_name,
                                    const std::vector<Postulate>& postulates,
                                    const Language& lang, VerifyMode mode,
                                    const VerifyBudget& budget);

nlohmann::json report_json(const PostulateReport& r, const Language& lang);
std::string report_text(const PostulateReport& r, const Language& lang);

// Meta-level cross checks: each paired syntactic/semantic postulate must
// come out with the same exhaustive verdict on a given operator.
struct MetaPair {
  Postulate syntactic;
  Postulate semantic;
  bool syntactic_passes = false;
  bool semantic_passes = false;
  bool agree() const { return syntactic_passes == semantic_passes; }
};

struct MetaReport {
  std::string operator_name;
  std::vector<MetaPair> pairs;
  bool cr1_cr2_pr_dr_all_pass = false;
  bool agrees_with_restrained = false;  // bit-exact on every (state, input)
};

MetaReport cross_check_meta(const OperatorFn& op, const std::string& op_name,
                            const Language& lang);

}  // namespace rev
