#include "rev/postulates.hpp"

#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

namespace rev {

namespace {

struct PostulateInfo {
  Postulate p;
  const char* name;
  PostulateArity arity;
  bool semantic;
};

constexpr PostulateInfo kPostulates[] = {
    {Postulate::RAGM, "RAGM", PostulateArity::One, false},
    {Postulate::C1, "C1", PostulateArity::Two, false},
    {Postulate::C2, "C2", PostulateArity::Two, false},
    {Postulate::C3, "C3", PostulateArity::Two, false},
    {Postulate::C4, "C4", PostulateArity::Two, false},
    {Postulate::P, "P", PostulateArity::Two, false},
    {Postulate::D, "D", PostulateArity::Two, false},
    {Postulate::CB, "CB", PostulateArity::Two, false},
    {Postulate::REC, "REC", PostulateArity::Two, false},
    {Postulate::C1P, "C1P", PostulateArity::Two, false},
    {Postulate::C2D, "C2D", PostulateArity::Two, false},
    {Postulate::T, "T", PostulateArity::Two, false},
    {Postulate::U, "U", PostulateArity::Two, false},
    {Postulate::O, "O", PostulateArity::Sequence, false},
    {Postulate::Q, "Q", PostulateArity::Sequence, false},
    {Postulate::S, "S", PostulateArity::Two, false},
    {Postulate::Disj1, "DISJ1", PostulateArity::Three, false},
    {Postulate::Disj2, "DISJ2", PostulateArity::Three, false},
    {Postulate::CR1, "CR1", PostulateArity::One, true},
    {Postulate::CR2, "CR2", PostulateArity::One, true},
    {Postulate::CR3, "CR3", PostulateArity::One, true},
    {Postulate::CR4, "CR4", PostulateArity::One, true},
    {Postulate::PR, "PR", PostulateArity::One, true},
    {Postulate::DR, "DR", PostulateArity::One, true},
    {Postulate::RR, "RR", PostulateArity::One, true},
    {Postulate::UR, "UR", PostulateArity::One, true},
    {Postulate::CBR, "CBR", PostulateArity::One, true},
    {Postulate::R, "R", PostulateArity::One, true},
};

const PostulateInfo& info(Postulate p) {
  for (const auto& e : kPostulates)
    if (e.p == p) return e;
  throw std::invalid_argument("unknown postulate");
}

// "~a in B(state)" evaluated semantically.
bool rules_out(const TotalPreorder& state, const ModelSet& a) {
  return !belief_set(state).intersects(a);
}

bool gamma_compatible(const TotalPreorder& state, const std::vector<ModelSet>& seq) {
  for (const auto& g : seq)
    if (rules_out(state, g)) return false;
  return true;
}

TotalPreorder fold(const OperatorFn& op, TotalPreorder state,
                   const std::vector<ModelSet>& seq) {
  for (const auto& g : seq) state = op(state, g);
  return state;
}

Check check_ragm(const OperatorFn& op, const TotalPreorder& s, const ModelSet& a) {
  return {belief_set(op(s, a)) == min_models(s, a), false};
}

Check check_two(Postulate p, const OperatorFn& op, const TotalPreorder& s,
                const ModelSet& a, const ModelSet& b) {
  auto after_ab = [&] { return op(op(s, a), b); };
  switch (p) {
    case Postulate::C1: {
      if (!b.subset_of(a)) return {true, true};
      return {belief_set(after_ab()) == belief_set(op(s, b)), false};
    }
    case Postulate::C2: {
      if (b.intersects(a)) return {true, true};
      return {belief_set(after_ab()) == belief_set(op(s, b)), false};
    }
    case Postulate::C3: {
      if (!believes(op(s, b), a)) return {true, true};
      return {believes(after_ab(), a), false};
    }
    case Postulate::C4: {
      if (rules_out(op(s, b), a)) return {true, true};
      return {!rules_out(after_ab(), a), false};
    }
    case Postulate::P: {
      if (rules_out(op(s, b), a)) return {true, true};
      return {believes(after_ab(), a), false};
    }
    case Postulate::D: {
      if (!counteracts(s, a, b)) return {true, true};
      return {rules_out(after_ab(), a), false};
    }
    case Postulate::CB: {
      if (!rules_out(op(s, a), b)) return {true, true};
      return {belief_set(after_ab()) == belief_set(op(s, b)), false};
    }
    case Postulate::REC: {
      if (!a.intersects(b)) return {true, true};
      return {believes(after_ab(), a), false};
    }
    case Postulate::C1P: {
      if (rules_out(op(s, b), a)) return {true, true};
      // the antecedent forces a & b to be satisfiable
      return {belief_set(after_ab()) == belief_set(op(s, a & b)), false};
    }
    case Postulate::C2D: {
      if (!counteracts(s, a, b)) return {true, true};
      return {belief_set(after_ab()) == belief_set(op(s, b)), false};
    }
    case Postulate::T: {
      ModelSet target = counteracts(s, a, b) ? belief_set(op(s, b))
                                             : belief_set(op(s, a & b));
      return {belief_set(after_ab()) == target, false};
    }
    case Postulate::U: {
      TotalPreorder t = after_ab();
      if (rules_out(t, a)) return {true, true};
      return {believes(t, a), false};
    }
    case Postulate::S: {
      ModelSet not_a = ~a;
      if (not_a.empty()) return {true, true};  // revision by the negation undefined
      if (!rules_out(op(s, a), b) || !rules_out(op(s, not_a), b)) return {true, true};
      TotalPreorder lhs = op(op(op(s, a), not_a), b);
      return {belief_set(lhs) == belief_set(after_ab()), false};
    }
    default:
      throw std::invalid_argument("not an arity-2 postulate");
  }
}

Check check_three(Postulate p, const OperatorFn& op, const TotalPreorder& s,
                  const ModelSet& a, const ModelSet& b, const ModelSet& g) {
  ModelSet b1 = belief_set(op(op(s, a), b));
  ModelSet b2 = belief_set(op(op(s, g), b));
  ModelSet bd = belief_set(op(op(s, a | g), b));
  // Theory-level statements translated to model sets: the models of the
  // intersection of two theories are the union of their model sets, and a
  // theory contains another iff the model sets include the other way round.
  switch (p) {
    case Postulate::Disj1:
      return {bd.subset_of(b1 | b2), false};
    case Postulate::Disj2:
      return {b1.subset_of(bd) || b2.subset_of(bd), false};
    default:
      throw std::invalid_argument("not an arity-3 postulate");
  }
}

Check check_semantic_one(Postulate p, const OperatorFn& op, const TotalPreorder& s,
                         const ModelSet& a) {
  TotalPreorder t = op(s, a);
  std::size_t n = s.universe_size();
  ModelSet bel = belief_set(t);
  bool any_pair = false;
  auto in = [&](Valuation v) { return a.contains(v); };
  for (Valuation v = 0; v < n; ++v) {
    for (Valuation w = 0; w < n; ++w) {
      bool ok = true;
      bool applies = true;
      switch (p) {
        case Postulate::CR1:
          applies = in(v) && in(w);
          ok = !applies || (s.leq(v, w) == t.leq(v, w));
          break;
        case Postulate::CR2:
          applies = !in(v) && !in(w);
          ok = !applies || (s.leq(v, w) == t.leq(v, w));
          break;
        case Postulate::CR3:
          applies = in(v) && !in(w);
          ok = !applies || !s.lt(v, w) || t.lt(v, w);
          break;
        case Postulate::CR4:
          applies = in(v) && !in(w);
          ok = !applies || !s.leq(v, w) || t.leq(v, w);
          break;
        case Postulate::PR:
          applies = in(v) && !in(w);
          ok = !applies || !s.leq(v, w) || t.lt(v, w);
          break;
        case Postulate::DR:
          applies = !in(v) && in(w) && !bel.contains(w);
          ok = !applies || !s.lt(v, w) || t.lt(v, w);
          break;
        case Postulate::R:
          applies = in(v) && !in(w);
          ok = !applies || t.lt(v, w);
          break;
        case Postulate::UR:
          applies = in(v) && !in(w);
          ok = !applies || t.lt(v, w) || t.lt(w, v);
          break;
        case Postulate::CBR:
          applies = !bel.contains(v) && !bel.contains(w);
          ok = !applies || (t.leq(v, w) == s.leq(v, w));
          break;
        case Postulate::RR: {
          applies = !bel.contains(v) && !bel.contains(w);
          bool rhs = s.lt(v, w) || (s.leq(v, w) && (in(v) || !in(w)));
          ok = !applies || (t.leq(v, w) == rhs);
          break;
        }
        default:
          throw std::invalid_argument("not a semantic postulate");
      }
      if (applies) any_pair = true;
      if (!ok) return {false, false};
    }
  }
  return {true, !any_pair};
}

Check check_sequence(Postulate p, const OperatorFn& op, const TotalPreorder& s,
                     const std::vector<ModelSet>& inputs) {
  if (p == Postulate::O) {
    if (inputs.empty()) throw EmptyInputError("empty input sequence");
    if (!gamma_compatible(s, inputs)) return {true, true};
    // B(E) subset of B(E*Gamma), i.e. the final belief models lie in [B(E)].
    return {belief_set(fold(op, s, inputs)).subset_of(belief_set(s)), false};
  }
  if (p == Postulate::Q) {
    if (inputs.size() < 2) throw EmptyInputError("Q needs alpha plus a sequence");
    const ModelSet& alpha = inputs.front();
    std::vector<ModelSet> seq(inputs.begin() + 1, inputs.end());
    TotalPreorder sa = op(s, alpha);
    bool antecedent = gamma_compatible(s, seq) && gamma_compatible(sa, seq) &&
                      !belief_set(s).intersects(belief_set(sa));
    if (!antecedent) return {true, true};
    ModelSet final_bel = belief_set(fold(op, sa, seq));
    return {final_bel.subset_of(belief_set(sa)) && !final_bel.subset_of(belief_set(s)),
            false};
  }
  throw std::invalid_argument("not a sequence postulate");
}

}  // namespace

const char* name(Postulate p) { return info(p).name; }

std::optional<Postulate> postulate_by_name(std::string_view s) {
  for (const auto& e : kPostulates)
    if (s == e.name) return e.p;
  return std::nullopt;
}

std::vector<Postulate> all_postulates() {
  std::vector<Postulate> out;
  for (const auto& e : kPostulates) out.push_back(e.p);
  return out;
}

PostulateArity arity(Postulate p) { return info(p).arity; }
bool is_semantic(Postulate p) { return info(p).semantic; }

OperatorFn operator_fn(Operator op) {
  return [op](const TotalPreorder& s, const ModelSet& a) { return revise(op, s, a); };
}

Check check(Postulate p, const OperatorFn& op, const TotalPreorder& state,
            const std::vector<ModelSet>& inputs) {
  switch (arity(p)) {
    case PostulateArity::One:
      if (inputs.size() != 1) throw std::invalid_argument("arity mismatch");
      if (p == Postulate::RAGM) return check_ragm(op, state, inputs[0]);
      return check_semantic_one(p, op, state, inputs[0]);
    case PostulateArity::Two:
      if (inputs.size() != 2) throw std::invalid_argument("arity mismatch");
      return check_two(p, op, state, inputs[0], inputs[1]);
    case PostulateArity::Three:
      if (inputs.size() != 3) throw std::invalid_argument("arity mismatch");
      return check_three(p, op, state, inputs[0], inputs[1], inputs[2]);
    case PostulateArity::Sequence:
      return check_sequence(p, op, state, inputs);
  }
  throw std::invalid_argument("unknown arity");
}

namespace {

// Enumerates nonempty-model-set tuples in ascending bitmask order (last
// position fastest) and records the verdict of each instance.
class Tally {
 public:
  Tally(PostulateReport& report) : report_(report) {}

  void record(const Check& c, const TotalPreorder& state,
              const std::vector<ModelSet>& inputs) {
    ++report_.instances_checked;
    if (c.vacuous) ++report_.vacuous_count;
    if (!c.holds) {
      ++report_.violations;
      if (!report_.first_counterexample)
        report_.first_counterexample = Instance{state, inputs};
    }
  }

 private:
  PostulateReport& report_;
};

void exhaustive_tuples(Postulate p, const OperatorFn& op, const TotalPreorder& state,
                       const Language& lang, int tuple_len, Tally& tally) {
  std::uint64_t top = (std::uint64_t{1} << lang.universe_size()) - 1;
  std::vector<ModelSet> inputs;
  std::function<void(int)> rec = [&](int depth) {
    if (depth == tuple_len) {
      tally.record(check(p, op, state, inputs), state, inputs);
      return;
    }
    for (std::uint64_t m = 1; m <= top; ++m) {
      inputs.push_back(ModelSet::from_mask(lang.atom_count(), m));
      rec(depth + 1);
      inputs.pop_back();
    }
  };
  rec(0);
}

void exhaustive_sequences(Postulate p, const OperatorFn& op, const TotalPreorder& state,
                          const Language& lang, const VerifyBudget& budget, Tally& tally) {
  std::uint64_t top = (std::uint64_t{1} << lang.universe_size()) - 1;
  int extra = p == Postulate::Q ? 1 : 0;  // leading alpha
  std::vector<ModelSet> inputs;
  for (int len = 1; len <= budget.max_seq_len; ++len) {
    std::function<void(int)> rec = [&](int depth) {
      if (depth == len + extra) {
        tally.record(check(p, op, state, inputs), state, inputs);
        return;
      }
      for (std::uint64_t m = 1; m <= top; ++m) {
        inputs.push_back(ModelSet::from_mask(lang.atom_count(), m));
        rec(depth + 1);
        inputs.pop_back();
      }
    };
    rec(0);
  }
}

ModelSet sample_nonempty(const Language& lang, std::mt19937_64& rng) {
  ModelSet out(lang.atom_count());
  std::uniform_int_distribution<int> bit(0, 1);
  do {
    out = ModelSet(lang.atom_count());
    for (Valuation v = 0; v < lang.universe_size(); ++v)
      if (bit(rng)) out.insert(v);
  } while (out.empty());
  return out;
}

int exhaustive_atom_limit(Postulate p) {
  // Cost grows as (#preorders) * 15^arity; one-input postulates stay feasible
  // at |V| = 8, everything else at |V| = 4.
  return arity(p) == PostulateArity::One ? 3 : 2;
}

}  // namespace

PostulateReport verify_one(const OperatorFn& op, const std::string& op_name, Postulate p,
                           const Language& lang, VerifyMode mode,
                           const VerifyBudget& budget) {
  PostulateReport report;
  report.operator_name = op_name;
  report.postulate = p;
  report.mode = mode;
  Tally tally(report);

  if (mode == VerifyMode::Exhaustive) {
    if (lang.atom_count() > exhaustive_atom_limit(p))
      throw std::invalid_argument(std::string("exhaustive budget exceeded for ") +
                                  name(p) + " at " + std::to_string(lang.atom_count()) +
                                  " atoms");
    for_each_preorder(lang.atom_count(), [&](const TotalPreorder& state) {
      switch (arity(p)) {
        case PostulateArity::One:
          exhaustive_tuples(p, op, state, lang, 1, tally);
          break;
        case PostulateArity::Two:
          exhaustive_tuples(p, op, state, lang, 2, tally);
          break;
        case PostulateArity::Three:
          exhaustive_tuples(p, op, state, lang, 3, tally);
          break;
        case PostulateArity::Sequence:
          exhaustive_sequences(p, op, state, lang, budget, tally);
          break;
      }
      return true;
    });
    return report;
  }

  std::mt19937_64 rng(budget.seed);
  for (std::uint64_t i = 0; i < budget.samples; ++i) {
    TotalPreorder state = sample_preorder(lang, rng());
    std::vector<ModelSet> inputs;
    int count = 0;
    switch (arity(p)) {
      case PostulateArity::One: count = 1; break;
      case PostulateArity::Two: count = 2; break;
      case PostulateArity::Three: count = 3; break;
      case PostulateArity::Sequence: {
        std::uniform_int_distribution<int> len(1, budget.max_seq_len);
        count = len(rng) + (p == Postulate::Q ? 1 : 0);
        break;
      }
    }
    for (int j = 0; j < count; ++j) inputs.push_back(sample_nonempty(lang, rng));
    tally.record(check(p, op, state, inputs), state, inputs);
  }
  return report;
}

std::vector<PostulateReport> verify(const OperatorFn& op, const std::string& op_name,
                                    const std::vector<Postulate>& postulates,
                                    const Language& lang, VerifyMode mode,
                                    const VerifyBudget& budget) {
  std::vector<PostulateReport> out;
  out.reserve(postulates.size());
  for (Postulate p : postulates)
    out.push_back(verify_one(op, op_name, p, lang, mode, budget));
  return out;
}

nlohmann::json report_json(const PostulateReport& r, const Language& lang) {
  nlohmann::json j;
  j["operator"] = r.operator_name;
  j["postulate"] = name(r.postulate);
  j["mode"] = r.mode == VerifyMode::Exhaustive ? "exhaustive" : "sample";
  j["instances_checked"] = r.instances_checked;
  j["vacuous_count"] = r.vacuous_count;
  j["violations"] = r.violations;
  if (r.first_counterexample) {
    nlohmann::json cex;
    nlohmann::json state = nlohmann::json::array();
    for (const ModelSet& level : r.first_counterexample->state.levels()) {
      nlohmann::json lvl = nlohmann::json::array();
      for (Valuation v : level.members()) lvl.push_back(lang.bitstring(v));
      state.push_back(lvl);
    }
    cex["state"] = state;
    nlohmann::json ins = nlohmann::json::array();
    for (const ModelSet& in : r.first_counterexample->inputs) {
      nlohmann::json one = nlohmann::json::array();
      for (Valuation v : in.members()) one.push_back(lang.bitstring(v));
      ins.push_back(one);
    }
    cex["inputs"] = ins;
    j["first_counterexample"] = cex;
  }
  return j;
}

std::string report_text(const PostulateReport& r, const Language& lang) {
  std::ostringstream os;
  os << r.operator_name << ' ' << name(r.postulate) << ' '
     << (r.mode == VerifyMode::Exhaustive ? "exhaustive" : "sample")
     << " instances=" << r.instances_checked << " vacuous=" << r.vacuous_count
     << " violations=" << r.violations;
  if (r.first_counterexample) {
    os << " counterexample: state=" << r.first_counterexample->state.to_text(lang)
       << " inputs=";
    for (std::size_t i = 0; i < r.first_counterexample->inputs.size(); ++i) {
      if (i) os << ';';
      os << '{';
      bool first = true;
      for (Valuation v : r.first_counterexample->inputs[i].members()) {
        if (!first) os << ' ';
        os << lang.bitstring(v);
        first = false;
      }
      os << '}';
    }
  }
  return os.str();
}

MetaReport cross_check_meta(const OperatorFn& op, const std::string& op_name,
                            const Language& lang) {
  MetaReport out;
  out.operator_name = op_name;
  VerifyBudget budget;
  auto passes = [&](Postulate p) {
    return verify_one(op, op_name, p, lang, VerifyMode::Exhaustive, budget).violations == 0;
  };
  const std::pair<Postulate, Postulate> pairs[] = {
      {Postulate::C1, Postulate::CR1}, {Postulate::C2, Postulate::CR2},
      {Postulate::C3, Postulate::CR3}, {Postulate::C4, Postulate::CR4},
      {Postulate::P, Postulate::PR},   {Postulate::D, Postulate::DR},
      {Postulate::U, Postulate::UR},   {Postulate::CB, Postulate::CBR},
      {Postulate::REC, Postulate::R},
  };
  for (auto [syn, sem] : pairs)
    out.pairs.push_back({syn, sem, passes(syn), passes(sem)});
  out.cr1_cr2_pr_dr_all_pass = passes(Postulate::CR1) && passes(Postulate::CR2) &&
                               passes(Postulate::PR) && passes(Postulate::DR);
  out.agrees_with_restrained = true;
  std::uint64_t top = (std::uint64_t{1} << lang.universe_size()) - 1;
  for_each_preorder(lang.atom_count(), [&](const TotalPreorder& state) {
    for (std::uint64_t m = 1; m <= top; ++m) {
      ModelSet input = ModelSet::from_mask(lang.atom_count(), m);
      if (!(op(state, input) == restrained(state, input))) {
        out.agrees_with_restrained = false;
        return false;
      }
    }
    return true;
  });
  return out;
}

}  // namespace rev
