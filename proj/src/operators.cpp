#include "rev/operators.hpp"

namespace rev {

namespace {

void require_consistent(const TotalPreorder& state, const ModelSet& input) {
  if (input.atom_count() != state.atom_count())
    throw PreorderError("input ranges over a different language");
  if (input.empty()) throw EmptyInputError("revision by an inconsistent input");
}

// Rank by (key, old rank) pairs; from_ranks compresses to contiguous levels.
TotalPreorder refine(const TotalPreorder& state,
                     const std::function<int(Valuation)>& key) {
  std::size_t n = state.universe_size();
  int stride = state.level_count() + 1;
  std::vector<int> ranks(n);
  for (Valuation v = 0; v < n; ++v) ranks[v] = key(v) * stride + state.rank(v);
  return TotalPreorder::from_ranks(state.atom_count(), ranks);
}

}  // namespace

const char* name(Operator op) {
  switch (op) {
    case Operator::Natural: return "natural";
    case Operator::Lexicographic: return "lexicographic";
    case Operator::Restrained: return "restrained";
    case Operator::Backwards: return "backwards";
    case Operator::Composite: return "composite";
  }
  return "?";
}

std::optional<Operator> operator_by_name(std::string_view s) {
  for (Operator op : all_operators())
    if (s == name(op)) return op;
  return std::nullopt;
}

std::vector<Operator> all_operators() {
  return {Operator::Natural, Operator::Lexicographic, Operator::Restrained,
          Operator::Backwards, Operator::Composite};
}

TotalPreorder natural(const TotalPreorder& state, const ModelSet& input) {
  require_consistent(state, input);
  ModelSet bottom = min_models(state, input);
  if (bottom == belief_set(state)) return state;
  std::size_t n = state.universe_size();
  std::vector<int> ranks(n);
  for (Valuation v = 0; v < n; ++v)
    ranks[v] = bottom.contains(v) ? 0 : state.rank(v) + 1;
  return TotalPreorder::from_ranks(state.atom_count(), ranks);
}

TotalPreorder lexicographic(const TotalPreorder& state, const ModelSet& input) {
  require_consistent(state, input);
  return refine(state, [&](Valuation v) { return input.contains(v) ? 0 : 1; });
}

TotalPreorder backwards(const TotalPreorder& state, const ModelSet& input) {
  require_consistent(state, input);
  // Lexicographic refinement of the state by the two-level input order:
  // within each old level the input-worlds drop strictly below the rest.
  std::size_t n = state.universe_size();
  std::vector<int> ranks(n);
  for (Valuation v = 0; v < n; ++v)
    ranks[v] = 2 * state.rank(v) + (input.contains(v) ? 0 : 1);
  return TotalPreorder::from_ranks(state.atom_count(), ranks);
}

TotalPreorder restrained(const TotalPreorder& state, const ModelSet& input) {
  require_consistent(state, input);
  ModelSet bottom = min_models(state, input);
  std::size_t n = state.universe_size();
  std::vector<int> ranks(n);
  for (Valuation v = 0; v < n; ++v) {
    if (bottom.contains(v))
      ranks[v] = 0;
    else
      ranks[v] = 1 + 2 * state.rank(v) + (input.contains(v) ? 0 : 1);
  }
  return TotalPreorder::from_ranks(state.atom_count(), ranks);
}

TotalPreorder composite(const TotalPreorder& state, const ModelSet& input) {
  require_consistent(state, input);
  return natural(backwards(state, input), input);
}

TotalPreorder revise(Operator op, const TotalPreorder& state, const ModelSet& input) {
  switch (op) {
    case Operator::Natural: return natural(state, input);
    case Operator::Lexicographic: return lexicographic(state, input);
    case Operator::Restrained: return restrained(state, input);
    case Operator::Backwards: return backwards(state, input);
    case Operator::Composite: return composite(state, input);
  }
  throw PreorderError("unknown operator");
}

TotalPreorder revise_sequence(Operator op, const TotalPreorder& state,
                              const std::vector<ModelSet>& inputs) {
  if (inputs.empty()) throw EmptyInputError("empty input sequence");
  TotalPreorder current = state;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].empty())
      throw EmptyInputError("inconsistent input at step " + std::to_string(i),
                            static_cast<int>(i));
    current = revise(op, current, inputs[i]);
  }
  return current;
}

}  // namespace rev
