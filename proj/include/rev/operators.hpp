#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rev/preorder.hpp"

namespace rev {

enum class Operator { Natural, Lexicographic, Restrained, Backwards, Composite };

// Stable CLI identifiers: natural | lexicographic | restrained | backwards | composite
const char* name(Operator op);
std::optional<Operator> operator_by_name(std::string_view name);
std::vector<Operator> all_operators();

// Moves min(input, state) to a fresh bottom level; everything else keeps its
// relative order. Returns the state unchanged when the minimal models already
// form level 0.
TotalPreorder natural(const TotalPreorder& state, const ModelSet& input);

// Every input-world strictly below every non-input-world, old order preserved
// inside each block.
TotalPreorder lexicographic(const TotalPreorder& state, const ModelSet& input);

// Bottom = min(input, state); elsewhere the old order, except that same-level
// ties split with input-worlds below non-input-worlds.
TotalPreorder restrained(const TotalPreorder& state, const ModelSet& input);

// Splits each level with input-worlds below, without relocating a new bottom.
// Strict old relations are preserved; the input need not be believed after.
TotalPreorder backwards(const TotalPreorder& state, const ModelSet& input);

// natural(backwards(state, input), input).
TotalPreorder composite(const TotalPreorder& state, const ModelSet& input);

TotalPreorder revise(Operator op, const TotalPreorder& state, const ModelSet& input);

// Left-associative fold of op over the inputs. An empty input aborts with an
// EmptyInputError carrying the failing index.
TotalPreorder revise_sequence(Operator op, const TotalPreorder& state,
                              const std::vector<ModelSet>& inputs);

}  // namespace rev
