#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rev/language.hpp"

namespace rev {

class PreorderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyInputError : public std::invalid_argument {
 public:
  explicit EmptyInputError(const std::string& what, int step = -1)
      : std::invalid_argument(what), step_(step) {}
  // index of the failing input inside a sequence, -1 for a single revision
  int step() const { return step_; }

 private:
  int step_;
};

// A total preorder over the valuation universe, stored as a rank per
// valuation. Levels are contiguous: the used ranks are exactly {0,...,k}
// and each one is nonempty. Rank 0 is the most plausible level, and
// v is at least as plausible as w iff rank(v) <= rank(w). Equality of
// preorders is structural equality of the rank vectors.
class TotalPreorder {
 public:
  // Levels must partition the universe, bottom (most plausible) first.
  static TotalPreorder from_levels(const Language& lang, const std::vector<ModelSet>& levels);
  // Accepts an arbitrary total rank map and compresses gaps away; the
  // induced ordering of any pair of valuations is unchanged.
  static TotalPreorder from_ranks(int atom_count, const std::vector<int>& ranks);
  static TotalPreorder uniform(const Language& lang);

  int atom_count() const { return atom_count_; }
  std::size_t universe_size() const { return std::size_t{1} << atom_count_; }
  int rank(Valuation v) const { return rank_[v]; }
  int level_count() const { return level_count_; }

  bool leq(Valuation v, Valuation w) const { return rank_[v] <= rank_[w]; }
  bool lt(Valuation v, Valuation w) const { return rank_[v] < rank_[w]; }

  ModelSet level(int i) const;
  std::vector<ModelSet> levels() const;

  // Canonical text form, bottom level first: "{11 10} {01 00}".
  std::string to_text(const Language& lang) const;
  static TotalPreorder parse_text(const Language& lang, const std::string& text);

  bool operator==(const TotalPreorder&) const = default;

 private:
  TotalPreorder(int atom_count, std::vector<int> ranks, int level_count)
      : atom_count_(atom_count), rank_(std::move(ranks)), level_count_(level_count) {}

  int atom_count_;
  std::vector<int> rank_;
  int level_count_;
};

// min(a, state): the most plausible members of a. Throws EmptyInputError on
// an empty a, since revision inputs must be consistent.
ModelSet min_models(const TotalPreorder& state, const ModelSet& a);

// [B(E)]: the level-0 valuations.
ModelSet belief_set(const TotalPreorder& state);

// Semantic membership: belief_set(state) is a subset of a.
bool believes(const TotalPreorder& state, const ModelSet& a);

// The canonical two-level faithful preorder: kb at the bottom, everything
// else (if any) one level up.
TotalPreorder faithful_from_kb(const Language& lang, const ModelSet& kb);

// Streams every distinct total preorder over the universe exactly once in
// canonical order: level counts ascending, and within one level count the
// rank vectors in lexicographic order (valuations indexed in bitstring
// order). Return false from the callback to stop early.
void for_each_preorder(int atom_count, const std::function<bool(const TotalPreorder&)>& fn);

// Count-only walk of the same space (no states are materialized).
std::uint64_t count_preorders(int atom_count);

// Materialize the whole space; meant for small universes.
std::vector<TotalPreorder> all_preorders(int atom_count);

// Deterministic function of (lang, seed). Distribution: draw a uniform
// level count k in 1..|V|, assign each valuation a uniform level in 0..k-1,
// and reject assignments that leave some level empty.
TotalPreorder sample_preorder(const Language& lang, std::uint64_t seed);

}  // namespace rev
