#include "rev/preorder.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <sstream>

namespace rev {

TotalPreorder TotalPreorder::from_levels(const Language& lang,
                                         const std::vector<ModelSet>& levels) {
  int n = lang.atom_count();
  std::vector<int> ranks(std::size_t{1} << n, -1);
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (levels[i].atom_count() != n)
      throw PreorderError("level ranges over a different language");
    if (levels[i].empty())
      throw PreorderError("empty level " + std::to_string(i));
    for (Valuation v : levels[i].members()) {
      if (ranks[v] != -1)
        throw PreorderError("valuation " + lang.bitstring(v) + " appears in two levels");
      ranks[v] = static_cast<int>(i);
    }
  }
  for (Valuation v = 0; v < ranks.size(); ++v)
    if (ranks[v] == -1)
      throw PreorderError("valuation " + lang.bitstring(v) + " is unranked");
  return TotalPreorder(n, std::move(ranks), static_cast<int>(levels.size()));
}

TotalPreorder TotalPreorder::from_ranks(int atom_count, const std::vector<int>& ranks) {
  if (ranks.size() != (std::size_t{1} << atom_count))
    throw PreorderError("rank map does not cover the universe");
  // Compress the used ranks to a contiguous 0..k range, order preserved.
  std::vector<int> used(ranks);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  std::vector<int> out(ranks.size());
  for (std::size_t v = 0; v < ranks.size(); ++v) {
    if (ranks[v] < 0) throw PreorderError("negative rank");
    out[v] = static_cast<int>(std::lower_bound(used.begin(), used.end(), ranks[v]) -
                              used.begin());
  }
  return TotalPreorder(atom_count, std::move(out), static_cast<int>(used.size()));
}

TotalPreorder TotalPreorder::uniform(const Language& lang) {
  return TotalPreorder(lang.atom_count(),
                       std::vector<int>(lang.universe_size(), 0), 1);
}

ModelSet TotalPreorder::level(int i) const {
  ModelSet out(atom_count_);
  for (Valuation v = 0; v < rank_.size(); ++v)
    if (rank_[v] == i) out.insert(v);
  return out;
}

std::vector<ModelSet> TotalPreorder::levels() const {
  std::vector<ModelSet> out;
  out.reserve(level_count_);
  for (int i = 0; i < level_count_; ++i) out.push_back(level(i));
  return out;
}

std::string TotalPreorder::to_text(const Language& lang) const {
  std::string out;
  for (int i = 0; i < level_count_; ++i) {
    if (i) out += ' ';
    out += '{';
    bool first = true;
    for (Valuation v : level(i).members()) {
      if (!first) out += ' ';
      out += lang.bitstring(v);
      first = false;
    }
    out += '}';
  }
  return out;
}

TotalPreorder TotalPreorder::parse_text(const Language& lang, const std::string& text) {
  std::vector<ModelSet> levels;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '{') throw PreorderError("expected '{' in state text");
    ++pos;
    ModelSet level(lang.atom_count());
    skip_ws();
    while (pos < text.size() && text[pos] != '}') {
      std::size_t start = pos;
      while (pos < text.size() && (text[pos] == '0' || text[pos] == '1')) ++pos;
      if (pos == start) throw PreorderError("expected a bitstring in state text");
      level.insert(lang.valuation(text.substr(start, pos - start)));
      skip_ws();
    }
    if (pos >= text.size()) throw PreorderError("unterminated level in state text");
    ++pos;  // '}'
    levels.push_back(level);
    skip_ws();
  }
  if (levels.empty()) throw PreorderError("state text has no levels");
  return from_levels(lang, levels);
}

ModelSet min_models(const TotalPreorder& state, const ModelSet& a) {
  if (a.atom_count() != state.atom_count())
    throw PreorderError("input ranges over a different language");
  if (a.empty())
    throw EmptyInputError("min of an inconsistent input is undefined");
  int best = -1;
  for (Valuation v : a.members()) {
    if (best < 0 || state.rank(v) < best) best = state.rank(v);
  }
  ModelSet out(a.atom_count());
  for (Valuation v : a.members())
    if (state.rank(v) == best) out.insert(v);
  return out;
}

ModelSet belief_set(const TotalPreorder& state) { return state.level(0); }

bool believes(const TotalPreorder& state, const ModelSet& a) {
  return belief_set(state).subset_of(a);
}

TotalPreorder faithful_from_kb(const Language& lang, const ModelSet& kb) {
  if (kb.empty()) throw EmptyInputError("knowledge base must be consistent");
  std::vector<ModelSet> levels{kb};
  ModelSet rest = ~kb;
  if (!rest.empty()) levels.push_back(rest);
  return TotalPreorder::from_levels(lang, levels);
}

namespace {

// Enumerates, for a fixed level count k, all rank vectors over the universe
// that use every level, in lexicographic order. Feasibility prune: a prefix
// can be completed iff the number of still-unused levels does not exceed the
// number of unassigned valuations.
bool walk_surjections(int n_vals, int k, std::vector<int>& ranks, int pos, int unused_mask,
                      const std::function<bool(const std::vector<int>&)>& fn) {
  if (pos == n_vals) return fn(ranks);
  int remaining = n_vals - pos;
  for (int level = 0; level < k; ++level) {
    int next_unused = unused_mask & ~(1 << level);
    if (std::popcount(static_cast<unsigned>(next_unused)) > remaining - 1) continue;
    ranks[pos] = level;
    if (!walk_surjections(n_vals, k, ranks, pos + 1, next_unused, fn)) return false;
  }
  return true;
}

}  // namespace

void for_each_preorder(int atom_count, const std::function<bool(const TotalPreorder&)>& fn) {
  if (atom_count > 4)
    throw PreorderError("preorder enumeration is limited to universes of at most 16 valuations");
  int n_vals = 1 << atom_count;
  std::vector<int> ranks(n_vals);
  for (int k = 1; k <= n_vals; ++k) {
    bool keep_going = walk_surjections(
        n_vals, k, ranks, 0, (1 << k) - 1, [&](const std::vector<int>& r) {
          return fn(TotalPreorder::from_ranks(atom_count, r));
        });
    if (!keep_going) return;
  }
}

std::uint64_t count_preorders(int atom_count) {
  if (atom_count > 4)
    throw PreorderError("preorder enumeration is limited to universes of at most 16 valuations");
  int n_vals = 1 << atom_count;
  std::uint64_t count = 0;
  std::vector<int> ranks(n_vals);
  for (int k = 1; k <= n_vals; ++k) {
    walk_surjections(n_vals, k, ranks, 0, (1 << k) - 1, [&](const std::vector<int>&) {
      ++count;
      return true;
    });
  }
  return count;
}

std::vector<TotalPreorder> all_preorders(int atom_count) {
  std::vector<TotalPreorder> out;
  for_each_preorder(atom_count, [&](const TotalPreorder& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

TotalPreorder sample_preorder(const Language& lang, std::uint64_t seed) {
  std::size_t n_vals = lang.universe_size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> level_count_dist(1, static_cast<int>(n_vals));
  int k = level_count_dist(rng);
  std::uniform_int_distribution<int> level_dist(0, k - 1);
  std::vector<int> ranks(n_vals);
  for (;;) {
    std::vector<char> used(k, 0);
    int distinct = 0;
    for (std::size_t v = 0; v < n_vals; ++v) {
      ranks[v] = level_dist(rng);
      if (!used[ranks[v]]) {
        used[ranks[v]] = 1;
        ++distinct;
      }
    }
    if (distinct == k) break;
  }
  return TotalPreorder::from_ranks(lang.atom_count(), ranks);
}

}  // namespace rev
