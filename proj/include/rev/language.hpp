#pragma once

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rev {

// A valuation is an index into the 2^n universe fixed by a Language.
// Atom i (in declaration order) is assigned bit (n-1-i), so the canonical
// bitstring of a valuation, read left to right, follows atom order:
// with atoms (p,q), "01" assigns p:=0, q:=1 and has index 1.
using Valuation = std::uint32_t;

class LanguageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Language {
 public:
  static constexpr int kMaxAtoms = 16;

  explicit Language(std::vector<std::string> atoms);
  Language(std::initializer_list<const char*> atoms);

  int atom_count() const { return static_cast<int>(atoms_.size()); }
  std::size_t universe_size() const { return std::size_t{1} << atoms_.size(); }
  const std::vector<std::string>& atoms() const { return atoms_; }

  // -1 if the name is not an atom of this language.
  int index_of(const std::string& name) const;

  bool atom_true(Valuation v, int atom_index) const {
    return (v >> (atom_count() - 1 - atom_index)) & 1u;
  }

  std::string bitstring(Valuation v) const;
  Valuation valuation(const std::string& bits) const;

  bool operator==(const Language&) const = default;

 private:
  std::vector<std::string> atoms_;
};

// A set of valuations over a fixed universe; the semantic stand-in for a
// formula or knowledge base. Stored as a bitmask over the 2^n universe.
class ModelSet {
 public:
  explicit ModelSet(int atom_count);

  static ModelSet none(const Language& lang) { return ModelSet(lang.atom_count()); }
  static ModelSet all(const Language& lang);
  static ModelSet all(int atom_count);
  // Low 2^n bits of `mask` select members; universe must fit in 64 bits.
  static ModelSet from_mask(int atom_count, std::uint64_t mask);

  int atom_count() const { return atom_count_; }
  std::size_t universe_size() const { return std::size_t{1} << atom_count_; }

  void insert(Valuation v);
  void erase(Valuation v);
  bool contains(Valuation v) const;
  bool empty() const;
  std::size_t size() const;
  std::vector<Valuation> members() const;
  std::uint64_t mask() const;  // universe must fit in 64 bits

  bool subset_of(const ModelSet& other) const;
  bool intersects(const ModelSet& other) const;

  ModelSet operator&(const ModelSet& other) const;
  ModelSet operator|(const ModelSet& other) const;
  ModelSet operator~() const;
  ModelSet operator-(const ModelSet& other) const;

  bool operator==(const ModelSet&) const = default;

 private:
  void require_same_universe(const ModelSet& other) const;

  int atom_count_;
  std::vector<std::uint64_t> words_;
};

// a entails b iff every model of a is a model of b.
bool entails(const ModelSet& a, const ModelSet& b);
bool equivalent(const ModelSet& a, const ModelSet& b);

}  // namespace rev
