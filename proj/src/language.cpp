#include "rev/language.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace rev {

namespace {

bool valid_atom_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

Language::Language(std::vector<std::string> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty() || static_cast<int>(atoms_.size()) > kMaxAtoms)
    throw LanguageError("language must declare between 1 and 16 atoms");
  for (const auto& a : atoms_) {
    if (!valid_atom_name(a)) throw LanguageError("invalid atom name: '" + a + "'");
  }
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    for (std::size_t j = i + 1; j < atoms_.size(); ++j)
      if (atoms_[i] == atoms_[j]) throw LanguageError("duplicate atom: '" + atoms_[i] + "'");
}

Language::Language(std::initializer_list<const char*> atoms)
    : Language(std::vector<std::string>(atoms.begin(), atoms.end())) {}

int Language::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == name) return static_cast<int>(i);
  return -1;
}

std::string Language::bitstring(Valuation v) const {
  std::string s(atoms_.size(), '0');
  for (int i = 0; i < atom_count(); ++i)
    if (atom_true(v, i)) s[i] = '1';
  return s;
}

Valuation Language::valuation(const std::string& bits) const {
  if (static_cast<int>(bits.size()) != atom_count())
    throw LanguageError("bitstring '" + bits + "' does not match atom count");
  Valuation v = 0;
  for (int i = 0; i < atom_count(); ++i) {
    if (bits[i] == '1')
      v |= Valuation{1} << (atom_count() - 1 - i);
    else if (bits[i] != '0')
      throw LanguageError("bitstring '" + bits + "' contains a non-binary character");
  }
  return v;
}

ModelSet::ModelSet(int atom_count) : atom_count_(atom_count) {
  if (atom_count < 1 || atom_count > Language::kMaxAtoms)
    throw LanguageError("model set universe out of range");
  words_.assign((universe_size() + 63) / 64, 0);
}

ModelSet ModelSet::all(int atom_count) {
  ModelSet s(atom_count);
  std::size_t n = s.universe_size();
  for (std::size_t i = 0; i < s.words_.size(); ++i) s.words_[i] = ~std::uint64_t{0};
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

ModelSet ModelSet::all(const Language& lang) { return all(lang.atom_count()); }

ModelSet ModelSet::from_mask(int atom_count, std::uint64_t mask) {
  ModelSet s(atom_count);
  if (s.universe_size() > 64) throw LanguageError("universe too large for a 64-bit mask");
  if (s.universe_size() < 64 && (mask >> s.universe_size()) != 0)
    throw LanguageError("mask has bits outside the universe");
  s.words_[0] = mask;
  return s;
}

void ModelSet::insert(Valuation v) { words_[v / 64] |= std::uint64_t{1} << (v % 64); }
void ModelSet::erase(Valuation v) { words_[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
bool ModelSet::contains(Valuation v) const {
  return (words_[v / 64] >> (v % 64)) & 1u;
}

bool ModelSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t ModelSet::size() const {
  std::size_t n = 0;
  for (auto w : words_) n += std::popcount(w);
  return n;
}

std::vector<Valuation> ModelSet::members() const {
  std::vector<Valuation> out;
  for (Valuation v = 0; v < universe_size(); ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

std::uint64_t ModelSet::mask() const {
  if (universe_size() > 64) throw LanguageError("universe too large for a 64-bit mask");
  return words_[0];
}

void ModelSet::require_same_universe(const ModelSet& other) const {
  if (atom_count_ != other.atom_count_)
    throw LanguageError("model sets range over different languages");
}

bool ModelSet::subset_of(const ModelSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool ModelSet::intersects(const ModelSet& other) const {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

ModelSet ModelSet::operator&(const ModelSet& other) const {
  require_same_universe(other);
  ModelSet out(atom_count_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

ModelSet ModelSet::operator|(const ModelSet& other) const {
  require_same_universe(other);
  ModelSet out(atom_count_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] | other.words_[i];
  return out;
}

ModelSet ModelSet::operator~() const {
  ModelSet out = all(atom_count_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~words_[i];
  return out;
}

ModelSet ModelSet::operator-(const ModelSet& other) const {
  require_same_universe(other);
  ModelSet out(atom_count_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & ~other.words_[i];
  return out;
}

bool entails(const ModelSet& a, const ModelSet& b) { return a.subset_of(b); }
bool equivalent(const ModelSet& a, const ModelSet& b) {
  if (a.atom_count() != b.atom_count())
    throw LanguageError("model sets range over different languages");
  return a == b;
}

}  // namespace rev
