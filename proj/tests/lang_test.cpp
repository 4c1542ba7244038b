#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <string>
#include <vector>

#include "rev/formula.hpp"
#include "rev/language.hpp"

using namespace rev;

TEST_CASE("language construction and validation") {
  Language pq{"p", "q"};
  CHECK(pq.atom_count() == 2);
  CHECK(pq.universe_size() == 4);
  CHECK(pq.index_of("p") == 0);
  CHECK(pq.index_of("q") == 1);
  CHECK(pq.index_of("r") == -1);

  CHECK_THROWS_AS(Language(std::vector<std::string>{}), LanguageError);
  CHECK_THROWS_AS(Language({"p", "p"}), LanguageError);
  CHECK_THROWS_AS(Language({"2p"}), LanguageError);
  CHECK_THROWS_AS(Language({"a b"}), LanguageError);
  std::vector<std::string> too_many;
  for (int i = 0; i < 17; ++i) too_many.push_back("a" + std::to_string(i));
  CHECK_THROWS_AS(Language(std::vector<std::string>(too_many)), LanguageError);
  CHECK(Language({"alpha_1", "Beta"}).atom_count() == 2);
}

TEST_CASE("bitstring round trip follows atom declaration order") {
  Language pq{"p", "q"};
  CHECK(pq.bitstring(0) == "00");
  CHECK(pq.bitstring(1) == "01");
  CHECK(pq.bitstring(2) == "10");
  CHECK(pq.bitstring(3) == "11");
  // "01" assigns p := 0, q := 1.
  Valuation v = pq.valuation("01");
  CHECK(v == 1);
  CHECK_FALSE(pq.atom_true(v, 0));
  CHECK(pq.atom_true(v, 1));
  for (Valuation w = 0; w < 4; ++w) CHECK(pq.valuation(pq.bitstring(w)) == w);
  CHECK_THROWS_AS(pq.valuation("0"), LanguageError);
  CHECK_THROWS_AS(pq.valuation("02"), LanguageError);
}

TEST_CASE("model set operations") {
  Language pq{"p", "q"};
  ModelSet a = ModelSet::none(pq);
  CHECK(a.empty());
  a.insert(3);
  a.insert(1);
  CHECK(a.size() == 2);
  CHECK(a.contains(1));
  CHECK_FALSE(a.contains(2));
  CHECK(a.members() == std::vector<Valuation>{1, 3});
  CHECK(a.mask() == 0b1010);

  ModelSet b = ModelSet::from_mask(2, 0b1100);
  CHECK((a & b).mask() == 0b1000);
  CHECK((a | b).mask() == 0b1110);
  CHECK((~a).mask() == 0b0101);
  CHECK((b - a).mask() == 0b0100);
  CHECK(a.intersects(b));
  CHECK_FALSE(a.subset_of(b));
  CHECK(ModelSet::from_mask(2, 0b1000).subset_of(b));
  a.erase(3);
  CHECK(a.mask() == 0b0010);

  CHECK(ModelSet::all(pq).size() == 4);
  CHECK(entails(ModelSet::from_mask(2, 0b1000), b));
  CHECK_FALSE(entails(b, ModelSet::from_mask(2, 0b1000)));
  CHECK(equivalent(b, ModelSet::from_mask(2, 0b1100)));
}

TEST_CASE("parser handles precedence and associativity") {
  Language pqr{"p", "q", "r"};
  // ~ > & > | > -> > <->
  CHECK(models("~p & q", pqr) == models("(~p) & q", pqr));
  CHECK(models("p & q | r", pqr) == models("(p & q) | r", pqr));
  CHECK(models("p | q -> r", pqr) == models("(p | q) -> r", pqr));
  CHECK(models("p -> q <-> r", pqr) == models("(p -> q) <-> r", pqr));
  // right associativity of -> and <->
  FormulaPtr f = parse("p -> q -> r", pqr);
  CHECK(ast_equal(*f, *parse("p -> (q -> r)", pqr)));
  CHECK_FALSE(ast_equal(*f, *parse("(p -> q) -> r", pqr)));
  FormulaPtr g = parse("p <-> q <-> r", pqr);
  CHECK(ast_equal(*g, *parse("p <-> (q <-> r)", pqr)));
  CHECK(ast_equal(*parse("~~p", pqr), *parse("~ ( ~ p )", pqr)));
}

TEST_CASE("truth-table semantics of every connective") {
  Language pq{"p", "q"};
  CHECK(models("true", pq).mask() == 0b1111);
  CHECK(models("false", pq).mask() == 0b0000);
  CHECK(models("p", pq).mask() == 0b1100);
  CHECK(models("q", pq).mask() == 0b1010);
  CHECK(models("~p", pq).mask() == 0b0011);
  CHECK(models("p & q", pq).mask() == 0b1000);
  CHECK(models("p | q", pq).mask() == 0b1110);
  CHECK(models("p -> q", pq).mask() == 0b1011);
  CHECK(models("p <-> q", pq).mask() == 0b1001);
}

TEST_CASE("parse errors carry byte offsets") {
  Language pq{"p", "q"};
  try {
    models("p &", pq);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  try {
    models("p & zig", pq);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 4);
  }
  CHECK_THROWS_AS(models("(p | q", pq), ParseError);
  CHECK_THROWS_AS(models("p q", pq), ParseError);
  CHECK_THROWS_AS(models("", pq), ParseError);
  CHECK_THROWS_AS(models("p -> -> q", pq), ParseError);
}

namespace {

FormulaPtr random_formula(std::mt19937_64& rng, const Language& lang, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 7);
  auto f = std::make_shared<Formula>();
  switch (pick(rng)) {
    case 0:
      f->kind = Connective::Atom;
      f->atom_index = static_cast<int>(rng() % lang.atom_count());
      break;
    case 1: f->kind = Connective::True; break;
    case 2: f->kind = Connective::False; break;
    case 3:
      f->kind = Connective::Not;
      f->left = random_formula(rng, lang, depth - 1);
      break;
    default: {
      static const Connective bins[] = {Connective::And, Connective::Or,
                                        Connective::Implies, Connective::Iff};
      f->kind = bins[rng() % 4];
      f->left = random_formula(rng, lang, depth - 1);
      f->right = random_formula(rng, lang, depth - 1);
      break;
    }
  }
  return f;
}

// Independent evaluator used as an oracle against models().
bool slow_eval(const Formula& f, const Language& lang, Valuation v) {
  switch (f.kind) {
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Atom: return lang.atom_true(v, f.atom_index);
    case Connective::Not: return !slow_eval(*f.left, lang, v);
    case Connective::And: return slow_eval(*f.left, lang, v) && slow_eval(*f.right, lang, v);
    case Connective::Or: return slow_eval(*f.left, lang, v) || slow_eval(*f.right, lang, v);
    case Connective::Implies: return !slow_eval(*f.left, lang, v) || slow_eval(*f.right, lang, v);
    case Connective::Iff: return slow_eval(*f.left, lang, v) == slow_eval(*f.right, lang, v);
  }
  return false;
}

}  // namespace

TEST_CASE("random formulas: print/parse round trip and model oracle") {
  Language lang{"p", "q", "r"};
  std::mt19937_64 rng(20240817);
  for (int i = 0; i < 500; ++i) {
    FormulaPtr f = random_formula(rng, lang, 5);
    std::string text = print(*f, lang);
    FormulaPtr g = parse(text, lang);
    CHECK(ast_equal(*f, *g));
    ModelSet fast = models(*f, lang);
    for (Valuation v = 0; v < lang.universe_size(); ++v)
      CHECK(fast.contains(v) == slow_eval(*f, lang, v));
  }
}

TEST_CASE("syntactic variants have equal models") {
  Language pq{"p", "q"};
  CHECK(models("p", pq) == models("~~p", pq));
  CHECK(models("p -> q", pq) == models("~p | q", pq));
  CHECK(models("p <-> q", pq) == models("(p -> q) & (q -> p)", pq));
  CHECK(models("~(p & q)", pq) == models("~p | ~q", pq));
}
