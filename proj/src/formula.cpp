#include "rev/formula.hpp"

#include <cctype>

namespace rev {

namespace {

FormulaPtr node(Connective k, FormulaPtr l = nullptr, FormulaPtr r = nullptr) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->left = std::move(l);
  f->right = std::move(r);
  return f;
}

FormulaPtr atom_node(int index) {
  auto f = std::make_shared<Formula>();
  f->kind = Connective::Atom;
  f->atom_index = index;
  return f;
}

class Parser {
 public:
  Parser(const std::string& text, const Language& lang) : text_(text), lang_(lang) {}

  FormulaPtr run() {
    if (text_.empty()) throw ParseError("empty formula", 0);
    skip_ws();
    FormulaPtr f = parse_iff();
    skip_ws();
    if (pos_ != text_.size())
      throw ParseError("unexpected input at offset " + std::to_string(pos_), pos_);
    return f;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(const char* tok) {
    skip_ws();
    std::size_t len = std::char_traits<char>::length(tok);
    if (text_.compare(pos_, len, tok) == 0) {
      // Do not let "->" swallow the arrow of "<->" already consumed, and do
      // not read an identifier prefix as a keyword.
      pos_ += len;
      return true;
    }
    return false;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  FormulaPtr parse_iff() {
    FormulaPtr lhs = parse_imp();
    if (eat("<->")) return node(Connective::Iff, std::move(lhs), parse_iff());
    return lhs;
  }

  FormulaPtr parse_imp() {
    FormulaPtr lhs = parse_or();
    skip_ws();
    // "<->" also starts with '<'; only a bare "->" continues an implication.
    if (text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return node(Connective::Implies, std::move(lhs), parse_imp());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (peek('|')) {
      ++pos_;
      lhs = node(Connective::Or, std::move(lhs), parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_not();
    while (peek('&')) {
      ++pos_;
      lhs = node(Connective::And, std::move(lhs), parse_not());
    }
    return lhs;
  }

  FormulaPtr parse_not() {
    skip_ws();
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of formula at offset " + std::to_string(pos_), pos_);
    char c = text_[pos_];
    if (c == '~') {
      ++pos_;
      return node(Connective::Not, parse_not());
    }
    if (c == '(') {
      ++pos_;
      FormulaPtr f = parse_iff();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')')
        throw ParseError("expected ')' at offset " + std::to_string(pos_), pos_);
      ++pos_;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      if (name == "true") return node(Connective::True);
      if (name == "false") return node(Connective::False);
      int idx = lang_.index_of(name);
      if (idx < 0) throw ParseError("unknown atom '" + name + "'", start);
      return atom_node(idx);
    }
    throw ParseError(std::string("unexpected character '") + c + "' at offset " +
                         std::to_string(pos_),
                     pos_);
  }

  const std::string& text_;
  const Language& lang_;
  std::size_t pos_ = 0;
};

int precedence(Connective k) {
  switch (k) {
    case Connective::Iff: return 0;
    case Connective::Implies: return 1;
    case Connective::Or: return 2;
    case Connective::And: return 3;
    default: return 4;
  }
}

void print_rec(const Formula& f, const Language& lang, int parent_prec, std::string& out) {
  int prec = precedence(f.kind);
  bool parens = prec < parent_prec;
  if (parens) out += '(';
  switch (f.kind) {
    case Connective::True: out += "true"; break;
    case Connective::False: out += "false"; break;
    case Connective::Atom: out += lang.atoms()[f.atom_index]; break;
    case Connective::Not:
      out += '~';
      print_rec(*f.left, lang, 4, out);
      break;
    case Connective::And:
      print_rec(*f.left, lang, 3, out);
      out += " & ";
      print_rec(*f.right, lang, 4, out);
      break;
    case Connective::Or:
      print_rec(*f.left, lang, 2, out);
      out += " | ";
      print_rec(*f.right, lang, 3, out);
      break;
    case Connective::Implies:
      // right associative: parenthesize a left child of equal precedence
      print_rec(*f.left, lang, 2, out);
      out += " -> ";
      print_rec(*f.right, lang, 1, out);
      break;
    case Connective::Iff:
      print_rec(*f.left, lang, 1, out);
      out += " <-> ";
      print_rec(*f.right, lang, 0, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

FormulaPtr parse(const std::string& text, const Language& lang) {
  return Parser(text, lang).run();
}

std::string print(const Formula& f, const Language& lang) {
  std::string out;
  print_rec(f, lang, 0, out);
  return out;
}

bool ast_equal(const Formula& a, const Formula& b) {
  if (a.kind != b.kind || a.atom_index != b.atom_index) return false;
  if ((a.left == nullptr) != (b.left == nullptr)) return false;
  if ((a.right == nullptr) != (b.right == nullptr)) return false;
  if (a.left && !ast_equal(*a.left, *b.left)) return false;
  if (a.right && !ast_equal(*a.right, *b.right)) return false;
  return true;
}

bool eval(const Formula& f, const Language& lang, Valuation v) {
  switch (f.kind) {
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Atom: return lang.atom_true(v, f.atom_index);
    case Connective::Not: return !eval(*f.left, lang, v);
    case Connective::And: return eval(*f.left, lang, v) && eval(*f.right, lang, v);
    case Connective::Or: return eval(*f.left, lang, v) || eval(*f.right, lang, v);
    case Connective::Implies: return !eval(*f.left, lang, v) || eval(*f.right, lang, v);
    case Connective::Iff: return eval(*f.left, lang, v) == eval(*f.right, lang, v);
  }
  return false;
}

ModelSet models(const Formula& f, const Language& lang) {
  ModelSet out(lang.atom_count());
  for (Valuation v = 0; v < lang.universe_size(); ++v)
    if (eval(f, lang, v)) out.insert(v);
  return out;
}

ModelSet models(const std::string& text, const Language& lang) {
  return models(*parse(text, lang), lang);
}

}  // namespace rev
