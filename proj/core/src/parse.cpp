#include "grz/parse.hpp"

#include <cctype>
#include <vector>

namespace grz {

namespace {

enum class Tok {
  Ident, Bot, Top, Arrow, Tilde, Box, Diamond, And, Or,
  LParen, RParen, Comma, Turnstile, End
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(std::string_view s) : s_(s) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      std::size_t start = i_;
      if (i_ >= s_.size()) {
        out.push_back({Tok::End, "", start});
        return out;
      }
      if (eat("->") || eat("\xe2\x86\x92")) {  // →
        out.push_back({Tok::Arrow, "->", start});
      } else if (eat("=>") || eat("\xe2\x87\x92")) {  // ⇒
        out.push_back({Tok::Turnstile, "=>", start});
      } else if (eat("[]") || eat("\xe2\x96\xa1")) {  // □
        out.push_back({Tok::Box, "[]", start});
      } else if (eat("<>") || eat("\xe2\x97\x87")) {  // ◇
        out.push_back({Tok::Diamond, "<>", start});
      } else if (eat("/\\") || eat("\xe2\x88\xa7")) {  // ∧
        out.push_back({Tok::And, "/\\", start});
      } else if (eat("\\/") || eat("\xe2\x88\xa8")) {  // ∨
        out.push_back({Tok::Or, "\\/", start});
      } else if (eat("~") || eat("\xc2\xac")) {  // ¬
        out.push_back({Tok::Tilde, "~", start});
      } else if (eat("\xe2\x8a\xa5")) {  // ⊥
        out.push_back({Tok::Bot, "bot", start});
      } else if (eat("\xe2\x8a\xa4")) {  // ⊤
        out.push_back({Tok::Top, "top", start});
      } else if (eat("(")) {
        out.push_back({Tok::LParen, "(", start});
      } else if (eat(")")) {
        out.push_back({Tok::RParen, ")", start});
      } else if (eat(",")) {
        out.push_back({Tok::Comma, ",", start});
      } else if (is_ident_start(s_[i_])) {
        std::size_t j = i_;
        while (j < s_.size() && is_ident_char(s_[j])) ++j;
        std::string word(s_.substr(i_, j - i_));
        i_ = j;
        if (word == "bot")
          out.push_back({Tok::Bot, word, start});
        else if (word == "top")
          out.push_back({Tok::Top, word, start});
        else
          out.push_back({Tok::Ident, word, start});
      } else {
        throw ParseError("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
      }
    }
  }

private:
  static bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_space() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(std::string_view lit) {
    if (s_.substr(i_, lit.size()) == lit) {
      i_ += lit.size();
      return true;
    }
    return false;
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

class Parser {
public:
  explicit Parser(std::string_view s) : toks_(Lexer(s).run()) {}

  const Formula* formula_all() {
    const Formula* f = formula();
    expect(Tok::End, "end of input");
    return f;
  }

  Sequent sequent_all() {
    Sequent s;
    if (peek().kind != Tok::Turnstile) s.antecedent = formula_list();
    expect(Tok::Turnstile, "'=>'");
    if (peek().kind != Tok::End) s.succedent = formula_list();
    expect(Tok::End, "end of input");
    return s;
  }

private:
  const Token& peek() const { return toks_[k_]; }
  Token next() { return toks_[k_++]; }

  void expect(Tok t, const char* what) {
    if (peek().kind != t)
      throw ParseError(std::string("expected ") + what, peek().pos);
    ++k_;
  }

  FormulaMultiset formula_list() {
    FormulaMultiset out = FormulaMultiset().plus(formula());
    while (peek().kind == Tok::Comma) {
      next();
      out = out.plus(formula());
    }
    return out;
  }

  const Formula* formula() {
    const Formula* lhs = disj();
    if (peek().kind == Tok::Arrow) {
      next();
      return Formula::implies(lhs, formula());
    }
    return lhs;
  }

  const Formula* disj() {
    const Formula* f = conj();
    while (peek().kind == Tok::Or) {
      next();
      f = Formula::disjunction(f, conj());
    }
    return f;
  }

  const Formula* conj() {
    const Formula* f = unary();
    while (peek().kind == Tok::And) {
      next();
      f = Formula::conjunction(f, unary());
    }
    return f;
  }

  const Formula* unary() {
    switch (peek().kind) {
      case Tok::Tilde:
        next();
        return Formula::negation(unary());
      case Tok::Box:
        next();
        return Formula::box(unary());
      case Tok::Diamond:
        next();
        return Formula::diamond(unary());
      case Tok::Bot:
        next();
        return Formula::bottom();
      case Tok::Top:
        next();
        return Formula::top();
      case Tok::Ident:
        return Formula::atom(next().text);
      case Tok::LParen: {
        next();
        const Formula* f = formula();
        expect(Tok::RParen, "')'");
        return f;
      }
      default:
        throw ParseError("expected a formula", peek().pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
};

void print_into(FormulaRef f, std::string& out) {
  switch (f->kind()) {
    case Connective::Bottom:
      out += "bot";
      break;
    case Connective::Atom:
      out += f->atom_name();
      break;
    case Connective::Implies:
      out += '(';
      print_into(f->left(), out);
      out += " -> ";
      print_into(f->right(), out);
      out += ')';
      break;
    case Connective::Box:
      out += "[]";
      print_into(f->body(), out);
      break;
  }
}

std::string print_multiset(const FormulaMultiset& m) {
  std::string out;
  bool first = true;
  for (FormulaRef f : m.expanded()) {
    if (!first) out += ", ";
    first = false;
    print_into(f, out);
  }
  return out;
}

}  // namespace

const Formula* parse_formula(std::string_view text) { return Parser(text).formula_all(); }

Sequent parse_sequent(std::string_view text) { return Parser(text).sequent_all(); }

std::string print_formula(FormulaRef f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::string print_sequent(const Sequent& s) {
  if (s.antecedent.empty() && s.succedent.empty()) return "=>";
  if (s.antecedent.empty()) return "=> " + print_multiset(s.succedent);
  if (s.succedent.empty()) return print_multiset(s.antecedent) + " =>";
  return print_multiset(s.antecedent) + " => " + print_multiset(s.succedent);
}

}  // namespace grz
