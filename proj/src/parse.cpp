#include "mdlmon/parse.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace mdlmon {

PropId PropTable::intern(const std::string& name) {
  auto it = by_name_.find(name);
  if (it != by_name_.end()) return it->second;

  std::optional<std::uint32_t> explicit_index;
  if (name.size() >= 2 && name[0] == 'p' && name[1] != '0') {
    bool digits = true;
    for (std::size_t i = 1; i < name.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(name[i]))) {
        digits = false;
        break;
      }
    }
    if (digits && name.size() <= 10) explicit_index = static_cast<std::uint32_t>(std::stoul(name.substr(1)));
  }

  std::uint32_t index;
  if (explicit_index) {
    index = *explicit_index;
    auto taken = by_index_.find(index);
    if (taken != by_index_.end()) {
      throw std::invalid_argument("proposition index " + std::to_string(index) + " already names '" +
                                  taken->second + "'");
    }
  } else {
    while (by_index_.count(next_auto_)) ++next_auto_;
    index = next_auto_++;
  }
  PropId id(index);
  by_name_.emplace(name, id);
  by_index_.emplace(index, name);
  return id;
}

std::string PropTable::name_of(PropId id) const {
  auto it = by_index_.find(id.index);
  return it == by_index_.end() ? id.name() : it->second;
}

namespace {

enum class Tok {
  Ident,
  Number,
  Always,
  Eventually,
  After,
  Between,
  Until,  // 'U'
  Not,
  AndOp,
  OrOp,
  Arrow,
  Iff,
  LParen,
  RParen,
  LBrack,
  RBrack,
  Comma,
  Eq,
  Minus,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return cur_; }

  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= text_.size()) {
      cur_ = {Tok::End, "", start};
      return;
    }
    char c = text_[i_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) {
        ++j;
      }
      std::string word = text_.substr(i_, j - i_);
      i_ = j;
      if (word == "always") {
        cur_ = {Tok::Always, word, start};
      } else if (word == "eventually") {
        cur_ = {Tok::Eventually, word, start};
      } else if (word == "after") {
        cur_ = {Tok::After, word, start};
      } else if (word == "between") {
        cur_ = {Tok::Between, word, start};
      } else if (word == "U") {
        cur_ = {Tok::Until, word, start};
      } else {
        cur_ = {Tok::Ident, word, start};
      }
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[j])) || text_[j] == '.' ||
                                  text_[j] == '/')) {
        ++j;
      }
      cur_ = {Tok::Number, text_.substr(i_, j - i_), start};
      i_ = j;
      return;
    }
    switch (c) {
      case '!':
        ++i_;
        cur_ = {Tok::Not, "!", start};
        return;
      case '&':
        ++i_;
        cur_ = {Tok::AndOp, "&", start};
        return;
      case '|':
        ++i_;
        cur_ = {Tok::OrOp, "|", start};
        return;
      case '(':
        ++i_;
        cur_ = {Tok::LParen, "(", start};
        return;
      case ')':
        ++i_;
        cur_ = {Tok::RParen, ")", start};
        return;
      case '[':
        ++i_;
        cur_ = {Tok::LBrack, "[", start};
        return;
      case ']':
        ++i_;
        cur_ = {Tok::RBrack, "]", start};
        return;
      case ',':
        ++i_;
        cur_ = {Tok::Comma, ",", start};
        return;
      case '=':
        ++i_;
        cur_ = {Tok::Eq, "=", start};
        return;
      case '-':
        if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
          i_ += 2;
          cur_ = {Tok::Arrow, "->", start};
          return;
        }
        ++i_;
        cur_ = {Tok::Minus, "-", start};
        return;
      case '<':
        if (i_ + 2 < text_.size() && text_[i_ + 1] == '-' && text_[i_ + 2] == '>') {
          i_ += 3;
          cur_ = {Tok::Iff, "<->", start};
          return;
        }
        throw ParseError("unexpected character '<'", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token cur_{Tok::End, "", 0};
};

class Parser {
public:
  Parser(const std::string& text, PropTable& props) : lex_(text), props_(props) {}

  BtlFormula parse() {
    BtlFormula f = parse_iff();
    if (lex_.peek().kind != Tok::End) {
      throw ParseError("trailing input '" + lex_.peek().text + "'", lex_.peek().pos);
    }
    return f;
  }

private:
  Token expect(Tok kind, const std::string& what) {
    if (lex_.peek().kind != kind) {
      throw ParseError("expected " + what + ", found '" + lex_.peek().text + "'", lex_.peek().pos);
    }
    return lex_.take();
  }

  Rational parse_num() {
    if (lex_.peek().kind == Tok::Minus) {
      throw ParseError("negative constant", lex_.peek().pos);
    }
    Token t = expect(Tok::Number, "a number");
    try {
      return Rational::parse(t.text);
    } catch (const std::exception& e) {
      throw ParseError(e.what(), t.pos);
    }
  }

  BtlFormula parse_iff() {
    std::vector<BtlFormula> parts{parse_imp()};
    while (lex_.peek().kind == Tok::Iff) {
      lex_.take();
      parts.push_back(parse_imp());
    }
    BtlFormula f = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) f = BtlFormula::iff(parts[i], f);
    return f;
  }

  BtlFormula parse_imp() {
    std::vector<BtlFormula> parts{parse_or()};
    while (lex_.peek().kind == Tok::Arrow) {
      lex_.take();
      parts.push_back(parse_or());
    }
    BtlFormula f = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) f = BtlFormula::implies(parts[i], f);
    return f;
  }

  BtlFormula parse_or() {
    BtlFormula f = parse_and();
    while (lex_.peek().kind == Tok::OrOp) {
      lex_.take();
      f = BtlFormula::disj(f, parse_and());
    }
    return f;
  }

  BtlFormula parse_and() {
    BtlFormula f = parse_unary();
    while (lex_.peek().kind == Tok::AndOp) {
      lex_.take();
      f = BtlFormula::conj(f, parse_unary());
    }
    return f;
  }

  Rational parse_bracketed_num() {
    expect(Tok::LBrack, "'['");
    Rational c = parse_num();
    expect(Tok::RBrack, "']'");
    return c;
  }

  BtlFormula parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Tok::Not:
        lex_.take();
        return BtlFormula::neg(parse_unary());
      case Tok::Always: {
        lex_.take();
        if (lex_.peek().kind == Tok::LBrack) {
          Rational c = parse_bracketed_num();
          return BtlFormula::always(c, parse_unary());
        }
        return BtlFormula::always_unbounded(parse_unary());
      }
      case Tok::Eventually: {
        lex_.take();
        Rational c = parse_bracketed_num();
        return BtlFormula::eventually(c, parse_unary());
      }
      case Tok::After: {
        lex_.take();
        Rational c = parse_bracketed_num();
        return BtlFormula::after(c, parse_unary());
      }
      case Tok::Between: {
        lex_.take();
        std::size_t at = lex_.peek().pos;
        expect(Tok::LBrack, "'['");
        Rational c = parse_num();
        expect(Tok::Comma, "','");
        Rational d = parse_num();
        expect(Tok::RBrack, "']'");
        if (d < c) throw ParseError("between[c,d] requires c <= d", at);
        return BtlFormula::between(c, d, parse_unary());
      }
      default:
        break;
    }
    BtlFormula f = parse_atom_or_paren();
    if (lex_.peek().kind == Tok::Until) {
      lex_.take();
      if (lex_.peek().kind == Tok::LBrack) {
        lex_.take();
        expect(Tok::Eq, "'='");
        Rational c = parse_num();
        expect(Tok::RBrack, "']'");
        return BtlFormula::until_exact(c, f, parse_unary());
      }
      return BtlFormula::until(f, parse_unary());
    }
    return f;
  }

  BtlFormula parse_atom_or_paren() {
    const Token& t = lex_.peek();
    if (t.kind == Tok::Ident) {
      Token id = lex_.take();
      return BtlFormula::prop(props_.intern(id.text));
    }
    if (t.kind == Tok::LParen) {
      lex_.take();
      BtlFormula f = parse_iff();
      expect(Tok::RParen, "')'");
      return f;
    }
    throw ParseError("expected a proposition or '('", t.pos);
  }

  Lexer lex_;
  PropTable& props_;
};

}  // namespace

BtlFormula parse_btl(const std::string& text) {
  PropTable scratch;
  return parse_btl(text, scratch);
}

BtlFormula parse_btl(const std::string& text, PropTable& props) {
  return Parser(text, props).parse();
}

}  // namespace mdlmon
