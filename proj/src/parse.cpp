#include <cctype>
#include <optional>

#include "ringdef/formula.hpp"

namespace ringdef {

namespace {

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c >= 0x80; }
bool ident_char(unsigned char c) {
  return std::isalnum(c) || c == '_' || c == '\'' || c == '*' || c == '.' || c >= 0x80;
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<Language> lang) : s_(text), lang_(lang) {}

  Formula formula_document() {
    Formula f = formula();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
    return f;
  }

  Term term_document() {
    Term t = term();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  // Operator token after '(': identifier characters or a single symbol.
  std::string head() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '=' || s_[pos_] == '+' || s_[pos_] == '*')) {
      ++pos_;
      return std::string(s_.substr(start, 1));
    }
    if (pos_ < s_.size() && s_[pos_] == '-') {
      ++pos_;
      return "-";
    }
    while (pos_ < s_.size() && (ident_char(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-')) ++pos_;
    if (start == pos_) throw SyntaxError("expected operator", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !ident_start(static_cast<unsigned char>(s_[pos_])))
      throw SyntaxError("expected identifier", pos_);
    while (pos_ < s_.size() && ident_char(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Formula formula() {
    skip_ws();
    std::size_t open = pos_;
    expect('(');
    std::size_t at = pos_;
    skip_ws();
    at = pos_;
    std::string op = head();
    Formula out;
    if (op == "=") {
      Term a = term();
      Term b = term();
      out = eq(a, b);
    } else if (op == "in-O" || op == "in-B") {
      bool is_o = op == "in-O";
      if (lang_) {
        bool ok = *lang_ == (is_o ? Language::RingO : Language::RingB);
        if (!ok) throw UnknownPredicate(op, at, *lang_);
      } else {
        if (is_o) saw_o_ = true; else saw_b_ = true;
        if (saw_o_ && saw_b_) throw UnknownPredicate(op, at, is_o ? Language::RingB : Language::RingO);
      }
      Term a = term();
      out = is_o ? in_O(a) : in_B(a);
    } else if (op == "not") {
      out = lnot(formula());
    } else if (op == "and" || op == "or" || op == "imp") {
      Formula a = formula();
      Formula b = formula();
      out = op == "and" ? land(a, b) : op == "or" ? lor(a, b) : imp(a, b);
    } else if (op == "exists" || op == "forall") {
      std::string v = ident();
      if (v == "0" || v == "1") throw SyntaxError("bad bound variable", pos_);
      Formula body = formula();
      out = op == "exists" ? exists(v, body) : forall(v, body);
    } else if (op == "+" || op == "-" || op == "*") {
      throw SyntaxError("term where a formula is expected", open);
    } else {
      if (ident_start(static_cast<unsigned char>(op[0])))
        throw UnknownPredicate(op, at, lang_.value_or(Language::RingO));
      throw SyntaxError("unknown operator " + op, at);
    }
    expect(')');
    return out;
  }

  Term term() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      std::size_t at = pos_;
      std::string op = head();
      Term out;
      if (op == "+" || op == "*") {
        Term a = term();
        Term b = term();
        out = op == "+" ? add(a, b) : mul(a, b);
      } else if (op == "-") {
        out = neg(term());
      } else {
        throw SyntaxError("unknown term operator " + op, at);
      }
      expect(')');
      return out;
    }
    if (c == '0' || c == '1') {
      ++pos_;
      if (pos_ < s_.size() && ident_char(static_cast<unsigned char>(s_[pos_])))
        throw SyntaxError("only 0 and 1 are numerals", pos_ - 1);
      return c == '0' ? zero() : one();
    }
    return var(ident());
  }

  std::string_view s_;
  std::optional<Language> lang_;
  std::size_t pos_ = 0;
  bool saw_o_ = false;
  bool saw_b_ = false;
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text, std::nullopt).formula_document(); }

Formula parse_formula(std::string_view text, Language lang) { return Parser(text, lang).formula_document(); }

Term parse_term(std::string_view text) { return Parser(text, std::nullopt).term_document(); }

}  // namespace ringdef
