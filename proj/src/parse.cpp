#include "quadcert/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>
#include <vector>

namespace quadcert {

namespace {

struct Token {
  enum class Kind { Number, Var, Plus, Minus, Star, Caret, Slash, End };
  Kind kind;
  std::string text;       // digits (possibly with '.') or variable spelling
  std::size_t pos = 0;
  bool indexed = false;   // true for x1, x2, ...
  std::size_t rank = 0;   // x=1, y=2, z=3, or the index
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> tokens() {
    std::vector<Token> out;
    while (true) {
      Token t = next();
      const bool end = t.kind == Token::Kind::End;
      out.push_back(std::move(t));
      if (end) return out;
    }
  }

 private:
  Token next() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_])))
      ++i_;
    const std::size_t start = i_;
    if (i_ == text_.size()) return {Token::Kind::End, "", start};

    const char ch = text_[i_];
    switch (ch) {
      case '+': ++i_; return {Token::Kind::Plus, "+", start};
      case '-': ++i_; return {Token::Kind::Minus, "-", start};
      case '*': ++i_; return {Token::Kind::Star, "*", start};
      case '^': ++i_; return {Token::Kind::Caret, "^", start};
      case '/': ++i_; return {Token::Kind::Slash, "/", start};
      default: break;
    }

    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      std::string num;
      bool saw_dot = false;
      while (i_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[i_])) ||
              (text_[i_] == '.' && !saw_dot))) {
        saw_dot = saw_dot || text_[i_] == '.';
        num += text_[i_++];
      }
      if (num == "." || num.back() == '.')
        throw SyntaxError(i_, "digits after decimal point");
      return {Token::Kind::Number, num, start};
    }

    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::string name(1, ch);
      ++i_;
      while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
        name += text_[i_++];
      if (name == "x" || name == "y" || name == "z") {
        Token t{Token::Kind::Var, name, start};
        t.rank = static_cast<std::size_t>(name[0] - 'x') + 1;
        return t;
      }
      if (name[0] == 'x' && name.size() > 1) {
        if (name[1] == '0') throw UnknownVariable(name);
        Token t{Token::Kind::Var, name, start};
        t.indexed = true;
        t.rank = std::stoul(name.substr(1));
        return t;
      }
      throw UnknownVariable(name);
    }

    throw SyntaxError(start, "a term, '+' or '-'");
  }

  std::string_view text_;
  std::size_t i_ = 0;
};

class FormParser {
 public:
  explicit FormParser(std::string_view text) : toks_(Lexer(text).tokens()) {}

  SymMatrix parse() {
    int sign = 1;
    if (peek().kind == Token::Kind::Plus || peek().kind == Token::Kind::Minus) {
      sign = peek().kind == Token::Kind::Minus ? -1 : 1;
      advance();
    }
    term(sign);
    while (peek().kind != Token::Kind::End) {
      if (peek().kind == Token::Kind::Plus)
        sign = 1;
      else if (peek().kind == Token::Kind::Minus)
        sign = -1;
      else
        throw SyntaxError(peek().pos, "'+' or '-' between terms");
      advance();
      term(sign);
    }
    return build();
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  void advance() { ++i_; }

  Rational coefficient() {
    const Token num = peek();
    advance();
    if (num.text.find('.') != std::string::npos)
      return Rational::from_string(num.text);
    if (peek().kind == Token::Kind::Slash) {
      advance();
      if (peek().kind != Token::Kind::Number ||
          peek().text.find('.') != std::string::npos)
        throw SyntaxError(peek().pos, "positive integer denominator");
      const Token den = peek();
      advance();
      return Rational::from_string(num.text + "/" + den.text);
    }
    return Rational::from_string(num.text);
  }

  std::size_t variable() {
    const Token v = peek();
    advance();
    if (v.indexed) {
      if (seen_plain_)
        throw SyntaxError(v.pos, "one variable alphabet (cannot mix x,y,z with x1,x2,...)");
      seen_indexed_ = true;
    } else {
      if (seen_indexed_)
        throw SyntaxError(v.pos, "one variable alphabet (cannot mix x,y,z with x1,x2,...)");
      seen_plain_ = true;
    }
    max_rank_ = std::max(max_rank_, v.rank);
    return v.rank;
  }

  void term(int sign) {
    Rational coeff(1);
    bool have_coeff = false;
    if (peek().kind == Token::Kind::Number) {
      coeff = coefficient();
      have_coeff = true;
      if (peek().kind == Token::Kind::Star) {
        // a '*' after the coefficient must introduce a variable
        if (toks_[i_ + 1].kind != Token::Kind::Var)
          throw SyntaxError(toks_[i_ + 1].pos, "a variable after '*'");
        advance();
      }
    }
    if (sign < 0) coeff = -coeff;

    if (peek().kind != Token::Kind::Var) {
      if (have_coeff)
        throw NonQuadraticTerm("constant term is not a degree-2 monomial");
      throw SyntaxError(peek().pos, "a term");
    }
    const std::size_t first = variable();

    if (peek().kind == Token::Kind::Caret) {
      advance();
      if (peek().kind != Token::Kind::Number)
        throw SyntaxError(peek().pos, "an exponent");
      if (peek().text != "2")
        throw NonQuadraticTerm("exponent " + peek().text +
                               " makes a non-quadratic monomial");
      advance();
      add_monomial(coeff, first, first);
      return;
    }
    if (peek().kind == Token::Kind::Star) {
      advance();
      if (peek().kind != Token::Kind::Var)
        throw SyntaxError(peek().pos, "a variable after '*'");
      add_monomial(coeff, first, variable());
      return;
    }
    if (peek().kind == Token::Kind::Var) {
      add_monomial(coeff, first, variable());
      return;
    }
    throw NonQuadraticTerm("linear term is not a degree-2 monomial");
  }

  void add_monomial(const Rational& coeff, std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    coeffs_[{a, b}] += coeff;
  }

  SymMatrix build() const {
    SymMatrix A(max_rank_);
    for (const auto& [key, coeff] : coeffs_) {
      const auto [a, b] = key;
      if (a == b)
        A.set(a - 1, a - 1, coeff);
      else
        A.set(a - 1, b - 1, coeff / Rational(2));
    }
    return A;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  bool seen_plain_ = false;
  bool seen_indexed_ = false;
  std::size_t max_rank_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Rational> coeffs_;
};

}  // namespace

SymMatrix parse_form(std::string_view text) { return FormParser(text).parse(); }

SymMatrix parse_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> row;
  std::string entry;
  std::size_t entry_pos = 0;

  const auto flush_entry = [&]() {
    if (entry.empty()) return;
    try {
      row.push_back(Rational::from_string(entry));
    } catch (const SyntaxError&) {
      throw SyntaxError(entry_pos, "matrix entry (integer, p/q, or decimal), got '" +
                                       entry + "'");
    }
    entry.clear();
  };
  const auto flush_row = [&]() {
    flush_entry();
    if (!row.empty()) rows.push_back(std::move(row));
    row.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '\n' || ch == ';') {
      flush_row();
    } else if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      flush_entry();
    } else {
      if (entry.empty()) entry_pos = i;
      entry += ch;
    }
  }
  flush_row();

  if (rows.empty()) throw SyntaxError(0, "at least one matrix row");
  return SymMatrix::from_rows(rows);
}

std::string variable_name(std::size_t index, std::size_t n) {
  if (n <= 3) {
    static const char* kNames[] = {"x", "y", "z"};
    return kNames[index - 1];
  }
  return "x" + std::to_string(index);
}

namespace {

// Appends "term" or " + term" / " - term" with the sign pulled out.
void append_signed(std::string& out, const Rational& coeff,
                   const std::string& body, bool coeff_space) {
  const bool first = out.empty();
  const bool negative = coeff.sign() < 0;
  if (first)
    out += negative ? "-" : "";
  else
    out += negative ? " - " : " + ";
  const Rational mag = coeff.abs();
  if (mag != Rational(1) || body.empty())
    out += mag.to_string() + (body.empty() ? "" : coeff_space ? " " : "");
  out += body;
}

}  // namespace

std::string render_form(const SymMatrix& A) {
  const std::size_t n = A.n();
  std::string out;
  bool last_var_mentioned = false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const Rational coeff = i == j ? A.at(i, i) : Rational(2) * A.at(i, j);
      if (coeff.is_zero()) continue;
      const std::string body =
          i == j ? variable_name(i + 1, n) + "^2"
                 : variable_name(i + 1, n) + variable_name(j + 1, n);
      append_signed(out, coeff, body, false);
      last_var_mentioned = last_var_mentioned || j + 1 == n;
    }
  }
  // The highest variable pins the dimension for the parser.
  if (!last_var_mentioned) {
    if (!out.empty()) out += " + ";
    out += "0" + variable_name(n, n) + "^2";
  }
  return out;
}

std::string render_linear_form(const RVector& form) {
  const std::size_t n = form.size();
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    if (form[i].is_zero()) continue;
    append_signed(out, form[i], variable_name(i + 1, n), true);
  }
  return out.empty() ? "0" : out;
}

std::string render_certificate(const SosCertificate& c) {
  if (c.terms().empty()) return "0";
  std::string out;
  for (const auto& t : c.terms()) {
    if (!out.empty()) out += " + ";
    out += t.weight.to_string() + "*(" + render_linear_form(t.form) + ")^2";
  }
  return out;
}

std::string render_vector(const RVector& x) {
  std::string out = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) out += ", ";
    out += x[i].to_string();
  }
  return out + ")";
}

}  // namespace quadcert
