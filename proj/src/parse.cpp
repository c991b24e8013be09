#include "paw/parse.hpp"

#include <cctype>
#include <optional>

namespace paw {

namespace {

// Recursive descent with backtracking over the "(formula)" vs
// "(term) = term" ambiguity. On failure we report the failure that got
// furthest into the input.
class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  ParseResult run_formula() {
    auto f = formula();
    if (f) {
      skip_ws();
      if (pos_ == s_.size()) return *f;
      fail(pos_, "unexpected trailing input", "end of input");
    }
    return error();
  }

  TermParseResult run_term() {
    auto t = term();
    if (t) {
      skip_ws();
      if (pos_ == s_.size()) return *t;
      fail(pos_, "unexpected trailing input", "end of input");
    }
    return error();
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  bool have_err_ = false;
  std::size_t err_pos_ = 0;
  std::string err_msg_;
  std::vector<std::string> err_expected_;

  void fail(std::size_t pos, std::string msg, std::string expected) {
    if (!have_err_ || pos > err_pos_) {
      have_err_ = true;
      err_pos_ = pos;
      err_msg_ = std::move(msg);
      err_expected_ = {std::move(expected)};
    } else if (pos == err_pos_) {
      for (const auto& e : err_expected_)
        if (e == expected) return;
      err_expected_.push_back(std::move(expected));
    }
  }

  ParseError error() const {
    return ParseError{SourceSpan{err_pos_, err_pos_}, err_msg_, err_expected_};
  }

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
                                s_[pos_] == '\r'))
      ++pos_;
  }

  bool eof() const { return pos_ >= s_.size(); }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  bool match_char(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool match_arrow() {
    if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }

  // Variable token: lowercase letter with optional positive number.
  // Non-x letters alias into the x-indexed space (see parse.hpp).
  std::optional<Variable> try_variable() {
    if (eof() || !std::islower(static_cast<unsigned char>(peek()))) return std::nullopt;
    char letter = s_[pos_];
    ++pos_;
    unsigned long num = 1;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      num = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        num = num * 10 + static_cast<unsigned long>(s_[pos_] - '0');
        if (num > 1000000) {
          fail(pos_, "variable index too large", "variable");
          return std::nullopt;
        }
        ++pos_;
      }
      if (num == 0) {
        fail(pos_, "variable index must be positive", "variable");
        return std::nullopt;
      }
    }
    unsigned offset = letter >= 'x' ? static_cast<unsigned>(letter - 'x')
                                    : static_cast<unsigned>(letter - 'a') + 3;
    return Variable(static_cast<unsigned>(num) + offset);
  }

  // ---- terms ----

  std::optional<Term> term() { return sum(); }

  std::optional<Term> sum() {
    auto acc = product();
    if (!acc) return std::nullopt;
    for (;;) {
      skip_ws();
      std::size_t save = pos_;
      if (!match_char('+')) break;
      auto r = product();
      if (!r) {
        pos_ = save;
        return std::nullopt;
      }
      acc = Term::add(*acc, *r);
    }
    return acc;
  }

  std::optional<Term> product() {
    auto acc = postfix();
    if (!acc) return std::nullopt;
    for (;;) {
      skip_ws();
      std::size_t save = pos_;
      if (!match_char('*')) break;
      auto r = postfix();
      if (!r) {
        pos_ = save;
        return std::nullopt;
      }
      acc = Term::mul(*acc, *r);
    }
    return acc;
  }

  std::optional<Term> postfix() {
    auto t = base();
    if (!t) return std::nullopt;
    while (match_char('\'')) t = Term::succ(*t);
    return t;
  }

  std::optional<Term> base() {
    skip_ws();
    if (match_char('0')) return Term::zero();
    if (auto v = try_variable()) return Term::var(*v);
    if (peek() == '(') {
      ++pos_;
      auto t = term();
      if (!t) return std::nullopt;
      skip_ws();
      if (!match_char(')')) {
        fail(pos_, "expected ')'", ")");
        return std::nullopt;
      }
      return t;
    }
    fail(pos_, "expected a term", "term");
    return std::nullopt;
  }

  // ---- formulas ----

  std::optional<Formula> formula() { return implication(); }

  std::optional<Formula> implication() {
    auto lhs = disjunction();
    if (!lhs) return std::nullopt;
    skip_ws();
    if (match_arrow()) {
      auto rhs = implication();
      if (!rhs) return std::nullopt;
      return Formula::implies(*lhs, *rhs);
    }
    return lhs;
  }

  std::optional<Formula> disjunction() {
    auto acc = conjunction();
    if (!acc) return std::nullopt;
    for (;;) {
      skip_ws();
      if (peek() != '|') break;
      ++pos_;
      auto r = conjunction();
      if (!r) return std::nullopt;
      acc = Formula::or_(*acc, *r);
    }
    return acc;
  }

  std::optional<Formula> conjunction() {
    auto acc = unary();
    if (!acc) return std::nullopt;
    for (;;) {
      skip_ws();
      if (peek() != '&') break;
      ++pos_;
      auto r = unary();
      if (!r) return std::nullopt;
      acc = Formula::and_(*acc, *r);
    }
    return acc;
  }

  struct Quantifier {
    char marker;  // 'A' or 'E'
    Variable var;
  };

  std::optional<Quantifier> try_quantifier() {
    std::size_t save = pos_;
    if (!match_char('(')) return std::nullopt;
    skip_ws();
    char m = peek();
    if (m != 'A' && m != 'E') {
      pos_ = save;
      return std::nullopt;
    }
    ++pos_;
    skip_ws();
    auto v = try_variable();
    if (!v) {
      pos_ = save;
      return std::nullopt;
    }
    skip_ws();
    if (!match_char(')')) {
      pos_ = save;
      return std::nullopt;
    }
    return Quantifier{m, *v};
  }

  std::optional<Formula> unary() {
    skip_ws();
    if (match_char('~')) {
      auto f = unary();
      if (!f) return std::nullopt;
      return Formula::not_(*f);
    }
    if (peek() == '(') {
      if (auto q = try_quantifier()) {
        auto f = unary();
        if (!f) return std::nullopt;
        return q->marker == 'A' ? Formula::forall(q->var, *f) : Formula::exists(q->var, *f);
      }
    }
    return atom();
  }

  std::optional<Formula> relation_atom() {
    ++pos_;  // '@'
    std::size_t start = pos_;
    if (eof() || !(std::islower(static_cast<unsigned char>(peek())) || peek() == '_')) {
      fail(pos_, "expected a relation name", "relation name");
      return std::nullopt;
    }
    while (pos_ < s_.size() && (std::islower(static_cast<unsigned char>(s_[pos_])) ||
                                std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_'))
      ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    skip_ws();
    if (!match_char('(')) {
      fail(pos_, "expected '('", "(");
      return std::nullopt;
    }
    std::vector<Term> args;
    for (;;) {
      auto t = term();
      if (!t) return std::nullopt;
      args.push_back(*t);
      skip_ws();
      if (match_char(',')) continue;
      if (match_char(')')) break;
      fail(pos_, "expected ',' or ')'", ")");
      return std::nullopt;
    }
    return Formula::rel(std::move(name), std::move(args));
  }

  std::optional<Formula> equality() {
    auto t1 = term();
    if (!t1) return std::nullopt;
    skip_ws();
    if (!match_char('=')) {
      fail(pos_, "expected '='", "=");
      return std::nullopt;
    }
    auto t2 = term();
    if (!t2) return std::nullopt;
    return Formula::eq(*t1, *t2);
  }

  std::optional<Formula> atom() {
    skip_ws();
    if (peek() == '@') return relation_atom();
    if (peek() == '(') {
      // Either a parenthesised term opening an equality, or a
      // parenthesised formula. Try the equality reading first and fall
      // back; the recorded failure positions keep the better message.
      std::size_t save = pos_;
      if (auto eq = equality()) return eq;
      pos_ = save;
      ++pos_;  // '('
      auto f = formula();
      if (!f) return std::nullopt;
      skip_ws();
      if (!match_char(')')) {
        fail(pos_, "expected ')'", ")");
        return std::nullopt;
      }
      return f;
    }
    return equality();
  }
};

}  // namespace

ParseResult parse_formula(std::string_view text) { return Parser(text).run_formula(); }

TermParseResult parse_term(std::string_view text) { return Parser(text).run_term(); }

}  // namespace paw
