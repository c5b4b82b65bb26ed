#include "supcalc/parser.hpp"

#include "supcalc/error.hpp"

#include <cctype>
#include <set>
#include <string>

namespace supcalc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

const std::set<std::string>& term_keywords() {
  static const std::set<std::string> k = {
      "sum",  "scal", "star", "unit_elim", "lam", "app", "tens",   "let_tens", "unit",  "zero_elim",
      "pair", "fst",  "snd",  "inl",       "inr", "case", "sup",   "supfst",   "supsnd", "sup_elim"};
  return k;
}

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  bool lookahead(std::string_view lit) {
    skip_ws();
    return text_.substr(pos_, lit.size()) == lit;
  }

  bool accept(std::string_view lit) {
    if (!lookahead(lit)) return false;
    for (std::size_t i = 0; i < lit.size(); ++i) advance();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail({std::string(lit)});
  }

  bool at_identifier() {
    skip_ws();
    return pos_ < text_.size() && ident_start(text_[pos_]);
  }

  std::string word() {
    skip_ws();
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail({"identifier"});
    std::string out;
    while (pos_ < text_.size() && ident_char(text_[pos_])) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  std::string variable() {
    auto [line, col] = position();
    std::string w = word();
    if (term_keywords().count(w)) throw SyntaxError(line, col, {"variable"}, "keyword '" + w + "'");
    return w;
  }

  std::string scalar_text() {
    skip_ws();
    std::string out;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      out += '-';
      advance();
    }
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        out += text_[pos_];
        advance();
        ++n;
      }
      return n;
    };
    if (digits() == 0) fail({"scalar"});
    if (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '.')) {
      out += text_[pos_];
      advance();
      if (digits() == 0) fail({"digit"});
    }
    return out;
  }

  std::pair<std::size_t, std::size_t> position() {
    skip_ws();
    return {line_, col_};
  }

  [[noreturn]] void fail(std::set<std::string> expected) {
    skip_ws();
    std::string found;
    if (pos_ >= text_.size()) {
      found = "end of input";
    } else if (ident_start(text_[pos_])) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      found = "'" + std::string(text_.substr(pos_, end - pos_)) + "'";
    } else {
      found = "'" + std::string(1, text_[pos_]) + "'";
    }
    throw SyntaxError(line_, col_, std::move(expected), found);
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

class TermParser {
 public:
  TermParser(Cursor& c, const Semiring& s) : c_(c), s_(s) {}

  Term term() {
    if (c_.accept("[]")) return Term::hole();
    if (!c_.at_identifier()) c_.fail({"term"});
    std::string w = c_.word();
    if (!term_keywords().count(w)) return Term::var(w);
    if (w == "unit") return Term::unit();
    if (w == "sup_elim") return sup_elim();
    c_.expect("(");
    Term out = body(w);
    c_.expect(")");
    return out;
  }

 private:
  Scalar scalar() { return s_.from_literal(c_.scalar_text()); }

  Term sub() { return term(); }

  Term body(const std::string& w) {
    if (w == "star") return Term::star(scalar());
    if (w == "scal") {
      Scalar s = scalar();
      c_.expect(",");
      return Term::scal(std::move(s), sub());
    }
    if (w == "lam") {
      std::string x = c_.variable();
      c_.expect(",");
      return Term::lam(std::move(x), sub());
    }
    if (w == "let_tens") {
      Term t = sub();
      c_.expect(",");
      std::string x = c_.variable();
      c_.expect(",");
      std::string y = c_.variable();
      c_.expect(",");
      return Term::let_tens(std::move(t), std::move(x), std::move(y), sub());
    }
    if (w == "case") {
      auto [t, x, u, y, v] = branches();
      return Term::case_of(std::move(t), std::move(x), std::move(u), std::move(y), std::move(v));
    }
    if (w == "zero_elim") return Term::zero_elim(sub());
    if (w == "fst") return Term::fst(sub());
    if (w == "snd") return Term::snd(sub());
    if (w == "inl") return Term::inl(sub());
    if (w == "inr") return Term::inr(sub());
    if (w == "supfst") return Term::supfst(sub());
    if (w == "supsnd") return Term::supsnd(sub());

    Term a = sub();
    c_.expect(",");
    Term b = sub();
    if (w == "sum") return Term::sum(std::move(a), std::move(b));
    if (w == "unit_elim") return Term::unit_elim(std::move(a), std::move(b));
    if (w == "app") return Term::app(std::move(a), std::move(b));
    if (w == "tens") return Term::tens(std::move(a), std::move(b));
    if (w == "pair") return Term::pair(std::move(a), std::move(b));
    return Term::sup(std::move(a), std::move(b));
  }

  std::tuple<Term, std::string, Term, std::string, Term> branches() {
    Term t = sub();
    c_.expect(",");
    std::string x = c_.variable();
    c_.expect(".");
    Term u = sub();
    c_.expect(",");
    std::string y = c_.variable();
    c_.expect(".");
    Term v = sub();
    return {std::move(t), std::move(x), std::move(u), std::move(y), std::move(v)};
  }

  Term sup_elim() {
    c_.expect("{");
    Scalar p = scalar();
    c_.expect(",");
    Scalar q = scalar();
    c_.expect("}");
    c_.expect("(");
    auto [t, x, u, y, v] = branches();
    c_.expect(")");
    return Term::sup_elim(std::move(p), std::move(q), std::move(t), std::move(x), std::move(u),
                          std::move(y), std::move(v));
  }

  Cursor& c_;
  const Semiring& s_;
};

class PropParser {
 public:
  explicit PropParser(Cursor& c) : c_(c) {}

  Proposition prop() {
    Proposition left = plus_level();
    if (c_.accept("-o")) return Proposition::lollipop(std::move(left), prop());
    return left;
  }

 private:
  Proposition plus_level() {
    Proposition left = with_level();
    while (c_.accept("(+)")) left = Proposition::plus(std::move(left), with_level());
    return left;
  }

  Proposition with_level() {
    Proposition left = tensor_level();
    for (;;) {
      if (c_.accept("&")) {
        left = Proposition::with(std::move(left), tensor_level());
      } else if (c_.accept("(o)")) {
        left = Proposition::sup(std::move(left), tensor_level());
      } else {
        return left;
      }
    }
  }

  Proposition tensor_level() {
    Proposition left = atom();
    while (c_.accept("(*)")) left = Proposition::tensor(std::move(left), atom());
    return left;
  }

  Proposition atom() {
    if (c_.accept("(")) {
      Proposition inner = prop();
      c_.expect(")");
      return inner;
    }
    if (c_.at_identifier()) {
      auto [line, col] = c_.position();
      std::string w = c_.word();
      if (w == "one") return Proposition::one();
      if (w == "top") return Proposition::top();
      if (w == "zero") return Proposition::zero();
      throw SyntaxError(line, col, {"(", "one", "top", "zero"}, "'" + w + "'");
    }
    c_.fail({"(", "one", "top", "zero"});
  }

  Cursor& c_;
};

Context context_from(Cursor& c) {
  std::vector<Context::Binding> out;
  if (c.at_end()) return Context();
  do {
    std::string x = c.variable();
    c.expect(":");
    out.emplace_back(std::move(x), PropParser(c).prop());
  } while (c.accept(","));
  return Context(std::move(out));
}

}  // namespace

Term parse_term(std::string_view text, const Semiring& s) {
  Cursor c(text);
  Term t = TermParser(c, s).term();
  if (!c.at_end()) c.fail({"end of input"});
  return t;
}

Proposition parse_proposition(std::string_view text) {
  Cursor c(text);
  Proposition p = PropParser(c).prop();
  if (!c.at_end()) c.fail({"-o", "(+)", "&", "(o)", "(*)", "end of input"});
  return p;
}

Context parse_context(std::string_view text) {
  Cursor c(text);
  Context ctx = context_from(c);
  if (!c.at_end()) c.fail({",", "end of input"});
  return ctx;
}

Source parse_source(std::string_view text, const Semiring& s) {
  std::string body;
  Context ctx;
  std::optional<Proposition> type;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos && line.substr(first, 2) == "--") {
      std::string_view comment = line.substr(first + 2);
      std::size_t k = comment.find_first_not_of(" \t");
      if (k != std::string_view::npos && comment.substr(k, 4) == "ctx:") {
        ctx = parse_context(comment.substr(k + 4));
      } else if (k != std::string_view::npos && comment.substr(k, 5) == "type:") {
        type = parse_proposition(comment.substr(k + 5));
      }
      // Blank the line so positions reported for the term stay file-relative.
      body.append(line.size(), ' ');
    } else {
      body.append(line);
    }
    if (end < text.size()) body += '\n';
    start = end + 1;
  }
  return Source{parse_term(body, s), std::move(ctx), std::move(type)};
}

}  // namespace supcalc
