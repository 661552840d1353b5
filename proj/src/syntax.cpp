#include "stlc/syntax.hpp"

#include <algorithm>
#include <cctype>

#include "stlc/error.hpp"

namespace stlc {

bool is_reserved_name(const std::string& name) {
  return !name.empty() && name[0] == 'z';
}

TermPtr church(unsigned n) {
  TermPtr body = Term::bound(1);  // x
  for (unsigned i = 0; i < n; ++i) body = Term::app(Term::bound(0), body);
  return Term::lam(Type::base(),
                   Term::lam(Type::arrow(Type::base(), Type::base()), body, "f"),
                   "x");
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const Context& ctx, ParseOptions opts)
      : text_(text), ctx_(ctx), opts_(opts) {}

  TypePtr type_toplevel() {
    TypePtr t = type();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
    return t;
  }

  TermPtr term_toplevel() {
    TermPtr t = term();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("trailing input", pos_);
    return t;
  }

  Context context_toplevel() {
    Context ctx;
    skip_ws();
    if (pos_ == text_.size()) return ctx;
    for (;;) {
      std::string name = ident();
      expect(':');
      ctx.declare(name, type());
      skip_ws();
      if (pos_ == text_.size()) break;
      expect(',');
    }
    return ctx;
  }

 private:
  TypePtr type() {
    TypePtr lhs = type_atom();
    skip_ws();
    if (text_.compare(pos_, 2, "->") == 0) {
      pos_ += 2;
      return Type::arrow(lhs, type());
    }
    return lhs;
  }

  TypePtr type_atom() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      TypePtr t = type();
      expect(')');
      return t;
    }
    if (peek() == 'i' && !is_ident_char(at(pos_ + 1))) {
      ++pos_;
      return Type::base();
    }
    throw parse_error("expected a type", pos_);
  }

  TermPtr term() {
    skip_ws();
    if (peek() == '\\') return lambda();
    TermPtr t = atom();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '(' || c == '#' || c == '\\' || is_ident_start(c) ||
          c == 'z') {
        // A lambda in argument position extends maximally right, so it
        // must be the final argument.
        TermPtr arg = (c == '\\') ? lambda() : atom();
        t = Term::app(t, arg);
        if (c == '\\') return t;
      } else {
        return t;
      }
    }
  }

  TermPtr lambda() {
    expect('\\');
    std::string name = ident();
    expect(':');
    TypePtr binder = type();
    expect('.');
    binders_.push_back(name);
    TermPtr body = term();
    binders_.pop_back();
    return Term::lam(binder, body, name);
  }

  TermPtr atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      TermPtr t = term();
      expect(')');
      return t;
    }
    if (c == '#') {
      ++pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw parse_error("expected a numeral after '#'", pos_);
      unsigned long n = 0;
      while (std::isdigit(static_cast<unsigned char>(peek())))
        n = n * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      return church(static_cast<unsigned>(n));
    }
    if (is_ident_start(c) || c == 'z') {
      std::size_t start = pos_;
      std::string name = ident();
      // Innermost binder of that name wins.
      for (std::size_t i = binders_.size(); i-- > 0;)
        if (binders_[i] == name)
          return Term::bound(static_cast<int>(binders_.size() - 1 - i));
      if (is_reserved_name(name) && !opts_.allow_reserved)
        throw reserved_name(name);
      if (!opts_.allow_reserved && !ctx_.empty() && !ctx_.contains(name))
        throw parse_error("unknown variable '" + name + "'", start);
      return Term::free(name);
    }
    throw parse_error("expected a term", pos_);
  }

  std::string ident() {
    skip_ws();
    char c = peek();
    if (!is_ident_start(c) && c != 'z')
      throw parse_error("expected an identifier", pos_);
    std::size_t start = pos_;
    while (is_ident_char(at(pos_))) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (is_reserved_name(name) && !opts_.allow_reserved) {
      // Binders never allow the reserved prefix, even internally parsed
      // surface input keeps the namespace for generated constants.
      throw reserved_name(name);
    }
    return name;
  }

  static bool is_ident_start(char c) { return c >= 'a' && c <= 'y'; }
  static bool is_ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() { return at(pos_); }
  char at(std::size_t i) const { return i < text_.size() ? text_[i] : '\0'; }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      throw parse_error(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  const std::string& text_;
  const Context& ctx_;
  ParseOptions opts_;
  std::size_t pos_ = 0;
  std::vector<std::string> binders_;
};

bool name_taken(const std::string& name, const std::vector<std::string>& scope,
                const std::vector<std::string>& free_names) {
  return std::find(scope.begin(), scope.end(), name) != scope.end() ||
         std::find(free_names.begin(), free_names.end(), name) !=
             free_names.end();
}

std::string pick_name(const std::string& hint, std::vector<std::string>& scope,
                      const std::vector<std::string>& free_names) {
  if (!hint.empty() && !is_reserved_name(hint) &&
      !name_taken(hint, scope, free_names))
    return hint;
  std::string base = hint.empty() || is_reserved_name(hint) ? "x" : hint;
  for (int i = 0;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!name_taken(candidate, scope, free_names)) return candidate;
  }
}

void print(const TermPtr& t, std::vector<std::string>& scope,
           const std::vector<std::string>& free_names, std::string& out,
           bool fun_pos, bool arg_pos) {
  switch (t->kind()) {
    case Term::Kind::bound: {
      int i = t->index();
      if (i < static_cast<int>(scope.size()))
        out += scope[scope.size() - 1 - static_cast<std::size_t>(i)];
      else
        out += "?" + std::to_string(i);
      return;
    }
    case Term::Kind::free:
      out += t->name();
      return;
    case Term::Kind::app: {
      bool parens = arg_pos;
      if (parens) out += "(";
      print(t->fun(), scope, free_names, out, true, false);
      out += " ";
      print(t->arg(), scope, free_names, out, false, true);
      if (parens) out += ")";
      return;
    }
    case Term::Kind::lam: {
      bool parens = fun_pos || arg_pos;
      if (parens) out += "(";
      std::string name = pick_name(t->hint(), scope, free_names);
      out += "\\" + name + ":" + to_string(t->binder()) + ". ";
      scope.push_back(name);
      print(t->body(), scope, free_names, out, false, false);
      scope.pop_back();
      if (parens) out += ")";
      return;
    }
  }
}

}  // namespace

TypePtr parse_type(const std::string& text) {
  return Parser(text, {}, {}).type_toplevel();
}

TermPtr parse_term(const std::string& text, const Context& ctx,
                   ParseOptions opts) {
  return Parser(text, ctx, opts).term_toplevel();
}

Context parse_context(const std::string& text, ParseOptions opts) {
  return Parser(text, {}, opts).context_toplevel();
}

std::string print_term(const TermPtr& t, const Context& ctx) {
  std::vector<std::string> free_names;
  collect_free_names(t, free_names);
  for (const auto& [n, ty] : ctx.vars()) {
    (void)ty;
    if (std::find(free_names.begin(), free_names.end(), n) == free_names.end())
      free_names.push_back(n);
  }
  std::vector<std::string> scope;
  std::string out;
  print(t, scope, free_names, out, false, false);
  return out;
}

}  // namespace stlc
