#include "stlc/term.hpp"

#include <algorithm>

#include "stlc/error.hpp"

namespace stlc {

TermPtr Term::bound(int index) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::bound;
  t->index_ = index;
  return t;
}

TermPtr Term::free(std::string name) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::free;
  t->name_ = std::move(name);
  return t;
}

TermPtr Term::app(TermPtr fun, TermPtr arg) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::app;
  t->fun_ = std::move(fun);
  t->arg_ = std::move(arg);
  return t;
}

TermPtr Term::lam(TypePtr binder, TermPtr body, std::string hint) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = Kind::lam;
  t->binder_ = std::move(binder);
  t->body_ = std::move(body);
  t->name_ = std::move(hint);
  return t;
}

TermPtr Term::apply(TermPtr fun, const std::vector<TermPtr>& args) {
  TermPtr t = std::move(fun);
  for (const auto& a : args) t = app(t, a);
  return t;
}

int compare(const Term& a, const Term& b) {
  if (&a == &b) return 0;
  if (a.kind() != b.kind())
    return static_cast<int>(a.kind()) < static_cast<int>(b.kind()) ? -1 : 1;
  switch (a.kind()) {
    case Term::Kind::bound:
      return a.index() < b.index() ? -1 : a.index() > b.index() ? 1 : 0;
    case Term::Kind::free:
      return a.name().compare(b.name());
    case Term::Kind::app:
      if (int c = compare(*a.fun(), *b.fun())) return c;
      return compare(*a.arg(), *b.arg());
    case Term::Kind::lam:
      if (int c = compare(*a.binder(), *b.binder())) return c;
      return compare(*a.body(), *b.body());
  }
  return 0;
}

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  return a == b || compare(*a, *b) == 0;
}

Spine spine(TermPtr t) {
  Spine s;
  while (t->is_app()) {
    s.args.push_back(t->arg());
    t = t->fun();
  }
  std::reverse(s.args.begin(), s.args.end());
  s.head = std::move(t);
  return s;
}

TermPtr strip_lambdas(TermPtr t, std::vector<TypePtr>& binders) {
  while (t->is_lam()) {
    binders.push_back(t->binder());
    t = t->body();
  }
  return t;
}

TermPtr wrap_lambdas(const std::vector<TypePtr>& binders, TermPtr t) {
  for (auto it = binders.rbegin(); it != binders.rend(); ++it)
    t = Term::lam(*it, std::move(t));
  return t;
}

bool has_dangling_above(const TermPtr& t, int cutoff) {
  switch (t->kind()) {
    case Term::Kind::bound:
      return t->index() >= cutoff;
    case Term::Kind::free:
      return false;
    case Term::Kind::app:
      return has_dangling_above(t->fun(), cutoff) ||
             has_dangling_above(t->arg(), cutoff);
    case Term::Kind::lam:
      return has_dangling_above(t->body(), cutoff + 1);
  }
  return false;
}

bool occurs_free(const TermPtr& t, const std::string& name) {
  switch (t->kind()) {
    case Term::Kind::bound:
      return false;
    case Term::Kind::free:
      return t->name() == name;
    case Term::Kind::app:
      return occurs_free(t->fun(), name) || occurs_free(t->arg(), name);
    case Term::Kind::lam:
      return occurs_free(t->body(), name);
  }
  return false;
}

void collect_free_names(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind()) {
    case Term::Kind::bound:
      return;
    case Term::Kind::free:
      if (std::find(out.begin(), out.end(), t->name()) == out.end())
        out.push_back(t->name());
      return;
    case Term::Kind::app:
      collect_free_names(t->fun(), out);
      collect_free_names(t->arg(), out);
      return;
    case Term::Kind::lam:
      collect_free_names(t->body(), out);
      return;
  }
}

Context::Context(std::initializer_list<std::pair<std::string, TypePtr>> vars) {
  for (auto& [n, ty] : vars) declare(n, ty);
}

void Context::declare(const std::string& name, TypePtr type) {
  if (auto existing = lookup(name)) {
    if (!equal(*existing, type))
      throw ill_typed("variable '" + name +
                      "' declared twice with different types");
    return;
  }
  vars_.emplace_back(name, std::move(type));
}

std::optional<TypePtr> Context::lookup(const std::string& name) const {
  for (const auto& [n, ty] : vars_)
    if (n == name) return ty;
  return std::nullopt;
}

Context Context::merged(const Context& a, const Context& b) {
  Context out = a;
  for (const auto& [n, ty] : b.vars()) out.declare(n, ty);
  return out;
}

}  // namespace stlc
