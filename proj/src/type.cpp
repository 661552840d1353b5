#include "stlc/type.hpp"

#include <algorithm>

namespace stlc {

const TypePtr& Type::base() {
  static const TypePtr instance(new Type());
  return instance;
}

TypePtr Type::arrow(TypePtr domain, TypePtr codomain) {
  return TypePtr(new Type(std::move(domain), std::move(codomain)));
}

TypePtr Type::arrows(const std::vector<TypePtr>& domains, TypePtr result) {
  TypePtr t = std::move(result);
  for (auto it = domains.rbegin(); it != domains.rend(); ++it)
    t = arrow(*it, t);
  return t;
}

int compare(const Type& a, const Type& b) {
  if (&a == &b) return 0;
  if (a.is_base() != b.is_base()) return a.is_base() ? -1 : 1;
  if (a.is_base()) return 0;
  if (int c = compare(*a.domain(), *b.domain())) return c;
  return compare(*a.codomain(), *b.codomain());
}

bool operator==(const Type& a, const Type& b) { return compare(a, b) == 0; }

bool equal(const TypePtr& a, const TypePtr& b) {
  return a == b || (a && b && *a == *b);
}

int type_order(const TypePtr& t) {
  if (t->is_base()) return 1;
  return std::max(1 + type_order(t->domain()), type_order(t->codomain()));
}

std::vector<TypePtr> decompose(const TypePtr& t) {
  std::vector<TypePtr> args;
  TypePtr cur = t;
  while (cur->is_arrow()) {
    args.push_back(cur->domain());
    cur = cur->codomain();
  }
  return args;
}

int arity(const TypePtr& t) {
  int n = 0;
  for (TypePtr cur = t; cur->is_arrow(); cur = cur->codomain()) ++n;
  return n;
}

std::string to_string(const TypePtr& t) {
  if (t->is_base()) return "i";
  std::string dom = to_string(t->domain());
  if (t->domain()->is_arrow()) dom = "(" + dom + ")";
  return dom + " -> " + to_string(t->codomain());
}

}  // namespace stlc
