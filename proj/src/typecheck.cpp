#include "stlc/typecheck.hpp"

#include "stlc/error.hpp"
#include "stlc/syntax.hpp"

namespace stlc {

namespace {

TypePtr infer(const Context& ctx, std::vector<TypePtr>& binders,
              const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::bound: {
      int i = t->index();
      if (i < 0 || i >= static_cast<int>(binders.size()))
        throw ill_typed("dangling binder reference #" + std::to_string(i));
      return binders[binders.size() - 1 - i];
    }
    case Term::Kind::free: {
      if (auto ty = ctx.lookup(t->name())) return *ty;
      throw ill_typed("unbound variable '" + t->name() + "'");
    }
    case Term::Kind::app: {
      TypePtr f = infer(ctx, binders, t->fun());
      TypePtr a = infer(ctx, binders, t->arg());
      if (f->is_base())
        throw ill_typed("base-typed term applied to an argument in " +
                        print_term(t, ctx));
      if (!equal(f->domain(), a))
        throw ill_typed("argument type " + to_string(a) +
                        " does not match domain " + to_string(f->domain()) +
                        " in " + print_term(t, ctx));
      return f->codomain();
    }
    case Term::Kind::lam: {
      binders.push_back(t->binder());
      TypePtr body = infer(ctx, binders, t->body());
      binders.pop_back();
      return Type::arrow(t->binder(), body);
    }
  }
  throw ill_typed("malformed term");
}

}  // namespace

TypePtr infer_type(const Context& ctx, const TermPtr& t) {
  std::vector<TypePtr> binders;
  return infer(ctx, binders, t);
}

TypePtr infer_type(const Context& ctx, const std::vector<TypePtr>& binders,
                   const TermPtr& t) {
  std::vector<TypePtr> stack = binders;
  return infer(ctx, stack, t);
}

bool is_closed(const TermPtr& t) {
  std::vector<std::string> names;
  collect_free_names(t, names);
  return names.empty() && is_locally_closed(t);
}

}  // namespace stlc
