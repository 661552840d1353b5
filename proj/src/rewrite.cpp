#include "stlc/rewrite.hpp"

#include <algorithm>

#include "stlc/error.hpp"
#include "stlc/typecheck.hpp"

namespace stlc {

// True when index 0 occurs in `t` (dangling reference to the immediately
// enclosing binder).
bool has_dangling_at(const TermPtr& t);

TermPtr shift(const TermPtr& t, int delta, int cutoff) {
  switch (t->kind()) {
    case Term::Kind::bound:
      if (t->index() >= cutoff) return Term::bound(t->index() + delta);
      return t;
    case Term::Kind::free:
      return t;
    case Term::Kind::app: {
      TermPtr f = shift(t->fun(), delta, cutoff);
      TermPtr a = shift(t->arg(), delta, cutoff);
      if (f == t->fun() && a == t->arg()) return t;
      return Term::app(std::move(f), std::move(a));
    }
    case Term::Kind::lam: {
      TermPtr b = shift(t->body(), delta, cutoff + 1);
      if (b == t->body()) return t;
      return Term::lam(t->binder(), std::move(b), t->hint());
    }
  }
  return t;
}

TermPtr substitute(const TermPtr& t, const std::string& name,
                   const TermPtr& u) {
  switch (t->kind()) {
    case Term::Kind::bound:
      return t;
    case Term::Kind::free:
      return t->name() == name ? u : t;
    case Term::Kind::app:
      return Term::app(substitute(t->fun(), name, u),
                       substitute(t->arg(), name, u));
    case Term::Kind::lam:
      // `u` has no dangling indices, so it passes under the binder as is.
      return Term::lam(t->binder(), substitute(t->body(), name, u), t->hint());
  }
  return t;
}

namespace {

// t[j := shift(u, j)], lowering indices above j.
TermPtr subst_index(const TermPtr& t, int j, const TermPtr& u) {
  switch (t->kind()) {
    case Term::Kind::bound:
      if (t->index() == j) return shift(u, j);
      if (t->index() > j) return Term::bound(t->index() - 1);
      return t;
    case Term::Kind::free:
      return t;
    case Term::Kind::app:
      return Term::app(subst_index(t->fun(), j, u),
                       subst_index(t->arg(), j, u));
    case Term::Kind::lam:
      return Term::lam(t->binder(), subst_index(t->body(), j + 1, u),
                       t->hint());
  }
  return t;
}

struct StepCounter {
  std::uint64_t remaining;
  void tick() {
    if (remaining == 0)
      throw resource_exceeded("reduction step budget exhausted");
    --remaining;
  }
};

TermPtr whnf(TermPtr t, StepCounter& steps) {
  while (t->is_app()) {
    TermPtr f = whnf(t->fun(), steps);
    if (f->is_lam()) {
      steps.tick();
      t = substitute_bound(f->body(), t->arg());
    } else if (f == t->fun()) {
      return t;
    } else {
      return Term::app(std::move(f), t->arg());
    }
  }
  return t;
}

// Normal-order (leftmost-outermost) beta-normalization.
TermPtr beta_normalize(const TermPtr& t, StepCounter& steps) {
  switch (t->kind()) {
    case Term::Kind::bound:
    case Term::Kind::free:
      return t;
    case Term::Kind::lam:
      return Term::lam(t->binder(), beta_normalize(t->body(), steps),
                       t->hint());
    case Term::Kind::app: {
      TermPtr h = whnf(t, steps);
      if (!h->is_app()) return beta_normalize(h, steps);
      return Term::app(beta_normalize(h->fun(), steps),
                       beta_normalize(h->arg(), steps));
    }
  }
  return t;
}

// Bottom-up eta-contraction of a beta-normal term. Contracting cannot
// create a beta redex in a beta-normal input.
TermPtr eta_contract(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::bound:
    case Term::Kind::free:
      return t;
    case Term::Kind::app:
      return Term::app(eta_contract(t->fun()), eta_contract(t->arg()));
    case Term::Kind::lam: {
      TermPtr body = eta_contract(t->body());
      if (body->is_app() && body->arg()->is_bound() &&
          body->arg()->index() == 0 && !has_dangling_at(body->fun())) {
        return shift(body->fun(), -1);
      }
      return Term::lam(t->binder(), std::move(body), t->hint());
    }
  }
  return t;
}

bool beta_normal(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::bound:
    case Term::Kind::free:
      return true;
    case Term::Kind::app:
      return !t->fun()->is_lam() && beta_normal(t->fun()) &&
             beta_normal(t->arg());
    case Term::Kind::lam:
      return beta_normal(t->body());
  }
  return true;
}

bool eta_normal(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::bound:
    case Term::Kind::free:
      return true;
    case Term::Kind::app:
      return eta_normal(t->fun()) && eta_normal(t->arg());
    case Term::Kind::lam:
      if (t->body()->is_app() && t->body()->arg()->is_bound() &&
          t->body()->arg()->index() == 0 && !has_dangling_at(t->body()->fun()))
        return false;
      return eta_normal(t->body());
  }
  return true;
}

}  // namespace

bool has_dangling_at(const TermPtr& t) {
  struct Walk {
    static bool at(const TermPtr& t, int idx) {
      switch (t->kind()) {
        case Term::Kind::bound:
          return t->index() == idx;
        case Term::Kind::free:
          return false;
        case Term::Kind::app:
          return at(t->fun(), idx) || at(t->arg(), idx);
        case Term::Kind::lam:
          return at(t->body(), idx + 1);
      }
      return false;
    }
  };
  return Walk::at(t, 0);
}

TermPtr substitute_bound(const TermPtr& t, const TermPtr& u) {
  return subst_index(t, 0, u);
}

NormalForm NormalForm::check(TermPtr t) {
  if (!beta_normal(t) || !eta_normal(t))
    throw not_eta_long("term is not beta-eta-normal");
  return NormalForm(std::move(t));
}

NormalForm normalize(const Context& ctx, const TermPtr& t,
                     ReductionBudget budget) {
  infer_type(ctx, t);  // ill_typed on failure; guarantees termination
  StepCounter steps{budget.max_steps};
  return NormalForm(eta_contract(beta_normalize(t, steps)));
}

bool is_beta_eta_normal(const TermPtr& t) {
  return beta_normal(t) && eta_normal(t);
}

namespace {

// Eta-long expansion of a beta-normal term at `type`. Binder stack is for
// typing the head of the spine.
TermPtr expand(const Context& ctx, std::vector<TypePtr>& binders,
               const TermPtr& t, const TypePtr& type) {
  std::vector<TypePtr> all_args = decompose(type);
  // Peel the existing binder prefix.
  TermPtr body = t;
  std::size_t n = 0;
  while (body->is_lam() && n < all_args.size()) {
    if (!equal(body->binder(), all_args[n]))
      throw type_mismatch("binder type does not match the expansion type");
    binders.push_back(body->binder());
    body = body->body();
    ++n;
  }
  if (body->is_lam()) throw type_mismatch("term has more binders than its type");
  std::size_t missing = all_args.size() - n;
  // Make room for the appended binders.
  body = shift(body, static_cast<int>(missing));
  Spine sp = spine(body);
  for (std::size_t j = 0; j < missing; ++j) {
    binders.push_back(all_args[n + j]);
    sp.args.push_back(Term::bound(static_cast<int>(missing - 1 - j)));
  }
  TypePtr head_type = infer_type(ctx, binders, sp.head);
  std::vector<TypePtr> head_args = decompose(head_type);
  if (head_args.size() != sp.args.size())
    throw not_eta_long("head of a normal form is not fully applied");
  TermPtr out = sp.head;
  for (std::size_t j = 0; j < sp.args.size(); ++j)
    out = Term::app(out, expand(ctx, binders, sp.args[j], head_args[j]));
  for (std::size_t j = 0; j < all_args.size(); ++j) {
    out = Term::lam(binders.back(), out);
    binders.pop_back();
  }
  return out;
}

}  // namespace

bool is_eta_long(const Context& ctx, const TermPtr& t, const TypePtr& type) {
  if (!beta_normal(t)) return false;
  std::vector<TypePtr> binders;
  try {
    TermPtr expanded = expand(ctx, binders, t, type);
    return alpha_equal(expanded, t);
  } catch (const error&) {
    return false;
  }
}

EtaLongForm eta_long(const Context& ctx, const NormalForm& t,
                     const TypePtr& type) {
  TypePtr actual = infer_type(ctx, t.term());
  if (!equal(actual, type))
    throw type_mismatch("term has type " + to_string(actual) +
                        ", expected " + to_string(type));
  std::vector<TypePtr> binders;
  return EtaLongForm(expand(ctx, binders, t.term(), type), type);
}

EtaLongForm canonical_form(const Context& ctx, const TermPtr& t,
                           ReductionBudget budget) {
  TypePtr ty = infer_type(ctx, t);
  return eta_long(ctx, normalize(ctx, t, budget), ty);
}

bool beta_eta_eq(const Context& ctx, const TermPtr& t, const TermPtr& u,
                 ReductionBudget budget) {
  TypePtr tt = infer_type(ctx, t);
  TypePtr tu = infer_type(ctx, u);
  if (!equal(tt, tu))
    throw type_mismatch("terms of types " + to_string(tt) + " and " +
                        to_string(tu) + " are never equal");
  return alpha_equal(normalize(ctx, t, budget).term(),
                     normalize(ctx, u, budget).term());
}

int term_length_raw(const TermPtr& t) {
  // Leading binders never contribute; the measure follows the spine.
  std::vector<TypePtr> binders;
  Spine sp = spine(strip_lambdas(t, binders));
  int best = 0;
  for (const auto& arg : sp.args)
    best = std::max(best, term_length_raw(arg));
  return 1 + best;
}

int term_length(const EtaLongForm& t) { return term_length_raw(t.term()); }

EtaLongForm EtaLongForm::check(const Context& ctx, TermPtr t, TypePtr type) {
  if (!is_eta_long(ctx, t, type))
    throw not_eta_long("term is not normal eta-long at " + to_string(type));
  return EtaLongForm(std::move(t), std::move(type));
}

}  // namespace stlc
