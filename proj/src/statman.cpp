#include "stlc/statman.hpp"

#include <algorithm>
#include <functional>

#include "stlc/error.hpp"
#include "stlc/rewrite.hpp"
#include "stlc/syntax.hpp"
#include "stlc/typecheck.hpp"

namespace stlc {

namespace {

TypePtr iota_fn(int arity) {
  std::vector<TypePtr> args(static_cast<std::size_t>(arity), Type::base());
  return Type::arrows(args, Type::base());
}

bool member(const std::vector<TermPtr>& set, const TermPtr& t) {
  return std::any_of(set.begin(), set.end(),
                     [&](const TermPtr& s) { return alpha_equal(s, t); });
}

}  // namespace

TermPtr SeparatorNames::probe(int arity) {
  std::string name = arity == 0 ? "z0" : "zp" + std::to_string(arity);
  ctx_.declare(name, iota_fn(arity));
  return Term::free(name);
}

TermPtr SeparatorNames::fresh(const TypePtr& type) {
  std::string name = "z" + std::to_string(counter_++);
  ctx_.declare(name, type);
  return Term::free(name);
}

void SeparatorNames::absorb(const SeparatorNames& other) {
  ctx_ = Context::merged(ctx_, other.ctx_);
  counter_ = std::max(counter_, other.counter_);
}

TermPtr build_c(const TypePtr& type, SeparatorNames& names) {
  std::vector<TypePtr> args = decompose(type);
  int p = static_cast<int>(args.size());
  TermPtr body = names.probe(p);
  for (int i = 0; i < p; ++i) {
    // x_{i+1} fully applied to the probes of its own argument types.
    TermPtr x = Term::bound(p - 1 - i);
    for (const auto& gamma : decompose(args[static_cast<std::size_t>(i)]))
      x = Term::app(x, build_c(gamma, names));
    body = Term::app(body, x);
  }
  return wrap_lambdas(args, body);
}

TermPtr length_separator(const TypePtr& type, SeparatorNames& names) {
  TermPtr body = Term::bound(0);
  for (const auto& arg : decompose(type))
    body = Term::app(body, build_c(arg, names));
  return Term::lam(type, body, "x");
}

std::vector<TermPtr> pair_separator_args(const EtaLongForm& t,
                                         const EtaLongForm& u,
                                         SeparatorNames& names) {
  if (!equal(t.type(), u.type()))
    throw type_mismatch("pair separator needs equally typed terms");
  if (alpha_equal(t.term(), u.term()))
    throw same_term("the two terms are alpha-equivalent");

  std::vector<TypePtr> arg_types = decompose(t.type());
  std::size_t n = arg_types.size();

  std::vector<TypePtr> bt, bu;
  Spine st = spine(strip_lambdas(t.term(), bt));
  Spine su = spine(strip_lambdas(u.term(), bu));
  // Eta-long closed terms of the same type carry the full binder prefix.
  if (bt.size() != n || bu.size() != n || !st.head->is_bound() ||
      !su.head->is_bound())
    throw not_eta_long("pair separator inputs must be closed eta-long forms");

  // 1-based binder positions of the heads.
  std::size_t i = n - static_cast<std::size_t>(st.head->index());
  std::size_t iu = n - static_cast<std::size_t>(su.head->index());

  std::vector<TermPtr> cs(n);

  if (i != iu) {
    // Distinct heads: collapse each side to its own fresh constant.
    for (std::size_t j = 1; j <= n; ++j) {
      const TypePtr& aj = arg_types[j - 1];
      if (j == i || j == iu) {
        std::vector<TypePtr> betas = decompose(aj);
        cs[j - 1] = wrap_lambdas(betas, names.fresh(Type::base()));
      } else {
        cs[j - 1] = build_c(aj, names);
      }
    }
    return cs;
  }

  // Same head: recurse on the first differing re-abstracted argument.
  std::size_t p = st.args.size();
  if (su.args.size() != p)
    throw not_eta_long("equal heads with unequal arities");
  std::vector<TypePtr> head_arg_types = decompose(arg_types[i - 1]);

  std::size_t k = 0;
  TermPtr ek, euk;
  for (std::size_t j = 0; j < p; ++j) {
    TermPtr a = wrap_lambdas(arg_types, st.args[j]);
    TermPtr b = wrap_lambdas(arg_types, su.args[j]);
    if (!alpha_equal(a, b)) {
      k = j + 1;
      ek = a;
      euk = b;
      break;
    }
  }
  if (k == 0) throw same_term("terms agree on every argument");

  std::vector<TypePtr> gammas = decompose(head_arg_types[k - 1]);
  std::vector<TypePtr> rec_args = arg_types;
  rec_args.insert(rec_args.end(), gammas.begin(), gammas.end());
  TypePtr rec_type = Type::arrows(rec_args, Type::base());

  Context empty;
  std::vector<TermPtr> rec = pair_separator_args(
      EtaLongForm::check(empty, ek, rec_type),
      EtaLongForm::check(empty, euk, rec_type), names);
  // rec = a_1..a_n, b_1..b_m.
  std::vector<TermPtr> as(rec.begin(), rec.begin() + static_cast<long>(n));
  std::vector<TermPtr> bs(rec.begin() + static_cast<long>(n), rec.end());

  TermPtr pairing = names.fresh(
      Type::arrow(Type::base(), Type::arrow(Type::base(), Type::base())));

  // c_i = \y_1..y_p. (z (y_k b_1..b_m) (a_i y_1..y_p))
  std::vector<TypePtr> ys = head_arg_types;
  std::size_t yn = ys.size();
  TermPtr yk = Term::bound(static_cast<int>(yn - k));
  for (const auto& b : bs) yk = Term::app(yk, b);
  TermPtr ai_applied = as[i - 1];
  for (std::size_t j = 0; j < yn; ++j)
    ai_applied = Term::app(ai_applied, Term::bound(static_cast<int>(yn - 1 - j)));
  TermPtr ci = wrap_lambdas(ys, Term::app(Term::app(pairing, yk), ai_applied));

  for (std::size_t j = 1; j <= n; ++j)
    cs[j - 1] = (j == i) ? ci : as[j - 1];
  return cs;
}

TermPtr pair_separator(const EtaLongForm& t, const EtaLongForm& u,
                       SeparatorNames& names) {
  std::vector<TermPtr> cs = pair_separator_args(t, u, names);
  TermPtr body = Term::bound(0);
  for (const auto& c : cs) body = Term::app(body, c);
  return Term::lam(t.type(), body, "x");
}

SeparatorSet separator_set(const TermPtr& t, const TypePtr& type,
                           EnumerationBudget budget) {
  if (!is_closed(t)) throw not_closed("separator subject must be closed");
  TypePtr actual = infer_type({}, t);
  if (!equal(actual, type))
    throw type_mismatch("subject has type " + to_string(actual) +
                        ", expected " + to_string(type));
  Context empty;
  EtaLongForm subject = canonical_form(empty, t);
  int length = term_length(subject);

  SeparatorNames names;
  SeparatorSet out;
  out.subject_type = type;
  out.separators.push_back(length_separator(type, names));
  for (const auto& rival : enumerate_same_length(type, length, budget)) {
    if (alpha_equal(rival.term(), subject.term())) continue;
    out.separators.push_back(pair_separator(subject, rival, names));
  }
  out.context = names.context();
  return out;
}

namespace {

std::optional<TermPtr> find_bottom_rep(const Context& ctx,
                                       const std::vector<TermPtr>& allowed,
                                       EnumerationBudget budget) {
  std::optional<TermPtr> rep;
  if (ctx.empty()) return rep;
  for_each_normal_term(ctx, Type::base(), budget, [&](const EtaLongForm& f) {
    if (!member(allowed, f.term())) {
      rep = f.term();
      return false;
    }
    return true;
  });
  return rep;
}

}  // namespace

QuotientBase quotient_base(const TermPtr& t, const SeparatorSet& ws,
                           EnumerationBudget budget) {
  QuotientBase base;
  base.context = ws.context;
  for (const auto& w : ws.separators) {
    NormalForm nf = normalize(ws.context, Term::app(w, t));
    for (const auto& s : iota_subterms(nf, ws.context))
      if (!member(base.allowed, s)) base.allowed.push_back(s);
  }
  base.bottom_rep = find_bottom_rep(ws.context, base.allowed, budget);
  return base;
}

Element class_of(const QuotientBase& base, const TermPtr& s) {
  TypePtr ty = infer_type(base.context, s);
  if (!ty->is_base())
    throw ill_typed("class_of only applies to base-typed terms");
  TermPtr nf = normalize(base.context, s).term();
  for (std::size_t i = 0; i < base.allowed.size(); ++i)
    if (alpha_equal(base.allowed[i], nf))
      return Element{Type::base(), BigInt(i)};
  return Element{Type::base(), base.bottom_code()};
}

namespace {

std::optional<TermPtr> representative(const QuotientBase& base,
                                      const BigInt& code) {
  std::uint64_t i = code.convert_to<std::uint64_t>();
  if (i < base.allowed.size()) return base.allowed[i];
  return base.bottom_rep;
}

// Curried tabulation of the clause
//   f(d_1)...(d_n) = class of (x u_1 ... u_n)  with u_i a representative.
Element tabulate_var(const QuotientBase& base, const Model& m,
                     const std::string& name, const TypePtr& type,
                     TermPtr applied, bool hit_empty_bottom) {
  if (type->is_base()) {
    if (hit_empty_bottom) return Element{Type::base(), base.bottom_code()};
    return class_of(base, applied);
  }
  std::uint64_t dom = m.base_size;  // order <= 2: every argument is base
  std::vector<BigInt> table(dom);
  for (std::uint64_t d = 0; d < dom; ++d) {
    std::optional<TermPtr> rep = representative(base, BigInt(d));
    Element v = rep.has_value()
                    ? tabulate_var(base, m, name, type->codomain(),
                                   Term::app(applied, *rep), hit_empty_bottom)
                    : tabulate_var(base, m, name, type->codomain(), applied,
                                   true);
    table[d] = std::move(v.code);
  }
  return Element{type, encode_table(m, type, table)};
}

}  // namespace

Assignment statman_assignment(const QuotientBase& base, const Model& m) {
  if (m.base_size != base.cardinality())
    throw type_mismatch("model base size does not match the quotient base");
  Assignment nu;
  for (const auto& [name, type] : base.context.vars()) {
    if (type_order(type) > 2)
      throw order_too_high("context variable '" + name + "' has order " +
                           std::to_string(type_order(type)));
    nu.emplace(name, tabulate_var(base, m, name, type, Term::free(name),
                                  false));
  }
  return nu;
}

StatmanBundle build_finite_model(const TermPtr& t, const TypePtr& type,
                                 EnumerationBudget budget, std::uint64_t cap) {
  StatmanBundle bundle;
  bundle.separators = separator_set(t, type, budget);
  bundle.base = quotient_base(t, bundle.separators, budget);
  bundle.model = Model{bundle.base.cardinality(), cap};
  bundle.assignment = statman_assignment(bundle.base, bundle.model);
  Context empty;
  bundle.subject = canonical_form(empty, t).term();
  bundle.subject_type = type;
  return bundle;
}

namespace {

// Interpretation of (w u) via its normal form; the normal form is a
// base-typed spine over order-<=2 variables, so nothing gets tabulated.
Element interpret_applied(const Model& m, const Context& ctx,
                          const Assignment& nu, const TermPtr& w,
                          const TermPtr& u, Exec exec) {
  NormalForm nf = normalize(ctx, Term::app(w, u));
  return interpret(m, ctx, nu, nf.term(), exec);
}

}  // namespace

bool decide_eq(const StatmanBundle& bundle, const TermPtr& u, Exec exec) {
  if (!is_closed(u)) throw not_closed("decide_eq compares closed terms");
  TypePtr ty = infer_type({}, u);
  if (!equal(ty, bundle.subject_type))
    throw type_mismatch("term has type " + to_string(ty) + ", expected " +
                        to_string(bundle.subject_type));
  const Context& ctx = bundle.separators.context;
  for (const auto& w : bundle.separators.separators) {
    Element lhs =
        interpret_applied(bundle.model, ctx, bundle.assignment, w,
                          bundle.subject, exec);
    Element rhs = interpret_applied(bundle.model, ctx, bundle.assignment, w,
                                    u, exec);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

Order3Bundle build_model_order3(const TermPtr& t, const TypePtr& type,
                                EnumerationBudget budget, std::uint64_t cap) {
  if (type_order(type) > 3)
    throw order_too_high("subject type has order " +
                         std::to_string(type_order(type)) +
                         ", the direct construction needs order <= 3");
  if (!is_closed(t)) throw not_closed("subject must be closed");
  TypePtr actual = infer_type({}, t);
  if (!equal(actual, type))
    throw type_mismatch("subject has type " + to_string(actual) +
                        ", expected " + to_string(type));

  Order3Bundle bundle;
  bundle.subject_type = type;
  std::vector<TypePtr> args = decompose(type);
  Context ctx;
  TermPtr applied = t;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string name = "x" + std::to_string(i + 1);
    ctx.declare(name, args[i]);
    bundle.argument_vars.push_back(Term::free(name));
    applied = Term::app(applied, bundle.argument_vars.back());
  }
  NormalForm nf = normalize(ctx, applied);
  bundle.base.context = ctx;
  bundle.base.allowed = iota_subterms(nf, ctx);
  bundle.base.bottom_rep = find_bottom_rep(ctx, bundle.base.allowed, budget);
  bundle.model = Model{bundle.base.cardinality(), cap};
  bundle.assignment = statman_assignment(bundle.base, bundle.model);
  Context empty;
  bundle.subject = canonical_form(empty, t).term();
  return bundle;
}

bool decide_eq(const Order3Bundle& bundle, const TermPtr& u, Exec exec) {
  if (!is_closed(u)) throw not_closed("decide_eq compares closed terms");
  TypePtr ty = infer_type({}, u);
  if (!equal(ty, bundle.subject_type))
    throw type_mismatch("term has type " + to_string(ty) + ", expected " +
                        to_string(bundle.subject_type));
  const Context& ctx = bundle.base.context;
  TermPtr lhs = bundle.subject;
  TermPtr rhs = u;
  for (const auto& x : bundle.argument_vars) {
    lhs = Term::app(lhs, x);
    rhs = Term::app(rhs, x);
  }
  Element a = interpret(bundle.model, ctx, bundle.assignment,
                        normalize(ctx, lhs).term(), exec);
  Element b = interpret(bundle.model, ctx, bundle.assignment,
                        normalize(ctx, rhs).term(), exec);
  return a == b;
}

}  // namespace stlc
