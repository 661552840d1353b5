#include "support.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "stlc/error.hpp"
#include "stlc/typecheck.hpp"

namespace support {

using stlc::Context;
using stlc::Term;
using stlc::TermPtr;
using stlc::Type;
using stlc::TypePtr;

TypePtr random_type(Rng& rng, int max_depth) {
  if (max_depth <= 0 || rng.chance(0.4)) return Type::base();
  return Type::arrow(random_type(rng, max_depth - 1),
                     random_type(rng, max_depth - 1));
}

namespace {

struct Head {
  TermPtr var;
  TypePtr type;
};

TermPtr gen(std::vector<TypePtr>& binders, const Context& ctx,
            const TypePtr& type, Rng& rng, int depth) {
  if (type->is_arrow()) {
    binders.push_back(type->domain());
    TermPtr body = gen(binders, ctx, type->codomain(), rng, depth);
    binders.pop_back();
    return Term::lam(type->domain(), body);
  }
  // Base type: pick a head (context variable or binder) and fully apply
  // it; every head's type ends in the base type, so any choice works.
  std::vector<Head> heads;
  for (const auto& [name, vt] : ctx.vars())
    heads.push_back({Term::free(name), vt});
  for (std::size_t i = 0; i < binders.size(); ++i)
    heads.push_back({Term::bound(static_cast<int>(binders.size() - 1 - i)),
                     binders[i]});
  if (heads.empty())
    throw std::logic_error("no inhabitant of the base type here");
  std::vector<Head> nullary;
  for (const auto& h : heads)
    if (h.type->is_base()) nullary.push_back(h);
  const Head& pick = (depth <= 0 && !nullary.empty())
                         ? nullary[rng.below(static_cast<int>(nullary.size()))]
                         : heads[rng.below(static_cast<int>(heads.size()))];
  TermPtr out = pick.var;
  for (TypePtr rest = pick.type; rest->is_arrow(); rest = rest->codomain())
    out = Term::app(out, gen(binders, ctx, rest->domain(), rng, depth - 1));
  return out;
}

// --- independent shift / substitution / reduction -------------------------

TermPtr sh(const TermPtr& t, int delta, int cutoff) {
  switch (t->kind()) {
    case Term::Kind::bound:
      return t->index() >= cutoff ? Term::bound(t->index() + delta) : t;
    case Term::Kind::free:
      return t;
    case Term::Kind::app:
      return Term::app(sh(t->fun(), delta, cutoff), sh(t->arg(), delta, cutoff));
    case Term::Kind::lam:
      return Term::lam(t->binder(), sh(t->body(), delta, cutoff + 1),
                       t->hint());
  }
  return t;
}

TermPtr subst_top(const TermPtr& t, const TermPtr& u, int depth) {
  switch (t->kind()) {
    case Term::Kind::bound:
      if (t->index() == depth) return sh(u, depth, 0);
      if (t->index() > depth) return Term::bound(t->index() - 1);
      return t;
    case Term::Kind::free:
      return t;
    case Term::Kind::app:
      return Term::app(subst_top(t->fun(), u, depth),
                       subst_top(t->arg(), u, depth));
    case Term::Kind::lam:
      return Term::lam(t->binder(), subst_top(t->body(), u, depth + 1),
                       t->hint());
  }
  return t;
}

// Rightmost-innermost: reduce the argument, then the function, then the
// root redex.
std::optional<TermPtr> step(const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::bound:
    case Term::Kind::free:
      return std::nullopt;
    case Term::Kind::lam:
      if (auto b = step(t->body()))
        return Term::lam(t->binder(), *b, t->hint());
      return std::nullopt;
    case Term::Kind::app:
      if (auto a = step(t->arg())) return Term::app(t->fun(), *a);
      if (auto f = step(t->fun())) return Term::app(*f, t->arg());
      if (t->fun()->is_lam()) return subst_top(t->fun()->body(), t->arg(), 0);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

TermPtr random_term(const Context& ctx, const TypePtr& type, Rng& rng,
                    int depth) {
  std::vector<TypePtr> binders;
  return gen(binders, ctx, type, rng, depth);
}

namespace {

TermPtr obfuscate_rec(const Context& ctx, std::vector<TypePtr>& binders,
                      const TermPtr& t, Rng& rng, bool base_only, int& fuel) {
  TermPtr out;
  switch (t->kind()) {
    case Term::Kind::bound:
    case Term::Kind::free:
      out = t;
      break;
    case Term::Kind::app:
      out = Term::app(obfuscate_rec(ctx, binders, t->fun(), rng, base_only, fuel),
                      obfuscate_rec(ctx, binders, t->arg(), rng, base_only, fuel));
      break;
    case Term::Kind::lam: {
      binders.push_back(t->binder());
      TermPtr body = obfuscate_rec(ctx, binders, t->body(), rng, base_only, fuel);
      binders.pop_back();
      out = Term::lam(t->binder(), body, t->hint());
      break;
    }
  }
  if (fuel <= 0) return out;
  TypePtr ty = stlc::infer_type(ctx, binders, out);
  if (rng.chance(0.25) && (ty->is_base() || !base_only)) {
    // Identity redex: ((\x:ty. x) out).
    --fuel;
    out = Term::app(Term::lam(ty, Term::bound(0)), out);
  }
  if (ty->is_arrow() && rng.chance(0.2)) {
    // Eta expansion: \x:dom. (out x).
    --fuel;
    out = Term::lam(ty->domain(), Term::app(sh(out, 1, 0), Term::bound(0)));
  }
  return out;
}

}  // namespace

TermPtr obfuscate(const Context& ctx, const TermPtr& t, Rng& rng,
                  bool base_redexes_only) {
  std::vector<TypePtr> binders;
  int fuel = 6;
  return obfuscate_rec(ctx, binders, t, rng, base_redexes_only, fuel);
}

TermPtr alt_beta_normalize(const TermPtr& t, int max_steps) {
  TermPtr cur = t;
  for (int i = 0; i < max_steps; ++i) {
    auto next = step(cur);
    if (!next) return cur;
    cur = *next;
  }
  throw std::runtime_error("alt_beta_normalize: step budget exhausted");
}

// --- naive explicit-table semantics ---------------------------------------

std::vector<NaiveValue> naive_space(std::uint64_t base, const TypePtr& type) {
  std::vector<NaiveValue> out;
  if (type->is_base()) {
    for (std::uint64_t i = 0; i < base; ++i) {
      NaiveValue v;
      v.base = static_cast<long>(i);
      out.push_back(v);
    }
    return out;
  }
  std::vector<NaiveValue> dom = naive_space(base, type->domain());
  std::vector<NaiveValue> cod = naive_space(base, type->codomain());
  // All |cod|^|dom| tables, entry for domain index 0 varying fastest.
  std::vector<std::size_t> pick(dom.size(), 0);
  for (;;) {
    NaiveValue f;
    f.is_fun = true;
    for (std::size_t i = 0; i < dom.size(); ++i) f.table.push_back(cod[pick[i]]);
    out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == cod.size()) {
      pick[i] = 0;
      ++i;
    }
    if (i == pick.size()) break;
  }
  return out;
}

stlc::BigInt naive_code(std::uint64_t base, const TypePtr& type,
                        const NaiveValue& v) {
  if (type->is_base()) return stlc::BigInt(v.base);
  stlc::BigInt cod_size = 1;
  {
    // |M_cod| computed by the plain exponent recursion.
    std::function<stlc::BigInt(const TypePtr&)> size = [&](const TypePtr& ty) {
      if (ty->is_base()) return stlc::BigInt(base);
      stlc::BigInt d = size(ty->domain());
      return stlc::BigInt(pow(size(ty->codomain()), d.convert_to<unsigned>()));
    };
    cod_size = size(type->codomain());
  }
  stlc::BigInt code = 0;
  for (std::size_t i = v.table.size(); i-- > 0;)
    code = code * cod_size + naive_code(base, type->codomain(), v.table[i]);
  return code;
}

namespace {

NaiveValue napply(std::uint64_t base, const TypePtr& fn_type,
                  const NaiveValue& f, const NaiveValue& a) {
  stlc::BigInt idx = naive_code(base, fn_type->domain(), a);
  return f.table.at(idx.convert_to<std::size_t>());
}

NaiveValue neval(std::uint64_t base, const Context& ctx,
                 const std::vector<std::pair<std::string, NaiveValue>>& frees,
                 std::vector<std::pair<TypePtr, NaiveValue>>& env,
                 const std::vector<TypePtr>& binders, const TermPtr& t) {
  switch (t->kind()) {
    case Term::Kind::bound:
      return env.at(env.size() - 1 - static_cast<std::size_t>(t->index()))
          .second;
    case Term::Kind::free:
      for (const auto& [name, v] : frees)
        if (name == t->name()) return v;
      throw std::runtime_error("naive_eval: unassigned variable " + t->name());
    case Term::Kind::app: {
      TypePtr fn_type = stlc::infer_type(ctx, binders, t->fun());
      NaiveValue f = neval(base, ctx, frees, env, binders, t->fun());
      NaiveValue a = neval(base, ctx, frees, env, binders, t->arg());
      return napply(base, fn_type, f, a);
    }
    case Term::Kind::lam: {
      NaiveValue out;
      out.is_fun = true;
      std::vector<TypePtr> inner = binders;
      inner.push_back(t->binder());
      for (const NaiveValue& d : naive_space(base, t->binder())) {
        env.emplace_back(t->binder(), d);
        out.table.push_back(neval(base, ctx, frees, env, inner, t->body()));
        env.pop_back();
      }
      return out;
    }
  }
  throw std::runtime_error("naive_eval: malformed term");
}

}  // namespace

NaiveValue naive_eval(std::uint64_t base, const Context& ctx,
                      const std::vector<std::pair<std::string, NaiveValue>>& frees,
                      const TermPtr& t) {
  std::vector<std::pair<TypePtr, NaiveValue>> env;
  std::vector<TypePtr> binders;
  return neval(base, ctx, frees, env, binders, t);
}

// --- generate-and-filter enumeration oracle -------------------------------

namespace {

void subtypes(const TypePtr& t, std::vector<TypePtr>& out) {
  for (const auto& have : out)
    if (stlc::equal(have, t)) return;
  out.push_back(t);
  if (t->is_arrow()) {
    subtypes(t->domain(), out);
    subtypes(t->codomain(), out);
  }
}

// terms[nodes][depth] = all raw terms with exactly `nodes` AST nodes under
// `depth` binders, annotations drawn from `anno`.
std::vector<TermPtr> raw_terms(int nodes, int depth,
                               const std::vector<TypePtr>& anno,
                               std::map<std::pair<int, int>,
                                        std::vector<TermPtr>>& memo) {
  auto key = std::make_pair(nodes, depth);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<TermPtr> out;
  if (nodes == 1) {
    for (int i = 0; i < depth; ++i) out.push_back(Term::bound(i));
  } else if (nodes > 1) {
    for (const auto& ty : anno)
      for (const auto& body : raw_terms(nodes - 1, depth + 1, anno, memo))
        out.push_back(Term::lam(ty, body));
    for (int left = 1; left < nodes - 1; ++left)
      for (const auto& f : raw_terms(left, depth, anno, memo))
        for (const auto& a : raw_terms(nodes - 1 - left, depth, anno, memo))
          out.push_back(Term::app(f, a));
  }
  memo[key] = out;
  return out;
}

}  // namespace

std::vector<TermPtr> oracle_enumerate(const TypePtr& type, int max_len,
                                      int max_nodes) {
  std::vector<TypePtr> anno;
  subtypes(type, anno);
  std::map<std::pair<int, int>, std::vector<TermPtr>> memo;
  Context empty;
  std::vector<TermPtr> out;
  for (int nodes = 1; nodes <= max_nodes; ++nodes) {
    for (const auto& t : raw_terms(nodes, 0, anno, memo)) {
      try {
        if (!stlc::equal(stlc::infer_type(empty, t), type)) continue;
      } catch (const stlc::error&) {
        continue;
      }
      if (!stlc::is_eta_long(empty, t, type)) continue;
      if (stlc::term_length_raw(t) > max_len) continue;
      out.push_back(t);
    }
  }
  std::sort(out.begin(), out.end(), [](const TermPtr& a, const TermPtr& b) {
    int la = stlc::term_length_raw(a), lb = stlc::term_length_raw(b);
    if (la != lb) return la < lb;
    return stlc::compare(a, b) < 0;
  });
  return out;
}

}  // namespace support
