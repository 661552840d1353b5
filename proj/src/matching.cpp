#include "stlc/matching.hpp"

#include <algorithm>
#include <numeric>

#include "stlc/error.hpp"
#include "stlc/rewrite.hpp"
#include "stlc/syntax.hpp"
#include "stlc/typecheck.hpp"

namespace stlc {

namespace {

// Replaces the named free variables by references to freshly wrapped
// binders; `names` is in binder order, innermost last.
TermPtr bind_frees(const TermPtr& t, const std::vector<std::string>& names,
                   int depth) {
  switch (t->kind()) {
    case Term::Kind::bound:
      return t;
    case Term::Kind::free: {
      for (std::size_t j = 0; j < names.size(); ++j)
        if (names[j] == t->name())
          return Term::bound(depth + static_cast<int>(names.size() - 1 - j));
      return t;
    }
    case Term::Kind::app:
      return Term::app(bind_frees(t->fun(), names, depth),
                       bind_frees(t->arg(), names, depth));
    case Term::Kind::lam:
      return Term::lam(t->binder(), bind_frees(t->body(), names, depth + 1),
                       t->hint());
  }
  return t;
}

bool problem_closed(const MatchingProblem& p) {
  return is_closed(p.lhs) && is_closed(p.rhs);
}

std::string fresh_plain_name(const Context& ctx, const std::string& base) {
  if (!ctx.contains(base)) return base;
  for (int i = 0;; ++i) {
    std::string candidate = base + std::to_string(i);
    if (!ctx.contains(candidate)) return candidate;
  }
}

}  // namespace

MatchingProblem make_problem(const Context& ctx, const TermPtr& a,
                             const TermPtr& b) {
  MatchingProblem p;
  p.ctx = ctx;
  p.lhs = a;
  p.rhs = b;
  TypePtr ta = infer_type(ctx, a);
  p.rhs_type = infer_type(ctx, b);
  int n = arity(ta) - arity(p.rhs_type);
  if (n < 0)
    throw type_mismatch("left side has fewer arguments than the right side");
  TypePtr rest = ta;
  for (int i = 0; i < n; ++i) {
    p.unknown_types.push_back(rest->domain());
    rest = rest->codomain();
  }
  if (!equal(rest, p.rhs_type))
    throw type_mismatch("left side does not produce the right side's type");
  return p;
}

std::vector<TermPtr> ClosedProblem::reopen(
    const std::vector<TermPtr>& solution) const {
  if (kind == Kind::trivial) return solution;
  std::vector<TermPtr> out;
  Context ctx;
  for (const auto& [name, type] : closed_vars) ctx.declare(name, type);
  for (const auto& s : solution) {
    TermPtr applied = s;
    for (const auto& [name, type] : closed_vars) {
      (void)type;
      applied = Term::app(applied, Term::free(name));
    }
    out.push_back(normalize(ctx, applied).term());
  }
  return out;
}

ClosedProblem close_problem(const MatchingProblem& p) {
  std::vector<std::string> names;
  collect_free_names(p.lhs, names);
  collect_free_names(p.rhs, names);
  // Deterministic binder order: context order first, then first occurrence.
  std::vector<std::pair<std::string, TypePtr>> closed;
  for (const auto& [name, type] : p.ctx.vars())
    if (std::find(names.begin(), names.end(), name) != names.end())
      closed.emplace_back(name, type);
  for (const auto& name : names) {
    bool have = std::any_of(closed.begin(), closed.end(),
                            [&](const auto& c) { return c.first == name; });
    if (!have) {
      auto ty = p.ctx.lookup(name);
      if (!ty) throw ill_typed("unbound variable '" + name + "'");
      closed.emplace_back(name, *ty);
    }
  }

  ClosedProblem out;
  if (closed.empty()) {
    out.problem = p;
    out.kind = ClosedProblem::Kind::trivial;
    return out;
  }
  out.kind = ClosedProblem::Kind::closed_terms;
  out.closed_vars = closed;

  std::size_t n = p.unknown_types.size();
  std::size_t np = closed.size();
  std::vector<std::string> xs;
  std::vector<TypePtr> betas;
  for (const auto& [name, type] : closed) {
    xs.push_back(name);
    betas.push_back(type);
  }

  std::vector<TypePtr> gammas;
  for (const auto& alpha : p.unknown_types)
    gammas.push_back(Type::arrows(betas, alpha));

  // a' = \y_1..y_n. \x_1..x_p. (a (y_1 x*) ... (y_n x*))
  TermPtr body = bind_frees(p.lhs, xs, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    TermPtr yi = Term::bound(static_cast<int>(np + n - i));
    for (std::size_t j = 1; j <= np; ++j)
      yi = Term::app(yi, Term::bound(static_cast<int>(np - j)));
    body = Term::app(body, yi);
  }
  std::vector<TypePtr> binders = gammas;
  binders.insert(binders.end(), betas.begin(), betas.end());
  TermPtr lhs = wrap_lambdas(binders, body);
  TermPtr rhs = wrap_lambdas(betas, bind_frees(p.rhs, xs, 0));

  out.problem = make_problem({}, lhs, rhs);
  return out;
}

ClosedProblem close_solutions(const MatchingProblem& p) {
  if (!problem_closed(p))
    throw not_closed("close_solutions expects a closed problem");

  ClosedProblem out;
  out.kind = ClosedProblem::Kind::closed_solutions;
  std::string var = fresh_plain_name(p.ctx, "v");
  out.closed_vars.emplace_back(var, Type::base());

  std::size_t n = p.unknown_types.size();
  // a' = \y_1:i->a_1 .. y_n:i->a_n. \x:i. (a (y_1 x) ... (y_n x))
  TermPtr body = p.lhs;
  for (std::size_t i = 1; i <= n; ++i) {
    TermPtr yi = Term::bound(static_cast<int>(1 + n - i));
    body = Term::app(body, Term::app(yi, Term::bound(0)));
  }
  std::vector<TypePtr> binders;
  for (const auto& alpha : p.unknown_types)
    binders.push_back(Type::arrow(Type::base(), alpha));
  binders.push_back(Type::base());
  TermPtr lhs = wrap_lambdas(binders, body);
  TermPtr rhs = Term::lam(Type::base(), p.rhs, "x");

  out.problem = make_problem({}, lhs, rhs);
  return out;
}

namespace {

MatchVerdict verify_solved(const MatchingProblem& p,
                           std::vector<TermPtr> solution, int bound) {
  TermPtr applied = Term::apply(p.lhs, solution);
  if (!beta_eta_eq(p.ctx, applied, p.rhs))
    throw error("Internal", "candidate solution failed re-verification");
  MatchVerdict v;
  v.solution = std::move(solution);
  v.bound = bound;
  return v;
}

// Iterates index tuples over the given sizes, coordinate 0 fastest,
// ordered by total weight. `weights[i][j]` is the weight of choice j in
// coordinate i.
void for_each_tuple_by_weight(
    const std::vector<std::vector<int>>& weights, std::uint64_t max_tuples,
    const std::function<bool(const std::vector<std::size_t>&)>& fn) {
  std::size_t n = weights.size();
  std::vector<std::size_t> pick(n, 0);
  int min_total = 0, max_total = 0;
  for (const auto& w : weights) {
    if (w.empty()) return;
    min_total += *std::min_element(w.begin(), w.end());
    max_total += *std::max_element(w.begin(), w.end());
  }
  std::uint64_t tried = 0;
  for (int target = min_total; target <= max_total; ++target) {
    std::fill(pick.begin(), pick.end(), 0);
    for (;;) {
      int total = 0;
      for (std::size_t i = 0; i < n; ++i) total += weights[i][pick[i]];
      if (total == target) {
        if (++tried > max_tuples) return;
        if (!fn(pick)) return;
      }
      std::size_t i = 0;
      while (i < n && ++pick[i] == weights[i].size()) {
        pick[i] = 0;
        ++i;
      }
      if (i == n) break;
    }
    if (n == 0) break;  // single empty tuple
  }
}

}  // namespace

MatchVerdict match_bruteforce(const MatchingProblem& p,
                              EnumerationBudget budget) {
  if (!problem_closed(p)) {
    ClosedProblem cp = close_problem(p);
    MatchVerdict v = match_bruteforce(cp.problem, budget);
    if (v.solved()) v.solution = cp.reopen(*v.solution);
    return v;
  }

  MatchVerdict verdict;
  verdict.bound = budget.max_length;
  std::size_t n = p.unknown_types.size();
  if (n == 0) {
    if (beta_eta_eq({}, p.lhs, p.rhs)) {
      verdict.solution = std::vector<TermPtr>{};
    } else {
      verdict.exhaustive = true;
    }
    return verdict;
  }

  std::vector<std::vector<EtaLongForm>> candidates;
  std::vector<std::vector<int>> weights;
  Context empty;
  for (const auto& alpha : p.unknown_types) {
    std::vector<EtaLongForm> terms;
    for_each_normal_term(empty, alpha, budget, [&](const EtaLongForm& f) {
      terms.push_back(f);
      return true;
    });
    std::vector<int> w;
    for (const auto& t : terms) w.push_back(term_length_raw(t.term()));
    candidates.push_back(std::move(terms));
    weights.push_back(std::move(w));
  }

  std::optional<std::vector<TermPtr>> found;
  for_each_tuple_by_weight(
      weights, budget.max_count, [&](const std::vector<std::size_t>& pick) {
        std::vector<TermPtr> tuple;
        for (std::size_t i = 0; i < n; ++i)
          tuple.push_back(candidates[i][pick[i]].term());
        if (beta_eta_eq({}, Term::apply(p.lhs, tuple), p.rhs)) {
          found = std::move(tuple);
          return false;
        }
        return true;
      });
  if (found) return verify_solved(p, *found, budget.max_length);
  return verdict;
}

MatchVerdict match_semantic(const MatchingProblem& p, EnumerationBudget budget,
                            Exec exec) {
  if (!problem_closed(p)) {
    ClosedProblem cp = close_problem(p);
    MatchVerdict v = match_semantic(cp.problem, budget, exec);
    if (v.solved()) {
      v.solution = cp.reopen(*v.solution);
      return verify_solved(p, *v.solution, v.bound);
    }
    return v;
  }

  StatmanBundle bundle = build_finite_model(p.rhs, p.rhs_type, budget);
  const Model& m = bundle.model;
  MatchVerdict verdict;
  verdict.bound = budget.max_length;

  std::size_t n = p.unknown_types.size();
  if (n == 0) {
    if (decide_eq(bundle, p.lhs, exec))
      return verify_solved(p, {}, budget.max_length);
    verdict.exhaustive = true;
    return verdict;
  }

  // Interpret b and the applied matrix nf(a y1 ... yn) under the Statman
  // assignment extended at fresh argument variables.
  Context ctx = bundle.separators.context;
  std::vector<std::string> ys;
  TermPtr applied = p.lhs;
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = "y" + std::to_string(i + 1);
    ys.push_back(name);
    ctx.declare(name, p.unknown_types[i]);
    applied = Term::app(applied, Term::free(name));
  }
  TermPtr matrix = normalize(ctx, applied).term();
  Element b_value = interpret(m, ctx, bundle.assignment,
                              normalize(ctx, p.rhs).term(), exec);

  std::vector<bool> relevant(n);
  for (std::size_t i = 0; i < n; ++i)
    relevant[i] = occurs_free(matrix, ys[i]);

  // Candidate closed terms per coordinate (syntactic; interpretation is
  // paid lazily). The coordinates the matrix ignores only need a shortest
  // inhabitant.
  Context empty;
  std::vector<std::vector<EtaLongForm>> candidates;
  for (const auto& alpha : p.unknown_types) {
    std::vector<EtaLongForm> terms;
    for_each_normal_term(empty, alpha, budget, [&](const EtaLongForm& f) {
      terms.push_back(f);
      return true;
    });
    candidates.push_back(std::move(terms));
  }

  bool all_irrelevant_realizable = true;
  for (std::size_t i = 0; i < n; ++i)
    if (!relevant[i] && candidates[i].empty()) all_irrelevant_realizable = false;

  auto matrix_value = [&](const std::vector<std::optional<Element>>& tuple) {
    Assignment nu = bundle.assignment;
    for (std::size_t i = 0; i < n; ++i)
      if (tuple[i]) nu.emplace(ys[i], *tuple[i]);
    return interpret(m, ctx, nu, matrix, exec);
  };

  auto assemble = [&](const std::vector<std::optional<TermPtr>>& partial)
      -> std::optional<std::vector<TermPtr>> {
    std::vector<TermPtr> out;
    for (std::size_t i = 0; i < n; ++i) {
      if (partial[i]) {
        out.push_back(*partial[i]);
      } else {
        if (candidates[i].empty()) return std::nullopt;
        out.push_back(candidates[i].front().term());
      }
    }
    return out;
  };

  bool full_mode = true;
  for (std::size_t i = 0; i < n; ++i)
    if (relevant[i] && !space_enumerable(m, p.unknown_types[i]))
      full_mode = false;

  if (full_mode) {
    // Exhaustive walk of the relevant coordinate spaces; definable
    // elements are needed here to realize the satisfying tuples.
    std::vector<std::vector<std::pair<Element, TermPtr>>> witnesses(n);
    for (std::size_t i = 0; i < n; ++i)
      if (relevant[i])
        witnesses[i] = definable_elements(m, p.unknown_types[i], budget, exec);
    std::vector<std::size_t> rel_idx;
    std::vector<std::uint64_t> sizes;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (relevant[i]) {
        rel_idx.push_back(i);
        BigInt s = space_size(m, p.unknown_types[i]);
        std::uint64_t su = s.convert_to<std::uint64_t>();
        sizes.push_back(su);
        if (su != 0 && total > m.cap / su)
          throw model_too_large("relevant tuple space exceeds the cap");
        total *= su;
      }
    bool any_satisfying = false;
    std::vector<std::uint64_t> codes(rel_idx.size(), 0);
    for (std::uint64_t step = 0; step < total; ++step) {
      std::vector<std::optional<Element>> tuple(n);
      for (std::size_t r = 0; r < rel_idx.size(); ++r)
        tuple[rel_idx[r]] =
            Element{p.unknown_types[rel_idx[r]], BigInt(codes[r])};
      if (matrix_value(tuple) == b_value) {
        any_satisfying = true;
        std::vector<std::optional<TermPtr>> partial(n);
        bool definable = true;
        for (std::size_t r = 0; r < rel_idx.size(); ++r) {
          std::size_t i = rel_idx[r];
          bool hit = false;
          for (const auto& [e, w] : witnesses[i])
            if (e == *tuple[i]) {
              partial[i] = w;
              hit = true;
              break;
            }
          if (!hit) {
            definable = false;
            break;
          }
        }
        if (definable && all_irrelevant_realizable) {
          if (auto sol = assemble(partial))
            return verify_solved(p, *sol, budget.max_length);
        }
      }
      for (std::size_t r = 0; r < codes.size(); ++r) {
        if (++codes[r] < sizes[r]) break;
        codes[r] = 0;
      }
    }
    verdict.exhaustive = !any_satisfying;
    return verdict;
  }

  // Some relevant space is too large to sweep: scan tuples of definable
  // elements only, shortest tuples first, interpreting each candidate at
  // most once and only when a tuple reaches it. Sound for solving, never
  // a refutation.
  std::vector<std::size_t> rel_idx;
  std::vector<std::vector<int>> weights;
  std::vector<std::vector<std::optional<Element>>> interpreted(n);
  for (std::size_t i = 0; i < n; ++i)
    if (relevant[i]) {
      rel_idx.push_back(i);
      std::vector<int> w;
      for (const auto& f : candidates[i]) w.push_back(term_length_raw(f.term()));
      weights.push_back(std::move(w));
      interpreted[i].resize(candidates[i].size());
    }
  const Context closed_ctx;
  const Assignment no_vars;
  auto value_of = [&](std::size_t i, std::size_t j) -> const Element& {
    if (!interpreted[i][j])
      interpreted[i][j] =
          interpret(m, closed_ctx, no_vars, candidates[i][j].term(), exec);
    return *interpreted[i][j];
  };
  std::optional<std::vector<TermPtr>> found;
  for_each_tuple_by_weight(
      weights, budget.max_count, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::optional<Element>> tuple(n);
        std::vector<std::optional<TermPtr>> partial(n);
        for (std::size_t r = 0; r < rel_idx.size(); ++r) {
          std::size_t i = rel_idx[r];
          tuple[i] = value_of(i, pick[r]);
          partial[i] = candidates[i][pick[r]].term();
        }
        if (matrix_value(tuple) == b_value) {
          found = assemble(partial);
          if (found) return false;
        }
        return true;
      });
  if (found) return verify_solved(p, *found, budget.max_length);
  verdict.exhaustive = false;
  return verdict;
}

}  // namespace stlc
