#include "stlc/enumerate.hpp"

#include <algorithm>

#include "stlc/error.hpp"
#include "stlc/typecheck.hpp"

namespace stlc {

// Friend of EtaLongForm: generated terms are eta-long by construction.
class TermEnumerator {
 public:
  TermEnumerator(const Context& ctx, EnumerationBudget budget, bool truncate)
      : ctx_(ctx), budget_(budget), truncate_(truncate) {}

  std::vector<TermPtr> run(const TypePtr& type) {
    std::vector<TypePtr> scope;
    std::vector<TermPtr> out = generate(scope, type, budget_.max_length);
    std::stable_sort(out.begin(), out.end(),
                     [](const TermPtr& a, const TermPtr& b) {
                       int la = term_length_raw(a), lb = term_length_raw(b);
                       if (la != lb) return la < lb;
                       return compare(a, b) < 0;
                     });
    return out;
  }

  static EtaLongForm certify(TermPtr t, TypePtr type) {
    return EtaLongForm(std::move(t), std::move(type));
  }

  bool overflowed() const { return overflowed_; }

 private:
  // Normal eta-long terms of `type` under the binder scope, length bound L.
  // Every variable in scope ends in the base type, so any of them can head
  // the spine when fully applied.
  std::vector<TermPtr> generate(std::vector<TypePtr>& scope,
                                const TypePtr& type, int max_len) {
    DepthGuard guard(depth_);
    std::vector<TermPtr> out;
    if (max_len < 1) return out;
    std::vector<TypePtr> binders = decompose(type);
    for (const auto& b : binders) scope.push_back(b);

    // Candidate heads: all context variables, then all binders in scope.
    struct Head {
      TermPtr var;
      std::vector<TypePtr> arg_types;
    };
    std::vector<Head> heads;
    for (const auto& [name, ty] : ctx_.vars())
      heads.push_back({Term::free(name), decompose(ty)});
    for (std::size_t i = 0; i < scope.size(); ++i) {
      int index = static_cast<int>(scope.size() - 1 - i);
      heads.push_back({Term::bound(index), decompose(scope[i])});
    }

    for (const auto& head : heads) {
      if (head.arg_types.empty()) {
        emit(out, wrap(binders, head.var));
        continue;
      }
      if (max_len < 2) continue;
      std::vector<std::vector<TermPtr>> choices;
      bool empty = false;
      for (const auto& at : head.arg_types) {
        choices.push_back(generate(scope, at, max_len - 1));
        if (choices.back().empty()) {
          empty = true;
          break;
        }
      }
      if (empty) continue;
      std::vector<std::size_t> pick(choices.size(), 0);
      for (;;) {
        TermPtr t = head.var;
        for (std::size_t j = 0; j < choices.size(); ++j)
          t = Term::app(t, choices[j][pick[j]]);
        emit(out, wrap(binders, t));
        if (stop_) break;
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == choices[j].size()) {
          pick[j] = 0;
          ++j;
        }
        if (j == pick.size()) break;
      }
      if (stop_) break;
    }

    for (std::size_t i = 0; i < binders.size(); ++i) scope.pop_back();
    return out;
  }

  static TermPtr wrap(const std::vector<TypePtr>& binders, TermPtr body) {
    return wrap_lambdas(binders, std::move(body));
  }

  struct DepthGuard {
    explicit DepthGuard(int& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
    int& depth;
  };

  void emit(std::vector<TermPtr>& out, TermPtr t) {
    if (stop_) return;
    // The budget caps delivered results; argument candidates built by the
    // inner recursion are working material, not output.
    if (depth_ > 1) {
      out.push_back(std::move(t));
      return;
    }
    if (produced_ >= budget_.max_count) {
      overflowed_ = true;
      if (!truncate_)
        throw resource_exceeded("enumeration exceeded max_count = " +
                                std::to_string(budget_.max_count));
      stop_ = true;
      return;
    }
    ++produced_;
    out.push_back(std::move(t));
  }

  const Context& ctx_;
  EnumerationBudget budget_;
  bool truncate_;
  int depth_ = 0;
  bool stop_ = false;
  bool overflowed_ = false;
  std::uint64_t produced_ = 0;
};

std::vector<EtaLongForm> enumerate_normal_terms(const Context& ctx,
                                                const TypePtr& type,
                                                EnumerationBudget budget) {
  TermEnumerator en(ctx, budget, /*truncate=*/false);
  std::vector<EtaLongForm> out;
  for (auto& t : en.run(type))
    out.push_back(TermEnumerator::certify(std::move(t), type));
  return out;
}

std::vector<EtaLongForm> enumerate_same_length(const TypePtr& type, int length,
                                               EnumerationBudget budget) {
  budget.max_length = length;
  Context empty;
  TermEnumerator en(empty, budget, /*truncate=*/false);
  std::vector<EtaLongForm> out;
  for (auto& t : en.run(type))
    if (term_length_raw(t) == length)
      out.push_back(TermEnumerator::certify(std::move(t), type));
  return out;
}

void for_each_normal_term(const Context& ctx, const TypePtr& type,
                          EnumerationBudget budget,
                          const std::function<bool(const EtaLongForm&)>& fn) {
  TermEnumerator en(ctx, budget, /*truncate=*/true);
  for (auto& t : en.run(type)) {
    EtaLongForm f = TermEnumerator::certify(std::move(t), type);
    if (!fn(f)) return;
  }
}

namespace {

void walk(const TermPtr& t, const Context& ctx,
          std::vector<TypePtr>& binders, std::vector<TermPtr>& out) {
  switch (t->kind()) {
    case Term::Kind::lam:
      binders.push_back(t->binder());
      walk(t->body(), ctx, binders, out);
      binders.pop_back();
      break;
    case Term::Kind::app:
      walk(t->fun(), ctx, binders, out);
      walk(t->arg(), ctx, binders, out);
      break;
    default:
      break;
  }
  // Innermost first: record after visiting children. Subterms referencing
  // a locally bound variable are not terms of the ambient context.
  if (has_dangling_above(t, 0)) return;
  TypePtr ty;
  try {
    ty = infer_type(ctx, binders, t);
  } catch (const ill_typed&) {
    return;  // free variable outside ctx
  }
  if (!ty->is_base()) return;
  for (const auto& seen : out)
    if (alpha_equal(seen, t)) return;
  out.push_back(t);
}

}  // namespace

std::vector<TermPtr> iota_subterms(const NormalForm& t, const Context& ctx) {
  std::vector<TermPtr> out;
  std::vector<TypePtr> binders;
  walk(t.term(), ctx, binders, out);
  return out;
}

}  // namespace stlc
