#ifndef STLC_REWRITE_HPP
#define STLC_REWRITE_HPP

#include <cstdint>

#include "stlc/term.hpp"

namespace stlc {

// Step budget for beta-reduction. Typed terms always normalize, but normal
// forms can be astronomically large; overruns raise resource_exceeded.
struct ReductionBudget {
  std::uint64_t max_steps = 1'000'000;
};

// A term certified beta-eta-normal. Only obtainable from `normalize` or an
// explicit checked cast.
class NormalForm {
 public:
  const TermPtr& term() const { return term_; }
  // Checked cast: verifies the absence of beta and eta redexes.
  static NormalForm check(TermPtr t);

 private:
  explicit NormalForm(TermPtr t) : term_(std::move(t)) {}
  TermPtr term_;
  friend NormalForm normalize(const Context&, const TermPtr&, ReductionBudget);
};

// A term certified normal eta-long at `type`.
class EtaLongForm {
 public:
  const TermPtr& term() const { return term_; }
  const TypePtr& type() const { return type_; }
  static EtaLongForm check(const Context& ctx, TermPtr t, TypePtr type);

 private:
  EtaLongForm(TermPtr t, TypePtr ty)
      : term_(std::move(t)), type_(std::move(ty)) {}
  TermPtr term_;
  TypePtr type_;
  friend EtaLongForm eta_long(const Context&, const NormalForm&,
                              const TypePtr&);
  friend class TermEnumerator;
};

// Renumbers dangling indices >= cutoff by `delta`.
TermPtr shift(const TermPtr& t, int delta, int cutoff = 0);

// Capture-avoiding substitution of the free variable `name` by `u`;
// `u` must be a well-formed standalone term.
TermPtr substitute(const TermPtr& t, const std::string& name, const TermPtr& u);

// Beta-reduction of a redex body: t[0 := u], lowering the freed indices.
TermPtr substitute_bound(const TermPtr& t, const TermPtr& u);

// The unique beta-eta-normal form of a well-typed term. Throws ill_typed
// when `t` does not typecheck under `ctx`.
NormalForm normalize(const Context& ctx, const TermPtr& t,
                     ReductionBudget budget = {});

bool is_beta_eta_normal(const TermPtr& t);
bool is_eta_long(const Context& ctx, const TermPtr& t, const TypePtr& type);

// The eta-long expansion of a normal term at `type`.
EtaLongForm eta_long(const Context& ctx, const NormalForm& t,
                     const TypePtr& type);

// Convenience: normalize then eta-expand at the inferred type.
EtaLongForm canonical_form(const Context& ctx, const TermPtr& t,
                           ReductionBudget budget = {});

// t and u must share a type under ctx.
bool beta_eta_eq(const Context& ctx, const TermPtr& t, const TermPtr& u,
                 ReductionBudget budget = {});

// |t| of a normal eta-long term: 1 + max over the head's arguments of the
// length of the re-abstracted argument, with max over nothing = 0.
int term_length(const EtaLongForm& t);

// Internal measure on raw eta-long syntax (prefix-insensitive).
int term_length_raw(const TermPtr& t);

}  // namespace stlc

#endif
