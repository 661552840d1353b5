#ifndef STLC_STATMAN_HPP
#define STLC_STATMAN_HPP

#include <optional>

#include "stlc/enumerate.hpp"
#include "stlc/semantics.hpp"

namespace stlc {

// Draws fresh separator constants from the reserved z-namespace and keeps
// their types. Probe variables are shared by arity ("z0" for the nullary
// probe, "zp<p>" for arity p >= 1); pairwise-separator constants come from
// a monotone counter ("z1", "z2", ...).
class SeparatorNames {
 public:
  // Probe z_p of type i -> ... -> i -> i with p arguments.
  TermPtr probe(int arity);
  // Fresh constant of the given type.
  TermPtr fresh(const TypePtr& type);
  const Context& context() const { return ctx_; }
  void absorb(const SeparatorNames& other);

 private:
  Context ctx_;
  int counter_ = 1;
};

// The separating terms w_1..w_p for a subject term, all of type
// subject_type -> i, with free variables of order at most two.
struct SeparatorSet {
  std::vector<TermPtr> separators;
  Context context;
  TypePtr subject_type;
};

// The finite base of the per-term model: representatives of the classes
// that survive the equational collapse, plus a distinguished bottom class
// for everything else.
struct QuotientBase {
  std::vector<TermPtr> allowed;  // subterm-closed, duplicate-free
  std::optional<TermPtr> bottom_rep;
  Context context;

  std::uint64_t cardinality() const { return allowed.size() + 1; }
  BigInt bottom_code() const { return BigInt(allowed.size()); }
};

// The probe term c_alpha: fully applies its argument variables and feeds
// the results to the arity-matched probe constant.
TermPtr build_c(const TypePtr& type, SeparatorNames& names);

// w = \x:alpha. (x c_a1 ... c_an): separates terms of distinct length.
TermPtr length_separator(const TypePtr& type, SeparatorNames& names);

// Arguments c_1..c_n with (t c*) != (u c*) for distinct closed normal
// eta-long t, u of the same type. Throws same_term when t == u.
std::vector<TermPtr> pair_separator_args(const EtaLongForm& t,
                                         const EtaLongForm& u,
                                         SeparatorNames& names);

// Wraps the arguments as w = \x:alpha. (x c_1 ... c_n).
TermPtr pair_separator(const EtaLongForm& t, const EtaLongForm& u,
                       SeparatorNames& names);

// The length separator plus one pair separator per same-length rival of
// the canonical form of `t`.
SeparatorSet separator_set(const TermPtr& t, const TypePtr& type,
                           EnumerationBudget budget = {});

// Base classes: the iota-subterms of the normal forms of the (w_i t).
QuotientBase quotient_base(const TermPtr& t, const SeparatorSet& ws,
                           EnumerationBudget budget = {});

// The =betaetaE class of a base-typed term over base.context, as an
// element of the quotient space.
Element class_of(const QuotientBase& base, const TermPtr& s);

// The section-4 assignment over base.context (all variables of order <= 2).
Assignment statman_assignment(const QuotientBase& base, const Model& m);

// The full decision apparatus of the finite completeness theorem.
struct StatmanBundle {
  TermPtr subject;  // canonical eta-long normal form
  TypePtr subject_type;
  Model model;
  SeparatorSet separators;
  QuotientBase base;
  Assignment assignment;
};

StatmanBundle build_finite_model(const TermPtr& t, const TypePtr& type,
                                 EnumerationBudget budget = {},
                                 std::uint64_t cap = Model{}.cap);

// t == u in the bundle's model, which by the theorem is beta-eta-equality.
bool decide_eq(const StatmanBundle& bundle, const TermPtr& u,
               Exec exec = Exec::parallel);

// The simpler construction for subjects of order <= 3: the context is the
// argument variables themselves and the only "separator" is application
// to them.
struct Order3Bundle {
  TermPtr subject;
  TypePtr subject_type;
  Model model;
  QuotientBase base;
  Assignment assignment;
  std::vector<TermPtr> argument_vars;
};

Order3Bundle build_model_order3(const TermPtr& t, const TypePtr& type,
                                EnumerationBudget budget = {},
                                std::uint64_t cap = Model{}.cap);

bool decide_eq(const Order3Bundle& bundle, const TermPtr& u,
               Exec exec = Exec::parallel);

}  // namespace stlc

#endif
