#ifndef STLC_MATCHING_HPP
#define STLC_MATCHING_HPP

#include <optional>

#include "stlc/definability.hpp"
#include "stlc/enumerate.hpp"
#include "stlc/statman.hpp"

namespace stlc {

// A matching problem <a, b> with a : a1 -> ... -> an -> beta and b : beta;
// a solution is a tuple t1..tn with (a t1 ... tn) =betaeta b.
struct MatchingProblem {
  Context ctx;
  TermPtr lhs;  // a
  TermPtr rhs;  // b
  std::vector<TypePtr> unknown_types;
  TypePtr rhs_type;
};

MatchingProblem make_problem(const Context& ctx, const TermPtr& a,
                             const TermPtr& b);

// A problem transformed by one of the closure reductions, together with
// the data needed to map its solutions back to the original problem.
struct ClosedProblem {
  MatchingProblem problem;
  // Variables abstracted away by the reduction, in binder order.
  std::vector<std::pair<std::string, TypePtr>> closed_vars;
  enum class Kind { trivial, closed_terms, closed_solutions } kind =
      Kind::trivial;

  // Maps a solution of `problem` to a solution of the source problem.
  std::vector<TermPtr> reopen(const std::vector<TermPtr>& solution) const;
};

// Closes free variables of a and b (first closure reduction); solvability
// is preserved in both directions.
ClosedProblem close_problem(const MatchingProblem& p);

// For a problem with closed a, b: builds the problem whose closed
// solutions correspond to the (possibly open) solutions of the original.
ClosedProblem close_solutions(const MatchingProblem& p);

struct MatchVerdict {
  std::optional<std::vector<TermPtr>> solution;
  // Set when an unsolvable verdict is a genuine refutation (the semantic
  // tuple set was provably empty or fully refuted), not a budget timeout.
  bool exhaustive = false;
  int bound = 0;

  bool solved() const { return solution.has_value(); }
};

// Independent oracle: enumerates closed normal eta-long tuples by total
// length and tests each syntactically.
MatchVerdict match_bruteforce(const MatchingProblem& p,
                              EnumerationBudget budget = {});

// The semantic pipeline: interprets both sides in the finite model built
// for b, selects argument tuples matching the interpretation of b, and
// realizes them through the bounded definability search.
MatchVerdict match_semantic(const MatchingProblem& p,
                            EnumerationBudget budget = {},
                            Exec exec = Exec::parallel);

}  // namespace stlc

#endif
