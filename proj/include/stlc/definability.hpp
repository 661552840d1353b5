#ifndef STLC_DEFINABILITY_HPP
#define STLC_DEFINABILITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stlc/enumerate.hpp"
#include "stlc/semantics.hpp"

namespace stlc {

// Outcome of the bounded definability search. The search is a
// semi-decision: exhausting the budget says nothing about the element, so
// there is no negative verdict.
struct SearchOutcome {
  std::optional<TermPtr> witness;
  int exhausted_length = 0;

  bool definable() const { return witness.has_value(); }
};

// Scans closed normal eta-long terms of `type` in (length, lexicographic)
// order and returns the first one interpreting to `f`.
SearchOutcome is_definable(const Model& m, const TypePtr& type,
                           const Element& f, EnumerationBudget budget = {},
                           Exec exec = Exec::parallel);

// All elements reached by closed terms within the budget, paired with a
// shortest witness each, in discovery order.
std::vector<std::pair<Element, TermPtr>> definable_elements(
    const Model& m, const TypePtr& type, EnumerationBudget budget = {},
    Exec exec = Exec::parallel);

}  // namespace stlc

#endif
