#ifndef STLC_ENUMERATE_HPP
#define STLC_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "stlc/rewrite.hpp"
#include "stlc/term.hpp"

namespace stlc {

struct EnumerationBudget {
  int max_length = 8;
  std::uint64_t max_count = 1'000'000;
};

// All beta-eta-normal eta-long terms of type `type` over `ctx` with
// length <= budget.max_length, each exactly once up to alpha-equivalence,
// ordered by length then canonical lexicographic order. Producing more
// than budget.max_count terms raises resource_exceeded.
std::vector<EtaLongForm> enumerate_normal_terms(const Context& ctx,
                                                const TypePtr& type,
                                                EnumerationBudget budget);

// Exactly the closed normal eta-long terms of `type` with length == length.
std::vector<EtaLongForm> enumerate_same_length(const TypePtr& type, int length,
                                               EnumerationBudget budget);

// Streaming variant for semi-decision searches: the budget is a search
// horizon, not a hard error. Terms arrive in (length, lexicographic)
// order; the callback returns false to stop.
void for_each_normal_term(const Context& ctx, const TypePtr& type,
                          EnumerationBudget budget,
                          const std::function<bool(const EtaLongForm&)>& fn);

// All distinct base-typed subterms of a normal term that are well typed
// in `ctx` alone (no locally bound variables), innermost first.
std::vector<TermPtr> iota_subterms(const NormalForm& t, const Context& ctx);

}  // namespace stlc

#endif
