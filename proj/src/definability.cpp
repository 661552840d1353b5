#include "stlc/definability.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stlc/error.hpp"

namespace stlc {

namespace {

std::vector<EtaLongForm> candidates(const TypePtr& type,
                                    EnumerationBudget budget) {
  std::vector<EtaLongForm> out;
  Context empty;
  for_each_normal_term(empty, type, budget, [&](const EtaLongForm& f) {
    out.push_back(f);
    return true;
  });
  return out;
}

// Deterministic first hit: smallest enumeration index wins regardless of
// evaluation order.
std::optional<std::size_t> scan(const Model& m,
                                const std::vector<EtaLongForm>& terms,
                                const Element& target, Exec exec) {
  const Context ctx;
  const Assignment empty;
  std::size_t best = terms.size();
#ifdef _OPENMP
  if (exec == Exec::parallel && terms.size() > 1) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(terms.size()); ++i) {
      std::size_t idx = static_cast<std::size_t>(i);
      if (failure || idx >= best) continue;
      try {
        Element v =
            interpret(m, ctx, empty, terms[idx].term(), Exec::serial);
        if (v == target) {
#pragma omp critical
          best = std::min(best, idx);
        }
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else
#endif
  {
    for (std::size_t idx = 0; idx < terms.size(); ++idx) {
      Element v = interpret(m, ctx, empty, terms[idx].term(), exec);
      if (v == target) {
        best = idx;
        break;
      }
    }
  }
  if (best == terms.size()) return std::nullopt;
  return best;
}

}  // namespace

SearchOutcome is_definable(const Model& m, const TypePtr& type,
                           const Element& f, EnumerationBudget budget,
                           Exec exec) {
  if (!equal(f.type, type))
    throw type_mismatch("element type does not match the search type");
  if (f.code < 0 || f.code >= space_size_unbounded(m, type))
    throw model_too_large("element code is outside its space");
  std::vector<EtaLongForm> terms = candidates(type, budget);
  SearchOutcome out;
  out.exhausted_length = budget.max_length;
  if (auto idx = scan(m, terms, f, exec)) {
    out.witness = terms[*idx].term();
    // Witness soundness is asserted on every return.
    Element check = interpret(m, {}, {}, *out.witness, exec);
    if (!(check == f)) throw error("Internal", "witness failed re-evaluation");
  }
  return out;
}

std::vector<std::pair<Element, TermPtr>> definable_elements(
    const Model& m, const TypePtr& type, EnumerationBudget budget, Exec exec) {
  std::vector<EtaLongForm> terms = candidates(type, budget);
  const Context ctx;
  const Assignment empty;
  std::vector<Element> values(terms.size());
#ifdef _OPENMP
  if (exec == Exec::parallel && terms.size() > 1) {
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < static_cast<long long>(terms.size()); ++i) {
      if (failure) continue;
      try {
        values[static_cast<std::size_t>(i)] = interpret(
            m, ctx, empty, terms[static_cast<std::size_t>(i)].term(),
            Exec::serial);
      } catch (...) {
#pragma omp critical
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);
  } else
#endif
  {
    for (std::size_t i = 0; i < terms.size(); ++i)
      values[i] = interpret(m, ctx, empty, terms[i].term(), exec);
  }
  // Keep the first witness per element; earlier terms are shorter.
  std::vector<std::pair<Element, TermPtr>> out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool seen = false;
    for (const auto& [e, w] : out)
      if (e == values[i]) {
        seen = true;
        break;
      }
    if (!seen) out.emplace_back(values[i], terms[i].term());
  }
  return out;
}

}  // namespace stlc
