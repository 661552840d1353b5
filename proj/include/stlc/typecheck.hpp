#ifndef STLC_TYPECHECK_HPP
#define STLC_TYPECHECK_HPP

#include "stlc/term.hpp"

namespace stlc {

// The unique type of `t` under `ctx`; throws ill_typed when no typing
// derivation exists (unbound variable, domain mismatch, base-typed head
// applied to an argument).
TypePtr infer_type(const Context& ctx, const TermPtr& t);

// Variant used below a known binder stack (innermost last... innermost is
// index 0, so `binders` is outermost-first and index i looks up
// binders[binders.size()-1-i]).
TypePtr infer_type(const Context& ctx, const std::vector<TypePtr>& binders,
                   const TermPtr& t);

bool is_closed(const TermPtr& t);

}  // namespace stlc

#endif
