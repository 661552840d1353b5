#ifndef STLC_TERM_HPP
#define STLC_TERM_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "stlc/type.hpp"

namespace stlc {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// A lambda term with nameless (de Bruijn) binders. Bound occurrences are
// indices into the enclosing binder stack; free variables are named. With
// this representation alpha-equivalence is plain structural equality.
class Term {
 public:
  enum class Kind { bound, free, app, lam };

  static TermPtr bound(int index);
  static TermPtr free(std::string name);
  static TermPtr app(TermPtr fun, TermPtr arg);
  // `hint` is a printing hint only; it never affects equality.
  static TermPtr lam(TypePtr binder, TermPtr body, std::string hint = "");

  // Left-nested application (f a1 ... an).
  static TermPtr apply(TermPtr fun, const std::vector<TermPtr>& args);

  Kind kind() const { return kind_; }
  bool is_bound() const { return kind_ == Kind::bound; }
  bool is_free() const { return kind_ == Kind::free; }
  bool is_app() const { return kind_ == Kind::app; }
  bool is_lam() const { return kind_ == Kind::lam; }

  int index() const { return index_; }               // bound
  const std::string& name() const { return name_; }  // free
  const TermPtr& fun() const { return fun_; }        // app
  const TermPtr& arg() const { return arg_; }        // app
  const TypePtr& binder() const { return binder_; }  // lam
  const TermPtr& body() const { return body_; }      // lam
  const std::string& hint() const { return name_; }  // lam

 private:
  Term() = default;
  Kind kind_ = Kind::bound;
  int index_ = 0;
  std::string name_;  // free-variable name, or binder hint for lambdas
  TermPtr fun_, arg_;
  TypePtr binder_;
  TermPtr body_;
};

// Total order on terms; hints are ignored, so 0 means alpha-equivalent.
int compare(const Term& a, const Term& b);
inline int compare(const TermPtr& a, const TermPtr& b) {
  return compare(*a, *b);
}
bool operator==(const Term& a, const Term& b);
inline bool operator!=(const Term& a, const Term& b) { return !(a == b); }
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// Spine view of `t` as (head e1 ... en) where head is not an application.
struct Spine {
  TermPtr head;
  std::vector<TermPtr> args;
};
Spine spine(TermPtr t);

// Strips all leading lambdas; binder types are appended to `binders`.
TermPtr strip_lambdas(TermPtr t, std::vector<TypePtr>& binders);

// Wraps `t` with lambdas over `binders`, outermost first.
TermPtr wrap_lambdas(const std::vector<TypePtr>& binders, TermPtr t);

// True when `t` references a binder outside itself at or above `cutoff`.
bool has_dangling_above(const TermPtr& t, int cutoff);
inline bool is_locally_closed(const TermPtr& t) {
  return !has_dangling_above(t, 0);
}

bool occurs_free(const TermPtr& t, const std::string& name);
void collect_free_names(const TermPtr& t, std::vector<std::string>& out);

// An ordered variable context. Insertion order is preserved; duplicate
// names with a different type are rejected.
class Context {
 public:
  Context() = default;
  Context(std::initializer_list<std::pair<std::string, TypePtr>> vars);

  void declare(const std::string& name, TypePtr type);
  std::optional<TypePtr> lookup(const std::string& name) const;
  bool contains(const std::string& name) const { return lookup(name).has_value(); }

  const std::vector<std::pair<std::string, TypePtr>>& vars() const {
    return vars_;
  }
  std::size_t size() const { return vars_.size(); }
  bool empty() const { return vars_.empty(); }

  // Union preserving left operand's order; conflicting types are an error.
  static Context merged(const Context& a, const Context& b);

 private:
  std::vector<std::pair<std::string, TypePtr>> vars_;
};

}  // namespace stlc

#endif
