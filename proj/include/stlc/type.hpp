#ifndef STLC_TYPE_HPP
#define STLC_TYPE_HPP

#include <memory>
#include <string>
#include <vector>

namespace stlc {

class Type;
using TypePtr = std::shared_ptr<const Type>;

// A simple type: the base type or an arrow. Immutable, shared.
class Type {
 public:
  static const TypePtr& base();
  static TypePtr arrow(TypePtr domain, TypePtr codomain);

  // domain -> codomain, right-nested over `domains`.
  static TypePtr arrows(const std::vector<TypePtr>& domains, TypePtr result);

  bool is_base() const { return !domain_; }
  bool is_arrow() const { return domain_ != nullptr; }
  const TypePtr& domain() const { return domain_; }
  const TypePtr& codomain() const { return codomain_; }

 private:
  Type() = default;
  Type(TypePtr d, TypePtr c) : domain_(std::move(d)), codomain_(std::move(c)) {}
  TypePtr domain_;    // null for the base type
  TypePtr codomain_;  // null for the base type
};

int compare(const Type& a, const Type& b);
bool operator==(const Type& a, const Type& b);
inline bool operator!=(const Type& a, const Type& b) { return !(a == b); }
bool equal(const TypePtr& a, const TypePtr& b);

// o(base) = 1, o(a->b) = max(1+o(a), o(b)).
int type_order(const TypePtr& t);

// The unique decomposition b1 -> ... -> bn -> base.
std::vector<TypePtr> decompose(const TypePtr& t);

// Number of arguments in the decomposition.
int arity(const TypePtr& t);

std::string to_string(const TypePtr& t);

}  // namespace stlc

#endif
