#ifndef STLC_SEMANTICS_HPP
#define STLC_SEMANTICS_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "stlc/term.hpp"

namespace stlc {

using BigInt = boost::multiprecision::cpp_int;

// A finite standard model is determined by the base cardinality; function
// spaces are full set-theoretic exponents. `cap` bounds the size of any
// space that must be iterated (tabulation domains, assignment products).
struct Model {
  std::uint64_t base_size = 2;
  std::uint64_t cap = std::uint64_t{1} << 20;
};

// An element of M_type, coded as a natural number below the space size.
// A function element's code is the mixed-radix encoding of its value
// table: code = sum_i table[i] * |M_cod|^i, indexed by argument code.
struct Element {
  TypePtr type;
  BigInt code;
};

bool operator==(const Element& a, const Element& b);
inline bool operator!=(const Element& a, const Element& b) { return !(a == b); }

// Assignment from context variables to elements.
using Assignment = std::map<std::string, Element>;

// Serial and OpenMP execution of the tabulation loops. Results are
// identical; the parallel path only reorders independent work.
enum class Exec { serial, parallel };

// |M_type| by the exponent recursion; throws model_too_large above cap.
BigInt space_size(const Model& m, const TypePtr& type);

// Same recursion without the cap check (sizes can exceed the cap as long
// as nothing has to iterate over them).
BigInt space_size_unbounded(const Model& m, const TypePtr& type);

// True when every element of M_type can be enumerated under the cap.
bool space_enumerable(const Model& m, const TypePtr& type);

// Value-table view of a function element.
std::vector<BigInt> decode_table(const Model& m, const TypePtr& fn_type,
                                 const BigInt& code);
BigInt encode_table(const Model& m, const TypePtr& fn_type,
                    const std::vector<BigInt>& table);

Element apply(const Model& m, const Element& f, const Element& a);

// Interpretation of a well-typed term under `assignment` (which must cover
// the free variables used). Lambdas tabulate their domain space, which
// must fit under the cap.
Element interpret(const Model& m, const Context& ctx,
                  const Assignment& assignment, const TermPtr& t,
                  Exec exec = Exec::parallel);

// Truth in the model: equal interpretations under every assignment over
// `ctx`. For closed terms this is a single evaluation.
bool models_eq(const Model& m, const Context& ctx, const TermPtr& t,
               const TermPtr& u, Exec exec = Exec::parallel);

// Enumerates all assignments over ctx in mixed-radix code order (first
// context variable fastest). The total count must fit under the cap.
void for_each_assignment(const Model& m, const Context& ctx,
                         const std::function<bool(const Assignment&)>& fn);

}  // namespace stlc

#endif
