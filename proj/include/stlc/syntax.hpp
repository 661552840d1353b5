#ifndef STLC_SYNTAX_HPP
#define STLC_SYNTAX_HPP

#include <string>

#include "stlc/term.hpp"

namespace stlc {

// Surface grammar:
//   type  ::= "i" | type "->" type | "(" type ")"        -> right-assoc
//   term  ::= ident | "\" ident ":" type "." term
//           | term term | "(" term ")" | "#" nat          application left-assoc
//   ident ::= [a-y][a-zA-Z0-9_]*                          z-prefix reserved
// "#n" is sugar for the Church numeral \x:i. \f:i->i. (f^n x).

struct ParseOptions {
  // Generated separator constants live in the z-namespace; user input is
  // rejected there unless this is set (tests and internal round-trips).
  bool allow_reserved = false;
};

TypePtr parse_type(const std::string& text);
TermPtr parse_term(const std::string& text, const Context& ctx = {},
                   ParseOptions opts = {});
Context parse_context(const std::string& text, ParseOptions opts = {});

bool is_reserved_name(const std::string& name);

// Church numeral \x:i. \f:i->i. (f^n x).
TermPtr church(unsigned n);

std::string print_term(const TermPtr& t, const Context& ctx = {});

}  // namespace stlc

#endif
