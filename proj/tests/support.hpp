#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "stlc/rewrite.hpp"
#include "stlc/semantics.hpp"
#include "stlc/term.hpp"

// Independent oracles and seeded generators shared by the suites. The
// reducer and the evaluator here deliberately re-derive their machinery
// from the definitions instead of calling into the library, so agreement
// is evidence rather than tautology.
namespace support {

struct Rng {
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(gen); }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(gen) < p;
  }
  std::mt19937_64 gen;
};

stlc::TypePtr random_type(Rng& rng, int max_depth);

// A random normal eta-long term of `type` over `ctx`; `depth` biases the
// size of application spines.
stlc::TermPtr random_term(const stlc::Context& ctx, const stlc::TypePtr& type,
                          Rng& rng, int depth);

// Injects meaning-preserving beta and eta redexes. With
// `base_redexes_only`, identity redexes are placed at base type only, so
// the result stays cheap to interpret in a finite model.
stlc::TermPtr obfuscate(const stlc::Context& ctx, const stlc::TermPtr& t,
                        Rng& rng, bool base_redexes_only = false);

// Applicative-order (innermost) beta normalization with its own shift and
// substitution code; the library normalizer is normal-order.
stlc::TermPtr alt_beta_normalize(const stlc::TermPtr& t,
                                 int max_steps = 1'000'000);

// Explicit-table semantics: functions are vectors indexed by the argument
// element's code, built without the library's mixed-radix encoder.
struct NaiveValue {
  long base = 0;
  std::vector<NaiveValue> table;
  bool is_fun = false;
};

// All values of a (small) type at the given base cardinality.
std::vector<NaiveValue> naive_space(std::uint64_t base,
                                    const stlc::TypePtr& type);

NaiveValue naive_eval(std::uint64_t base, const stlc::Context& ctx,
                      const std::vector<std::pair<std::string, NaiveValue>>& frees,
                      const stlc::TermPtr& t);

// The code of a naive value under the mixed-radix convention, re-derived
// here for cross-checking Element codes.
stlc::BigInt naive_code(std::uint64_t base, const stlc::TypePtr& type,
                        const NaiveValue& v);

// Generate-and-filter enumeration oracle: every raw de Bruijn term of at
// most `max_nodes` AST nodes over the annotation set, filtered down to the
// closed well-typed normal eta-long terms of `type` with length <= max_len.
std::vector<stlc::TermPtr> oracle_enumerate(const stlc::TypePtr& type,
                                            int max_len, int max_nodes);

}  // namespace support

#endif
