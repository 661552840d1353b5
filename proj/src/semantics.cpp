#include "stlc/semantics.hpp"

#include <exception>
#include <tuple>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stlc/error.hpp"
#include "stlc/typecheck.hpp"

namespace stlc {

namespace {

// Bit-size guard for code magnitudes: beyond this the numbers themselves
// stop being workable, independent of the iteration cap.
constexpr std::uint64_t kMaxCodeBits = std::uint64_t{1} << 26;

BigInt size_rec(const Model& m, const TypePtr& type) {
  if (m.base_size == 0) throw model_too_large("base_size must be >= 1");
  if (type->is_base()) return BigInt(m.base_size);
  BigInt dom = size_rec(m, type->domain());
  BigInt cod = size_rec(m, type->codomain());
  if (dom > kMaxCodeBits)
    throw model_too_large("space exponent for " + to_string(type) +
                          " is not representable");
  std::uint64_t exponent = dom.convert_to<std::uint64_t>();
  std::uint64_t cod_bits = cod == 1 ? 1 : msb(cod) + 1;
  if (exponent > 0 && cod_bits > kMaxCodeBits / exponent)
    throw model_too_large("space size for " + to_string(type) +
                          " is not representable");
  return pow(cod, static_cast<unsigned>(exponent));
}

// Space sizes are pure in (base_size, type); the towers of pow() calls
// dominate interpretation cost without this memo.
const BigInt& cached_size(const Model& m, const TypePtr& type) {
  thread_local std::map<std::pair<std::uint64_t, std::string>, BigInt> cache;
  if (cache.size() > 4096) cache.clear();
  auto key = std::make_pair(m.base_size, to_string(type));
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), size_rec(m, type)).first;
  return it->second;
}

std::uint64_t iteration_size(const Model& m, const TypePtr& type) {
  const BigInt& s = cached_size(m, type);
  if (s > m.cap)
    throw model_too_large("space of " + to_string(type) + " has " +
                          s.str() + " elements, above the cap of " +
                          std::to_string(m.cap));
  return s.convert_to<std::uint64_t>();
}

}  // namespace

bool operator==(const Element& a, const Element& b) {
  return equal(a.type, b.type) && a.code == b.code;
}

BigInt space_size(const Model& m, const TypePtr& type) {
  BigInt s = size_rec(m, type);
  if (s > m.cap)
    throw model_too_large("space of " + to_string(type) + " has " + s.str() +
                          " elements, above the cap of " +
                          std::to_string(m.cap));
  return s;
}

BigInt space_size_unbounded(const Model& m, const TypePtr& type) {
  return size_rec(m, type);
}

bool space_enumerable(const Model& m, const TypePtr& type) {
  try {
    return size_rec(m, type) <= m.cap;
  } catch (const model_too_large&) {
    return false;
  }
}

std::vector<BigInt> decode_table(const Model& m, const TypePtr& fn_type,
                                 const BigInt& code) {
  if (!fn_type->is_arrow())
    throw type_mismatch("decode_table needs an arrow type");
  std::uint64_t dom = iteration_size(m, fn_type->domain());
  const BigInt& cod = cached_size(m, fn_type->codomain());
  std::vector<BigInt> table(dom);
  BigInt rest = code;
  for (std::uint64_t i = 0; i < dom; ++i) {
    table[i] = rest % cod;
    rest /= cod;
  }
  return table;
}

BigInt encode_table(const Model& m, const TypePtr& fn_type,
                    const std::vector<BigInt>& table) {
  if (!fn_type->is_arrow())
    throw type_mismatch("encode_table needs an arrow type");
  const BigInt& cod = cached_size(m, fn_type->codomain());
  BigInt code = 0;
  for (std::size_t i = table.size(); i-- > 0;) code = code * cod + table[i];
  return code;
}

namespace {

// Function elements applied more than once amortize far better through a
// decoded table (one divmod chain) than through per-entry pow/div.
const std::vector<BigInt>& cached_table(const Model& m, const TypePtr& fn_type,
                                        const BigInt& code) {
  thread_local std::map<std::tuple<std::uint64_t, std::string, BigInt>,
                        std::vector<BigInt>>
      cache;
  if (cache.size() > 4096) cache.clear();
  auto key = std::make_tuple(m.base_size, to_string(fn_type), code);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(std::move(key), decode_table(m, fn_type, code)).first;
  return it->second;
}

}  // namespace

Element apply(const Model& m, const Element& f, const Element& a) {
  if (!f.type->is_arrow())
    throw type_mismatch("applying a base-typed element");
  if (!equal(f.type->domain(), a.type))
    throw type_mismatch("element of type " + to_string(a.type) +
                        " fed to a function over " +
                        to_string(f.type->domain()));
  std::uint64_t index = a.code.convert_to<std::uint64_t>();
  if (cached_size(m, f.type->domain()) <= m.cap) {
    const std::vector<BigInt>& table = cached_table(m, f.type, f.code);
    return Element{f.type->codomain(), table[index]};
  }
  // Domain too large to decode: extract the single entry directly.
  const BigInt& cod = cached_size(m, f.type->codomain());
  BigInt entry = (f.code / pow(cod, static_cast<unsigned>(index))) % cod;
  return Element{f.type->codomain(), std::move(entry)};
}

namespace {

Element eval(const Model& m, const Context& ctx, const Assignment& assignment,
             std::vector<Element>& env, const TermPtr& t, Exec exec) {
  switch (t->kind()) {
    case Term::Kind::bound: {
      std::size_t i = static_cast<std::size_t>(t->index());
      if (i >= env.size()) throw ill_typed("dangling binder reference");
      return env[env.size() - 1 - i];
    }
    case Term::Kind::free: {
      auto it = assignment.find(t->name());
      if (it == assignment.end())
        throw ill_typed("no assignment for variable '" + t->name() + "'");
      return it->second;
    }
    case Term::Kind::app: {
      Element f = eval(m, ctx, assignment, env, t->fun(), exec);
      Element a = eval(m, ctx, assignment, env, t->arg(), exec);
      return apply(m, f, a);
    }
    case Term::Kind::lam: {
      const TypePtr& dom_type = t->binder();
      std::uint64_t dom = iteration_size(m, dom_type);
      std::vector<BigInt> table(dom);
      TypePtr cod_type;
#ifdef _OPENMP
      if (exec == Exec::parallel && dom >= 64) {
        std::exception_ptr failure;
        TypePtr cod_shared;
#pragma omp parallel
        {
          std::vector<Element> local_env;
#pragma omp for schedule(dynamic, 16)
          for (long long i = 0; i < static_cast<long long>(dom); ++i) {
            if (failure) continue;
            try {
              local_env = env;
              local_env.push_back(Element{dom_type, BigInt(i)});
              Element v =
                  eval(m, ctx, assignment, local_env, t->body(), Exec::serial);
              local_env.pop_back();
              table[static_cast<std::size_t>(i)] = std::move(v.code);
              if (i == 0) cod_shared = v.type;
            } catch (...) {
#pragma omp critical
              if (!failure) failure = std::current_exception();
            }
          }
        }
        if (failure) std::rethrow_exception(failure);
        cod_type = cod_shared;
      } else
#endif
      {
        for (std::uint64_t i = 0; i < dom; ++i) {
          env.push_back(Element{dom_type, BigInt(i)});
          Element v = eval(m, ctx, assignment, env, t->body(), exec);
          env.pop_back();
          table[i] = std::move(v.code);
          if (i == 0) cod_type = v.type;
        }
      }
      TypePtr fn_type = Type::arrow(dom_type, cod_type);
      return Element{fn_type, encode_table(m, fn_type, table)};
    }
  }
  throw ill_typed("malformed term");
}

}  // namespace

Element interpret(const Model& m, const Context& ctx,
                  const Assignment& assignment, const TermPtr& t, Exec exec) {
  infer_type(ctx, t);
  std::vector<Element> env;
  return eval(m, ctx, assignment, env, t, exec);
}

void for_each_assignment(const Model& m, const Context& ctx,
                         const std::function<bool(const Assignment&)>& fn) {
  std::vector<std::uint64_t> sizes;
  std::uint64_t total = 1;
  for (const auto& [name, type] : ctx.vars()) {
    (void)name;
    std::uint64_t s = iteration_size(m, type);
    if (s != 0 && total > m.cap / s)
      throw model_too_large("assignment space exceeds the cap");
    sizes.push_back(s);
    total *= s;
  }
  std::vector<std::uint64_t> codes(sizes.size(), 0);
  for (std::uint64_t step = 0; step < total; ++step) {
    Assignment a;
    for (std::size_t i = 0; i < sizes.size(); ++i)
      a.emplace(ctx.vars()[i].first,
                Element{ctx.vars()[i].second, BigInt(codes[i])});
    if (!fn(a)) return;
    for (std::size_t i = 0; i < codes.size(); ++i) {
      if (++codes[i] < sizes[i]) break;
      codes[i] = 0;
    }
  }
}

bool models_eq(const Model& m, const Context& ctx, const TermPtr& t,
               const TermPtr& u, Exec exec) {
  TypePtr tt = infer_type(ctx, t);
  TypePtr tu = infer_type(ctx, u);
  if (!equal(tt, tu))
    throw type_mismatch("compared terms have different types");
  bool equal_everywhere = true;
  for_each_assignment(m, ctx, [&](const Assignment& a) {
    if (!(interpret(m, ctx, a, t, exec) == interpret(m, ctx, a, u, exec))) {
      equal_everywhere = false;
      return false;
    }
    return true;
  });
  return equal_everywhere;
}

}  // namespace stlc
