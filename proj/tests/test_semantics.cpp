#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "support.hpp"

#include "stlc/error.hpp"
#include "stlc/semantics.hpp"
#include "stlc/syntax.hpp"

using namespace stlc;

TEST_CASE("space sizes") {
  Model m2{2, 1 << 20};
  CHECK(space_size(m2, parse_type("i")) == 2);
  CHECK(space_size(m2, parse_type("i->i")) == 4);
  CHECK(space_size(m2, parse_type("i->i->i")) == 16);
  CHECK(space_size(m2, parse_type("(i->i)->i")) == 16);

  Model m3{3, 1 << 20};
  CHECK(space_size_unbounded(m3, parse_type("(i->i)->i")) ==
        BigInt("7625597484987"));
  CHECK_THROWS_AS(space_size(m3, parse_type("(i->i)->i")), model_too_large);

  CHECK(space_enumerable(m2, parse_type("i->i->i")));
  CHECK_FALSE(space_enumerable(m3, parse_type("(i->i)->i")));

  Model m1{1, 1 << 20};
  CHECK(space_size(m1, parse_type("((i->i)->i)->i")) == 1);
  CHECK_THROWS_AS(space_size(Model{0, 16}, parse_type("i")), model_too_large);
}

TEST_CASE("table encoding round-trips") {
  Model m{3, 1 << 20};
  TypePtr ii = parse_type("i->i");
  for (std::uint64_t code = 0; code < 27; ++code) {
    auto table = decode_table(m, ii, BigInt(code));
    REQUIRE(table.size() == 3);
    CHECK(encode_table(m, ii, table) == BigInt(code));
  }
  CHECK_THROWS_AS(decode_table(m, parse_type("i"), BigInt(0)), type_mismatch);
}

TEST_CASE("application reads the table") {
  Model m{2, 1 << 20};
  TypePtr ii = parse_type("i->i");
  // code 2 is the table [0, 1]: the identity on {0, 1}.
  Element id{ii, 2};
  CHECK(apply(m, id, Element{Type::base(), 0}).code == 0);
  CHECK(apply(m, id, Element{Type::base(), 1}).code == 1);
  // code 1 is the table [1, 0]... no: [1, 0] encodes as 1*1 + 0*2 = 1.
  Element neg{ii, 1};
  CHECK(apply(m, neg, Element{Type::base(), 0}).code == 1);
  CHECK(apply(m, neg, Element{Type::base(), 1}).code == 0);
  CHECK_THROWS_AS(apply(m, Element{Type::base(), 0}, id), type_mismatch);
  CHECK_THROWS_AS(apply(m, id, id), type_mismatch);
}

TEST_CASE("interpretation agrees with the explicit-table evaluator") {
  support::Rng rng(4242);
  Context ctx = parse_context("f:i->i, c:i");
  int done = 0;
  for (int k = 0; k < 120; ++k) {
    std::uint64_t base = 2 + static_cast<std::uint64_t>(rng.below(2));
    Model m{base, 1 << 20};
    TypePtr ty = support::random_type(rng, 2);
    TermPtr t = support::obfuscate(
        ctx, support::random_term(ctx, ty, rng, 2), rng, true);

    // A fixed assignment: f the cyclic successor, c = 1.
    auto f_space = support::naive_space(base, parse_type("i->i"));
    support::NaiveValue f_val;
    f_val.is_fun = true;
    for (std::uint64_t i = 0; i < base; ++i) {
      support::NaiveValue v;
      v.base = static_cast<long>((i + 1) % base);
      f_val.table.push_back(v);
    }
    support::NaiveValue c_val;
    c_val.base = 1;

    Assignment nu;
    nu.emplace("f", Element{parse_type("i->i"),
                            support::naive_code(base, parse_type("i->i"),
                                                f_val)});
    nu.emplace("c", Element{Type::base(), 1});

    Element got = interpret(m, ctx, nu, t, Exec::serial);
    support::NaiveValue want =
        support::naive_eval(base, ctx, {{"f", f_val}, {"c", c_val}}, t);
    CHECK(got.code == support::naive_code(base, ty, want));
    ++done;
  }
  CHECK(done == 120);
}

TEST_CASE("serial and parallel interpretation agree") {
  Model m3{3, 1 << 20};
  for (const char* text : {"\\h:i->i->i. \\x:i. h x x", "#3"}) {
    TermPtr t = parse_term(text);
    CHECK(interpret(m3, {}, {}, t, Exec::serial) ==
          interpret(m3, {}, {}, t, Exec::parallel));
  }
  // A third-order term: keep the iterated domain enumerable with base 2.
  Model m2{2, 1 << 20};
  TermPtr g = parse_term("\\g:(i->i)->i. g (\\x:i. g (\\y:i. x))");
  CHECK(interpret(m2, {}, {}, g, Exec::serial) ==
        interpret(m2, {}, {}, g, Exec::parallel));
}

TEST_CASE("truth in small models") {
  Model m2{2, 1 << 20};
  // In M_2 the numerals 1 and 3 collapse: f = f^3 for all four f.
  CHECK(models_eq(m2, {}, church(1), church(3)));
  CHECK_FALSE(models_eq(m2, {}, church(1), church(2)));
  // Open truth quantifies over assignments.
  Context ctx = parse_context("x:i, y:i");
  CHECK_FALSE(models_eq(m2, ctx, parse_term("x", ctx), parse_term("y", ctx)));
  CHECK(models_eq(m2, ctx, parse_term("x", ctx), parse_term("x", ctx)));
  // The one-point model satisfies everything.
  Model m1{1, 1 << 20};
  CHECK(models_eq(m1, {}, church(0), church(4)));
  CHECK_THROWS_AS(models_eq(m2, {}, church(1), parse_term("\\x:i.x")),
                  type_mismatch);
}

TEST_CASE("cap enforcement") {
  Model tiny{2, 3};
  CHECK_THROWS_AS(interpret(tiny, {}, {}, parse_term("\\f:i->i. f"),
                            Exec::serial),
                  model_too_large);
  // Base-typed tabulation still fits: domain has 2 <= 3 points.
  CHECK_NOTHROW(interpret(tiny, {}, {}, parse_term("\\x:i. x"), Exec::serial));
}

TEST_CASE("assignment enumeration") {
  Model m{2, 1 << 20};
  Context ctx = parse_context("x:i, f:i->i");
  std::vector<std::pair<BigInt, BigInt>> seen;
  for_each_assignment(m, ctx, [&](const Assignment& a) {
    seen.emplace_back(a.at("x").code, a.at("f").code);
    return true;
  });
  REQUIRE(seen.size() == 8);
  // First context variable varies fastest.
  CHECK(seen[0] == std::make_pair(BigInt(0), BigInt(0)));
  CHECK(seen[1] == std::make_pair(BigInt(1), BigInt(0)));
  CHECK(seen[2] == std::make_pair(BigInt(0), BigInt(1)));
  CHECK(seen[7] == std::make_pair(BigInt(1), BigInt(3)));
}
