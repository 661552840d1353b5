// Compares the serial and OpenMP tabulation paths on interpretation and
// definability scans, checking that both produce identical results.
#include <chrono>
#include <cstdio>

#include "stlc/definability.hpp"
#include "stlc/semantics.hpp"
#include "stlc/syntax.hpp"

using namespace stlc;
using Clock = std::chrono::steady_clock;

namespace {

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
std::pair<double, decltype(std::declval<F>()())> timed(F&& f) {
  auto start = Clock::now();
  auto result = f();
  return {seconds(start, Clock::now()), result};
}

}  // namespace

int main() {
  std::printf("%-34s %10s %10s %8s\n", "workload", "serial", "parallel",
              "speedup");

  // Tabulation over the 3^9 = 19683 functions i->i->i.
  {
    Model m{3, 1 << 20};
    TermPtr t = parse_term("\\h:i->i->i. \\x:i. h x (h x x)");
    auto [ts, vs] = timed([&] { return interpret(m, {}, {}, t, Exec::serial); });
    auto [tp, vp] =
        timed([&] { return interpret(m, {}, {}, t, Exec::parallel); });
    std::printf("%-34s %9.3fs %9.3fs %7.2fx%s\n", "interpret, domain 3^9", ts,
                tp, ts / tp, vs == vp ? "" : "  MISMATCH");
  }

  // Nested tabulation: the outer binder iterates 4^4 = 256 functions, the
  // body re-tabulates at every point.
  {
    Model m{4, 1 << 20};
    TermPtr t = parse_term("\\h:i->i. \\g:i->i. \\x:i. h (g (h x))");
    auto [ts, vs] = timed([&] { return interpret(m, {}, {}, t, Exec::serial); });
    auto [tp, vp] =
        timed([&] { return interpret(m, {}, {}, t, Exec::parallel); });
    std::printf("%-34s %9.3fs %9.3fs %7.2fx%s\n", "interpret, nested binders",
                ts, tp, ts / tp, vs == vp ? "" : "  MISMATCH");
  }

  // Definability scan: every code of i->i->i at base 2 within length 5.
  {
    Model m{2, 1 << 20};
    TypePtr ty = parse_type("i->i->i");
    auto scan = [&](Exec exec) {
      int definable = 0;
      for (std::uint64_t code = 0; code < 16; ++code)
        if (is_definable(m, ty, Element{ty, code}, {5, 100000}, exec)
                .definable())
          ++definable;
      return definable;
    };
    auto [ts, cs] = timed([&] { return scan(Exec::serial); });
    auto [tp, cp] = timed([&] { return scan(Exec::parallel); });
    std::printf("%-34s %9.3fs %9.3fs %7.2fx%s\n", "definability scan, base 2",
                ts, tp, ts / tp, cs == cp ? "" : "  MISMATCH");
  }

  return 0;
}
