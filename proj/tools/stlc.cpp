// Command-line front end over the whole library surface.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stlc/definability.hpp"
#include "stlc/enumerate.hpp"
#include "stlc/error.hpp"
#include "stlc/matching.hpp"
#include "stlc/rewrite.hpp"
#include "stlc/semantics.hpp"
#include "stlc/statman.hpp"
#include "stlc/syntax.hpp"
#include "stlc/typecheck.hpp"

using json = nlohmann::json;

namespace {

struct Options {
  std::string context;
  int bound = 8;
  std::uint64_t cap = stlc::Model{}.cap;
  std::uint64_t base = 2;
  std::string format = "text";
  std::uint64_t seed = 0;  // accepted for reproducibility plumbing
};

bool json_mode(const Options& o) { return o.format != "text"; }

stlc::Context the_context(const Options& o) {
  if (o.context.empty()) return {};
  return stlc::parse_context(o.context);
}

stlc::EnumerationBudget budget_of(const Options& o) {
  stlc::EnumerationBudget b;
  b.max_length = o.bound;
  return b;
}

void emit(const Options& o, const json& j, const std::string& text) {
  if (json_mode(o))
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int verdict_exit(bool truth) { return truth ? 0 : 1; }

std::string show(const stlc::TermPtr& t, const stlc::Context& ctx = {}) {
  return stlc::print_term(t, ctx);
}

json context_json(const stlc::Context& ctx) {
  json out = json::array();
  for (const auto& [name, type] : ctx.vars())
    out.push_back({{"name", name}, {"type", stlc::to_string(type)}});
  return out;
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_normalize(const Options& o, const std::string& term) {
  auto ctx = the_context(o);
  auto t = stlc::parse_term(term, ctx);
  auto nf = stlc::normalize(ctx, t);
  emit(o, {{"verdict", "normalized"}, {"term", show(nf.term(), ctx)}},
       show(nf.term(), ctx));
  return 0;
}

int cmd_typecheck(const Options& o, const std::string& term) {
  auto ctx = the_context(o);
  auto t = stlc::parse_term(term, ctx);
  auto ty = stlc::infer_type(ctx, t);
  emit(o, {{"verdict", "well-typed"}, {"type", stlc::to_string(ty)}},
       stlc::to_string(ty));
  return 0;
}

int cmd_etalong(const Options& o, const std::string& term,
                const std::string& type) {
  auto ctx = the_context(o);
  auto t = stlc::parse_term(term, ctx);
  stlc::TypePtr ty =
      type.empty() ? stlc::infer_type(ctx, t) : stlc::parse_type(type);
  auto f = stlc::eta_long(ctx, stlc::normalize(ctx, t), ty);
  emit(o,
       {{"verdict", "etalong"},
        {"term", show(f.term(), ctx)},
        {"type", stlc::to_string(f.type())}},
       show(f.term(), ctx));
  return 0;
}

int cmd_length(const Options& o, const std::string& term) {
  auto ctx = the_context(o);
  auto t = stlc::parse_term(term, ctx);
  int len = stlc::term_length(stlc::canonical_form(ctx, t));
  emit(o, {{"verdict", "length"}, {"length", len}}, std::to_string(len));
  return 0;
}

int cmd_eq(const Options& o, const std::string& a, const std::string& b) {
  auto ctx = the_context(o);
  auto ta = stlc::parse_term(a, ctx);
  auto tb = stlc::parse_term(b, ctx);
  bool equal = stlc::beta_eta_eq(ctx, ta, tb);
  emit(o, {{"verdict", equal ? "equal" : "distinct"}},
       equal ? "equal" : "distinct");
  return verdict_exit(equal);
}

int cmd_enumerate(const Options& o, const std::string& type, int exact) {
  auto ctx = the_context(o);
  auto ty = stlc::parse_type(type);
  std::vector<stlc::EtaLongForm> terms =
      exact >= 0 ? stlc::enumerate_same_length(ty, exact, budget_of(o))
                 : stlc::enumerate_normal_terms(ctx, ty, budget_of(o));
  json arr = json::array();
  std::ostringstream text;
  for (const auto& f : terms) {
    arr.push_back(show(f.term(), ctx));
    text << show(f.term(), ctx) << "\n";
  }
  text << terms.size() << " term(s)";
  emit(o, {{"verdict", "enumerated"}, {"count", terms.size()}, {"terms", arr}},
       text.str());
  return 0;
}

int cmd_separators(const Options& o, const std::string& term,
                   const std::string& type) {
  auto ctx = the_context(o);
  auto t = stlc::parse_term(term, ctx);
  stlc::TypePtr ty =
      type.empty() ? stlc::infer_type(ctx, t) : stlc::parse_type(type);
  auto ws = stlc::separator_set(t, ty, budget_of(o));
  json arr = json::array();
  std::ostringstream text;
  text << "context:";
  for (const auto& [name, vt] : ws.context.vars())
    text << " " << name << ":" << stlc::to_string(vt);
  for (const auto& w : ws.separators) {
    arr.push_back(show(w, ws.context));
    text << "\n" << show(w, ws.context);
  }
  emit(o,
       {{"verdict", "separators"},
        {"context", context_json(ws.context)},
        {"separators", arr}},
       text.str());
  return 0;
}

int cmd_model_build(const Options& o, const std::string& term,
                    const std::string& type) {
  auto ctx = the_context(o);
  auto t = stlc::parse_term(term, ctx);
  stlc::TypePtr ty =
      type.empty() ? stlc::infer_type(ctx, t) : stlc::parse_type(type);
  auto bundle = stlc::build_finite_model(t, ty, budget_of(o), o.cap);
  json classes = json::array();
  std::ostringstream text;
  text << "base_size " << bundle.model.base_size << "\n"
       << "separators " << bundle.separators.separators.size() << "\n"
       << "classes:";
  for (const auto& rep : bundle.base.allowed) {
    classes.push_back(show(rep, bundle.base.context));
    text << " " << show(rep, bundle.base.context);
  }
  text << " _bottom";
  emit(o,
       {{"verdict", "built"},
        {"model", {{"base_size", bundle.model.base_size}}},
        {"separators", bundle.separators.separators.size()},
        {"classes", classes}},
       text.str());
  return 0;
}

int cmd_model_size(const Options& o, const std::string& type) {
  stlc::Model m{o.base, o.cap};
  auto ty = stlc::parse_type(type);
  stlc::BigInt size = stlc::space_size_unbounded(m, ty);
  emit(o,
       {{"verdict", "size"},
        {"model", {{"base_size", m.base_size}}},
        {"size", size.str()}},
       size.str());
  return 0;
}

int cmd_model_eval(const Options& o, const std::string& term) {
  stlc::Model m{o.base, o.cap};
  auto ctx = the_context(o);
  if (!ctx.empty())
    throw stlc::not_closed("model eval expects a closed term");
  auto t = stlc::parse_term(term, ctx);
  auto ty = stlc::infer_type(ctx, t);
  stlc::Element e = stlc::interpret(m, ctx, {}, t);
  json j = {{"verdict", "evaluated"},
            {"model", {{"base_size", m.base_size}}},
            {"element", {{"type", stlc::to_string(ty)}, {"code", e.code.str()}}}};
  std::ostringstream text;
  text << e.code.str() << " : " << stlc::to_string(ty);
  if (o.format == "json-table" && ty->is_arrow()) {
    json table = json::array();
    for (const auto& v : stlc::decode_table(m, ty, e.code))
      table.push_back(v.str());
    j["element"]["table"] = table;
  }
  emit(o, j, text.str());
  return 0;
}

int cmd_model_decide(const Options& o, const std::string& t_text,
                     const std::string& u_text) {
  auto ctx = the_context(o);
  auto t = stlc::parse_term(t_text, ctx);
  auto u = stlc::parse_term(u_text, ctx);
  auto ty = stlc::infer_type(ctx, t);
  auto bundle = stlc::build_finite_model(t, ty, budget_of(o), o.cap);
  bool equal = stlc::decide_eq(bundle, u);
  std::ostringstream text;
  text << (equal ? "equal" : "distinct") << " (base_size "
       << bundle.model.base_size << ")";
  emit(o,
       {{"verdict", equal ? "equal" : "distinct"},
        {"model", {{"base_size", bundle.model.base_size}}}},
       text.str());
  return verdict_exit(equal);
}

int cmd_definable(const Options& o, const std::string& type,
                  const std::string& code, const std::string& table) {
  stlc::Model m{o.base, o.cap};
  auto ty = stlc::parse_type(type);
  stlc::Element e{ty, 0};
  if (!table.empty()) {
    std::vector<stlc::BigInt> entries;
    std::istringstream in(table);
    std::string item;
    while (std::getline(in, item, ',')) entries.emplace_back(item);
    e.code = stlc::encode_table(m, ty, entries);
  } else if (!code.empty()) {
    e.code = stlc::BigInt(code);
  }
  auto out = stlc::is_definable(m, ty, e, budget_of(o));
  if (out.definable()) {
    emit(o,
         {{"verdict", "definable"},
          {"model", {{"base_size", m.base_size}}},
          {"witness", show(*out.witness)}},
         "definable: " + show(*out.witness));
    return 0;
  }
  std::ostringstream text;
  text << "unknown (no witness up to length " << out.exhausted_length << ")";
  emit(o,
       {{"verdict", "unknown"},
        {"model", {{"base_size", m.base_size}}},
        {"bound", out.exhausted_length}},
       text.str());
  return 1;
}

int cmd_match_solve(const Options& o, const std::string& a,
                    const std::string& b, const std::string& method) {
  auto ctx = the_context(o);
  auto p = stlc::make_problem(ctx, stlc::parse_term(a, ctx),
                              stlc::parse_term(b, ctx));
  stlc::MatchVerdict v = method == "bruteforce"
                             ? stlc::match_bruteforce(p, budget_of(o))
                             : stlc::match_semantic(p, budget_of(o));
  if (v.solved()) {
    json sol = json::array();
    std::ostringstream text;
    text << "solved:";
    for (const auto& t : *v.solution) {
      sol.push_back(show(t, ctx));
      text << " " << show(t, ctx);
    }
    emit(o, {{"verdict", "solved"}, {"witness", sol}}, text.str());
    return 0;
  }
  std::ostringstream text;
  text << "no solution within bound " << v.bound
       << (v.exhaustive ? " (exhaustive)" : "");
  emit(o,
       {{"verdict", "no-solution-within"},
        {"bound", v.bound},
        {"exhaustive", v.exhaustive}},
       text.str());
  return 1;
}

int cmd_match_close(const Options& o, const std::string& a,
                    const std::string& b, bool solutions) {
  auto ctx = the_context(o);
  auto p = stlc::make_problem(ctx, stlc::parse_term(a, ctx),
                              stlc::parse_term(b, ctx));
  auto cp = solutions ? stlc::close_solutions(p) : stlc::close_problem(p);
  std::ostringstream text;
  text << "a' = " << show(cp.problem.lhs) << "\n"
       << "b' = " << show(cp.problem.rhs);
  emit(o,
       {{"verdict", "closed"},
        {"a", show(cp.problem.lhs)},
        {"b", show(cp.problem.rhs)}},
       text.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-model decision procedures for the simply typed "
               "lambda-calculus"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  app.add_option("--context", o.context, "Free-variable context, e.g. \"x:i, f:i->i\"");
  app.add_option("--bound", o.bound, "Enumeration/search length bound");
  app.add_option("--cap", o.cap, "Largest space the model may iterate");
  app.add_option("--base", o.base, "Base cardinality for plain models");
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "json-table"}));
  app.add_option("--seed", o.seed, "Random seed (reproducibility plumbing)");

  std::string term, type, a, b, t_text, u_text, code, table;
  std::string method = "semantic";
  int exact = -1;

  auto* normalize = app.add_subcommand("normalize", "Beta-eta-normalize a term");
  normalize->add_option("--term", term)->required();
  auto* typecheck = app.add_subcommand("typecheck", "Infer the type of a term");
  typecheck->add_option("--term", term)->required();
  auto* etalong = app.add_subcommand("etalong", "Canonical eta-long normal form");
  etalong->add_option("--term", term)->required();
  etalong->add_option("--type", type);
  auto* length = app.add_subcommand("length", "Length of the canonical form");
  length->add_option("--term", term)->required();
  auto* eq = app.add_subcommand("eq", "Decide beta-eta-equality syntactically");
  eq->add_option("--a", a)->required();
  eq->add_option("--b", b)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Normal eta-long terms of a type");
  enumerate->add_option("--type", type)->required();
  enumerate->add_option("--length", exact, "Exact length instead of <= bound");
  auto* separators = app.add_subcommand("separators", "Separator set for a term");
  separators->add_option("--term", term)->required();
  separators->add_option("--type", type);

  auto* model = app.add_subcommand("model", "Finite standard models");
  model->require_subcommand(1);
  model->fallthrough();
  auto* mbuild = model->add_subcommand("build", "Build the per-term model");
  mbuild->add_option("--term", term)->required();
  mbuild->add_option("--type", type);
  auto* msize = model->add_subcommand("size", "Space cardinality");
  msize->add_option("--type", type)->required();
  auto* meval = model->add_subcommand("eval", "Interpret a closed term");
  meval->add_option("--term", term)->required();
  auto* mdecide = model->add_subcommand("decide", "Decide equality in the per-term model");
  mdecide->add_option("--t", t_text)->required();
  mdecide->add_option("--u", u_text)->required();

  auto* definable = app.add_subcommand("definable", "Bounded definability search");
  definable->add_option("--type", type)->required();
  definable->add_option("--code", code, "Element code");
  definable->add_option("--table", table, "Comma-separated value table");

  auto* match = app.add_subcommand("match", "Higher-order matching");
  match->require_subcommand(1);
  match->fallthrough();
  auto* msolve = match->add_subcommand("solve", "Solve a matching problem");
  msolve->add_option("--a", a)->required();
  msolve->add_option("--b", b)->required();
  msolve->add_option("--method", method)
      ->check(CLI::IsMember({"semantic", "bruteforce"}));
  auto* mclosep = match->add_subcommand("close-problem", "First closure reduction");
  mclosep->add_option("--a", a)->required();
  mclosep->add_option("--b", b)->required();
  auto* mcloses = match->add_subcommand("close-solutions", "Second closure reduction");
  mcloses->add_option("--a", a)->required();
  mcloses->add_option("--b", b)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*normalize) return cmd_normalize(o, term);
    if (*typecheck) return cmd_typecheck(o, term);
    if (*etalong) return cmd_etalong(o, term, type);
    if (*length) return cmd_length(o, term);
    if (*eq) return cmd_eq(o, a, b);
    if (*enumerate) return cmd_enumerate(o, type, exact);
    if (*separators) return cmd_separators(o, term, type);
    if (*mbuild) return cmd_model_build(o, term, type);
    if (*msize) return cmd_model_size(o, type);
    if (*meval) return cmd_model_eval(o, term);
    if (*mdecide) return cmd_model_decide(o, t_text, u_text);
    if (*definable) return cmd_definable(o, type, code, table);
    if (*msolve) return cmd_match_solve(o, a, b, method);
    if (*mclosep) return cmd_match_close(o, a, b, false);
    if (*mcloses) return cmd_match_close(o, a, b, true);
  } catch (const stlc::error& e) {
    if (json_mode(o)) {
      json j = {{"error", {{"code", e.code()}, {"message", e.what()}}}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
