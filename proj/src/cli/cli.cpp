#include "gsmon/cli/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>

#include "gsmon/cli/criteria.hpp"
#include "gsmon/core/checks.hpp"
#include "gsmon/core/errors.hpp"
#include "gsmon/core/presentation.hpp"
#include "gsmon/finrel/model.hpp"
#include "gsmon/finstoch/stoch.hpp"
#include "gsmon/monads/checks.hpp"
#include "gsmon/monads/kleisli.hpp"
#include "gsmon/preord/functors.hpp"
#include "gsmon/pspan/model.hpp"
#include "gsmon/termgraph/eval.hpp"

namespace gsmon {

nlohmann::ordered_json to_json(const RunConfig& c) {
  return {{"model", c.model},   {"order", c.order},           {"monad", c.monad},
          {"sizes", c.sizes},   {"aux", c.aux},               {"apex_bound", c.apex_bound},
          {"max_size", c.max_size}, {"samples", c.samples},   {"cap", c.cap},
          {"budget", c.budget}, {"seed", c.seed},             {"presentation", c.presentation},
          {"assignment", c.assignment}, {"homs", c.homs},     {"files", c.files}};
}

namespace {

struct Outcome {
  std::vector<LawReport> reports;
  nlohmann::ordered_json result;
  std::string result_text;
  std::vector<SuiteResult> criteria;
};

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(path + ": " + e.what());
  }
}

const std::string& file_arg(const RunConfig& c, std::size_t i, const std::string& what) {
  if (c.files.size() <= i) throw FixtureError(c.command + " needs " + what);
  return c.files[i];
}

CheckOptions options(const RunConfig& c) {
  CheckOptions opts;
  opts.cap = c.cap;
  opts.budget = c.budget;
  opts.seed = c.seed;
  return opts;
}

std::vector<std::size_t> sizes_or(const RunConfig& c, std::vector<std::size_t> fallback) {
  return c.sizes.empty() ? fallback : c.sizes;
}

RelOrder rel_order(const std::string& name) {
  if (name == "inclusion") return RelOrder::Inclusion;
  if (name == "reversed") return RelOrder::Reversed;
  if (name == "equality") return RelOrder::Equality;
  throw FixtureError("unknown order " + name);
}

template <class Fn>
void with_monad(const RunConfig& c, Fn&& fn) {
  auto t = monad_by_name(c.monad);
  std::visit(fn, t);
}

template <class Fn>
void with_model(const RunConfig& c, Fn&& fn) {
  if (c.model == "finrel") {
    fn(FinRelModel(sizes_or(c, {1, 2, 4}), rel_order(c.order), c.aux));
  } else if (c.model == "pspan") {
    fn(PSpanModel(sizes_or(c, {1, 2, 4}), c.apex_bound, c.aux));
  } else if (c.model == "finstoch") {
    fn(FinStochModel(sizes_or(c, {1, 2, 3}), c.aux));
  } else if (c.model == "kleisli") {
    with_monad(c, [&](const auto& t) { fn(KleisliModel(t, sizes_or(c, {1, 2}), c.aux)); });
  } else if (c.model == "presentation") {
    if (c.presentation.empty()) throw FixtureError("--model presentation needs --presentation FILE");
    fn(TablePresentation::from_json(load_json(c.presentation)));
  } else {
    throw FixtureError("unknown model " + c.model);
  }
}

template <GsModel M>
void run_check(const std::string& kind, const M& m, const CheckOptions& opts, Outcome& o) {
  if (kind == "gs") {
    o.reports.push_back(check_category_and_monoidal(m, opts));
    o.reports.push_back(check_gs_axioms(m, opts));
  } else if (kind == "oplax") {
    o.reports.push_back(check_oplax_cartesian(m, opts));
  } else if (kind == "dom") {
    o.reports.push_back(check_dom_propositions(m, opts));
  } else {
    LawReport r("weakproduct");
    for (const auto& a : m.objects())
      for (const auto& b : m.objects())
        if (in_fixture(m, m.tensor_objects(a, b)))
          r.absorb(check_weak_product(m, a, b, opts), m.describe_object(a) + "," + m.describe_object(b));
    o.reports.push_back(r);
  }
}

void cmd_check(const RunConfig& c, const std::string& kind, Outcome& o) {
  with_model(c, [&](const auto& m) { run_check(kind, m, options(c), o); });
}

void cmd_monad(const RunConfig& c, const std::string& kind, Outcome& o) {
  with_monad(c, [&](const auto& t) {
    if (kind == "laws") {
      o.reports.push_back(check_monad_laws(t, c.max_size, options(c)));
      o.reports.push_back(check_value_order(t, c.max_size, options(c)));
    } else {
      o.reports.push_back(check_gs_monoidal_monad(t, c.max_size, options(c)));
    }
  });
}

void cmd_kleisli(const RunConfig& c, const std::string& kind, Outcome& o) {
  with_monad(c, [&](const auto& t) {
    KleisliModel k(t, sizes_or(c, {1, 2}), c.aux);
    if (kind == "build") {
      o.result = TablePresentation::materialize(k, c.cap * 64).to_json();
      o.result_text = o.result.dump(2) + "\n";
      return;
    }
    o.result = nlohmann::ordered_json::array();
    for (const auto& path : c.files) {
      auto f = k.from_json(load_json(path));
      o.result.push_back(k.to_json(f));
      o.result_text += path + ": " + k.describe(f) + "\n";
    }
    o.reports.push_back(check_gs_axioms(k, options(c)));
    o.reports.push_back(check_oplax_cartesian(k, options(c)));
  });
}

void cmd_span(const RunConfig& c, const std::string& kind, Outcome& o) {
  if (kind == "check") {
    auto sizes = sizes_or(c, {1, 2, 4});
    PSpanModel m(sizes, c.apex_bound, c.aux);
    o.reports.push_back(check_gs_axioms(m, options(c)));
    o.reports.push_back(check_oplax_cartesian(m, options(c)));
    o.reports.push_back(check_span_criteria(sizes, c.apex_bound));
    return;
  }
  Span a = span_from_json(load_json(file_arg(c, 0, "two span fixtures")));
  Span b = span_from_json(load_json(file_arg(c, 1, "two span fixtures")));
  if (kind == "compose") {
    if (a.tgt() != b.src()) throw FixtureError("span compose: target of the first is not the source of the second");
    Span s = span_compose(b, a);
    o.result = to_json(s);
    o.result_text = to_string(s) + "\n";
    return;
  }
  if (a.src() != b.src() || a.tgt() != b.tgt()) throw FixtureError("span leq: spans must share source and target");
  bool search = span_leq_search(a, b), support = span_leq_support(a, b);
  o.result = {{"leq", search}};
  o.result_text = std::string("leq: ") + (search ? "true" : "false") + "\n";
  LawReport r("span-leq");
  auto& law = r.law("search-agrees-with-support");
  if (search == support)
    law.pass();
  else
    law.fail({"", {{"s", to_string(a)}, {"t", to_string(b)}}, search ? "true" : "false", support ? "true" : "false"});
  o.reports.push_back(r);
}

void cmd_stoch(const RunConfig& c, const std::string& kind, Outcome& o) {
  if (kind == "check") {
    o.reports.push_back(check_support_oplax(c.samples, c.max_size, c.seed));
    return;
  }
  StochMatrix f = stoch_from_json(load_json(file_arg(c, 0, "a stochastic matrix fixture")));
  Rel s = support(f);
  o.result = to_json(s);
  o.result_text = to_string(s) + "\n";
}

std::vector<std::pair<std::size_t, std::size_t>> parse_homs(const std::string& text) {
  std::vector<std::pair<std::size_t, std::size_t>> homs;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto colon = item.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument(item);
      homs.emplace_back(std::stoul(item.substr(0, colon)), std::stoul(item.substr(colon + 1)));
    } catch (const std::logic_error&) {
      throw FixtureError("--homs expects a:b pairs, got " + item);
    }
  }
  return homs;
}

void cmd_preord(const RunConfig& c, const std::string& kind, Outcome& o) {
  if (kind == "hypograph") {
    o.reports.push_back(check_hypograph_functoriality(options(c), c.max_size));
    return;
  }
  FinRelModel m(sizes_or(c, {1, 2, 4}), RelOrder::Inclusion, c.aux);
  std::vector<std::pair<Rel, Rel>> pairs;
  for (auto [a, b] : parse_homs(c.homs)) {
    if (!in_fixture(m, a) || !in_fixture(m, b)) throw FixtureError("--homs names a size outside --sizes");
    const auto n = *m.hom_size(a, b);
    for (std::uint64_t i = 0; i < n; ++i)
      for (std::uint64_t j = 0; j < n; ++j) pairs.emplace_back(m.hom_at(a, b, i), m.hom_at(a, b, j));
  }
  o.reports.push_back(completeness_experiment(m, pairs, options(c)));
}

template <GsModel M, class Parse>
void eval_in(const TermGraph& g, const M& m, const nlohmann::json& spec, Parse&& parse, Outcome& o) {
  const auto& sig = *g.signature();
  TgAssignment<M> a;
  try {
    for (const auto& s : sig.sorts) a.sorts.push_back(spec.at("sorts").at(s).get<std::size_t>());
    for (const auto& op : sig.ops) a.ops.push_back(parse(spec.at("ops").at(op.name)));
  } catch (const nlohmann::json::exception& e) {
    throw FixtureError(std::string("assignment fixture: ") + e.what());
  }
  auto least = tg_eval(g, m, a, TieBreak::Least);
  auto greatest = tg_eval(g, m, a, TieBreak::Greatest);
  LawReport r("termgraph-eval");
  auto& law = r.law("layering-invariant");
  if (m.equal(least, greatest))
    law.pass();
  else
    law.fail({"", {{"graph", to_string(g)}}, m.describe(least), m.describe(greatest)});
  o.reports.push_back(r);
  o.result_text = m.describe(least) + "\n";
  if constexpr (requires { m.to_json(least); })
    o.result = m.to_json(least);
  else
    o.result = to_json(least);
}

void cmd_termgraph(const RunConfig& c, const std::string& kind, Outcome& o) {
  auto sig = std::make_shared<Signature>(signature_from_json(load_json(file_arg(c, 0, "a signature fixture"))));
  TermGraph g = termgraph_from_json(sig, load_json(file_arg(c, 1, "a term graph fixture")));
  if (kind == "equal") {
    TermGraph h = termgraph_from_json(sig, load_json(file_arg(c, 2, "two term graph fixtures")));
    bool eq = tg_equal(g, h), search = tg_isomorphic_search(g, h);
    o.result = {{"equal", eq}};
    o.result_text = std::string("equal: ") + (eq ? "true" : "false") + "\n";
    LawReport r("termgraph-equal");
    auto& law = r.law("canonical-labeling-agrees-with-search");
    if (eq == search)
      law.pass();
    else
      law.fail({"", {{"s", to_string(g)}, {"t", to_string(h)}}, eq ? "equal" : "unequal",
                search ? "isomorphic" : "not isomorphic"});
    o.reports.push_back(r);
    return;
  }
  if (c.assignment.empty()) throw FixtureError("termgraph eval needs --assign FILE");
  auto spec = load_json(c.assignment);
  const std::string target = spec.value("model", "finrel");
  if (target == "finrel") {
    FinRelModel m({1});
    eval_in(g, m, spec, [](const nlohmann::json& j) { return rel_from_json(j); }, o);
  } else if (target == "lifting") {
    KleisliModel m(LiftingMonad{}, {1});
    eval_in(g, m, spec, [&m](const nlohmann::json& j) { return m.from_json(j); }, o);
  } else {
    throw FixtureError("assignment model must be finrel or lifting, got " + target);
  }
}

void cmd_report(const RunConfig& c, Outcome& o) {
  for (int n = 1; n <= kSuiteCount; ++n) {
    o.criteria.push_back(run_suite(n, c.seed));
    for (const auto& r : o.criteria.back().reports) o.reports.push_back(r);
  }
}

bool all_pass(const Outcome& o) {
  for (const auto& r : o.reports)
    if (!r.passed()) return false;
  return true;
}

void emit(const RunConfig& c, const Outcome& o, std::ostream& out) {
  const bool pass = all_pass(o);
  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = c.command;
    j["config"] = to_json(c);
    if (!o.result.is_null()) j["result"] = o.result;
    if (!o.criteria.empty()) {
      j["criteria"] = nlohmann::ordered_json::array();
      for (const auto& s : o.criteria) {
        nlohmann::ordered_json checks = nlohmann::ordered_json::array();
        for (const auto& r : s.reports) checks.push_back(r.check());
        j["criteria"].push_back({{"number", s.number},
                                 {"title", s.title},
                                 {"verdict", s.met ? "met" : "not met"},
                                 {"checks", checks},
                                 {"analysis", s.analysis}});
      }
    }
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& r : o.reports) j["reports"].push_back(to_json(r));
    j["verdict"] = pass ? "pass" : "fail";
    out << j.dump(2) << "\n";
    return;
  }
  out << o.result_text;
  if (!o.criteria.empty()) {
    for (const auto& s : o.criteria) {
      out << "criterion " << s.number << ": " << (s.met ? "MET" : "NOT MET") << "  " << s.title << "\n";
      for (const auto& r : s.reports) out << to_text(r);
      for (const auto& a : s.analysis) out << "  analysis: " << a << "\n";
    }
  } else {
    for (const auto& r : o.reports) out << to_text(r);
  }
  out << "verdict: " << (pass ? "pass" : "fail") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Executable checks for gs-monoidal and oplax cartesian categories", "gsmon"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--cap", c.cap, "Largest hom-set enumerated")->check(CLI::PositiveNumber);
  app.add_option("--budget", c.budget, "Instances per law before sampling")->check(CLI::PositiveNumber);
  app.add_option("--seed", c.seed, "Seed for sampled instances");
  app.add_option("--model", c.model, "finrel|pspan|finstoch|kleisli|presentation")
      ->check(CLI::IsMember({"finrel", "pspan", "finstoch", "kleisli", "presentation"}));
  app.add_option("--order", c.order, "FinRel hom order")->check(CLI::IsMember({"inclusion", "reversed", "equality"}));
  app.add_option("--monad", c.monad, "Monad name");
  app.add_option("--sizes", c.sizes, "Fixture object sizes")->delimiter(',')->check(CLI::PositiveNumber);
  app.add_option("--aux", c.aux, "Auxiliary sizes for tensors")->delimiter(',')->check(CLI::PositiveNumber);
  app.add_option("--apex-bound", c.apex_bound, "Largest span apex enumerated")->check(CLI::PositiveNumber);
  app.add_option("--max-size", c.max_size, "Largest set size quantified over")->check(CLI::PositiveNumber);
  app.add_option("--samples", c.samples, "Sampled instances")->check(CLI::PositiveNumber);
  app.add_option("--presentation", c.presentation, "Presentation fixture");
  app.add_option("--assign", c.assignment, "Term graph assignment fixture");
  app.add_option("--homs", c.homs, "Hom-sets a:b for the completeness experiment");

  std::string kind;
  auto group = [&](const std::string& name, const std::string& help, std::vector<std::string> kinds,
                   bool takes_files) {
    auto* sub = app.add_subcommand(name, help);
    sub->require_subcommand(1);
    for (const auto& k : kinds) {
      auto* leaf = sub->add_subcommand(k);
      if (takes_files) leaf->add_option("files", c.files, "Fixture files");
      leaf->callback([&c, &kind, name, k] {
        c.command = name + " " + k;
        kind = k;
      });
    }
  };
  group("check", "Run a checker on a model", {"gs", "oplax", "dom", "weakproduct"}, false);
  group("monad", "Check a monad", {"laws", "gs"}, false);
  group("kleisli", "Kleisli categories", {"build", "check"}, true);
  group("span", "Partial spans of finite sets", {"compose", "leq", "check"}, true);
  group("stoch", "Stochastic matrices", {"support", "check"}, true);
  group("preord", "Preorders and hom functors", {"hypograph", "completeness"}, false);
  group("termgraph", "Term graphs", {"eval", "equal"}, true);
  group("report", "Acceptance suites", {"all"}, false);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Outcome o;
  try {
    const auto group_name = c.command.substr(0, c.command.find(' '));
    if (group_name == "check") cmd_check(c, kind, o);
    else if (group_name == "monad") cmd_monad(c, kind, o);
    else if (group_name == "kleisli") cmd_kleisli(c, kind, o);
    else if (group_name == "span") cmd_span(c, kind, o);
    else if (group_name == "stoch") cmd_stoch(c, kind, o);
    else if (group_name == "preord") cmd_preord(c, kind, o);
    else if (group_name == "termgraph") cmd_termgraph(c, kind, o);
    else cmd_report(c, o);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  emit(c, o, out);
  return all_pass(o) ? 0 : 1;
}

}  // namespace gsmon
