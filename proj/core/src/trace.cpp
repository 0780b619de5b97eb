#include "orbibraid/trace.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "orbibraid/error.hpp"
#include "orbibraid/free_product.hpp"
#include "orbibraid/presentation.hpp"

namespace orbibraid {

std::string Statement::to_string() const {
  std::string out = predicate + "(";
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += "; ";
    out += args[i];
  }
  out += ")";
  return out;
}

Statement Statement::parse(std::string_view text) {
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.empty() || text.back() != ')')
    throw InvariantViolation("statement_syntax", "malformed statement '" + std::string(text) + "'");
  Statement s;
  s.predicate = std::string(text.substr(0, open));
  std::string_view body = text.substr(open + 1, text.size() - open - 2);
  int depth = 0;
  std::string cur;
  bool any = !body.empty();
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth < 0)
      throw InvariantViolation("statement_syntax", "unbalanced ')' in '" + std::string(text) + "'");
    if (c == ';' && depth == 0) {
      s.args.push_back(cur);
      cur.clear();
      if (i + 1 < body.size() && body[i + 1] == ' ') ++i;
      continue;
    }
    cur += c;
  }
  if (depth != 0)
    throw InvariantViolation("statement_syntax", "unbalanced '(' in '" + std::string(text) + "'");
  if (any) s.args.push_back(cur);
  return s;
}

Statement stmt(std::string predicate, std::vector<std::string> args) {
  return Statement{std::move(predicate), std::move(args)};
}

namespace {

constexpr std::pair<Rule, std::string_view> kRuleNames[] = {
    {Rule::FreeProductOfCyclics, "FreeProductOfCyclics"},
    {Rule::AmalgamRule, "AmalgamRule"},
    {Rule::ExtensionRule, "ExtensionRule"},
    {Rule::OneRelatorTorsion, "OneRelatorTorsion"},
    {Rule::SimpleSurfaceTable, "SimpleSurfaceTable"},
    {Rule::HypothesisFailure, "HypothesisFailure"},
    {Rule::LiteratureCitation, "LiteratureCitation"},
    {Rule::NicenessPuncture, "NicenessPuncture"},
    {Rule::SuborbifoldInjectivity, "SuborbifoldInjectivity"},
    {Rule::ExtensionInjectivity, "ExtensionInjectivity"},
    {Rule::ProjectionFactor, "ProjectionFactor"},
    {Rule::SymmetricInclusion, "SymmetricInclusion"},
};

bool shape(const std::vector<Statement>& in, std::initializer_list<std::pair<const char*, std::size_t>> want) {
  if (in.size() != want.size()) return false;
  std::size_t i = 0;
  for (const auto& [pred, arity] : want) {
    if (in[i].predicate != pred || in[i].args.size() != arity) return false;
    ++i;
  }
  return true;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  if (s.empty()) return out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

std::optional<std::int64_t> to_int(const std::string& s) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::vector<Order>> parse_orders(const std::string& s) {
  std::vector<Order> out;
  for (const auto& tok : split_list(s)) {
    if (tok == "inf") {
      out.push_back(kInfinite);
      continue;
    }
    auto v = to_int(tok);
    if (!v || *v < 2) return std::nullopt;
    out.push_back(*v);
  }
  return out;
}

std::string join_ints(const std::vector<std::int64_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::optional<Statement> free_product_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"free_product_of_cyclics", 2}})) return std::nullopt;
  auto orders = parse_orders(in[0].args[1]);
  if (!orders) return std::nullopt;
  const std::string& g = in[0].args[0];
  if (orders->empty()) return stmt("trivial_group", {g});
  if (orders->size() == 1) return stmt("center_whole", {g});
  return stmt("center_trivial", {g});
}

std::optional<Statement> amalgam_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"amalgam", 4}, {"nontrivial", 1}, {"center_trivial", 1}})) return std::nullopt;
  const auto& a = in[0].args;
  const std::string& factor = in[1].args[0];
  if (in[2].args[0] != factor) return std::nullopt;
  if (factor != a[1] && factor != a[2]) return std::nullopt;
  return stmt("center_trivial", {a[0]});
}

std::optional<Statement> extension_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"extension", 3}, {"center_trivial", 1}, {"center_trivial", 1}}))
    return std::nullopt;
  const auto& e = in[0].args;
  if (in[1].args[0] != e[1] || in[2].args[0] != e[2]) return std::nullopt;
  return stmt("center_trivial", {e[0]});
}

std::optional<Statement> one_relator_rule_apply(const std::vector<Statement>& in) {
  if (!shape(in, {{"one_relator", 3}, {"abelianization", 3}})) return std::nullopt;
  const std::string& g = in[0].args[0];
  if (in[1].args[0] != g) return std::nullopt;
  Presentation p;
  for (const auto& name : split_list(in[0].args[1])) p.generators.push_back({name, GeneratorKind::Generic, 0});
  p.relators.push_back(Word::parse(in[0].args[2]));
  p.validate();
  if (maximal_root(p.relators.front()).exponent < 2) return std::nullopt;
  const AbelianInvariants inv = abelianization(p);
  auto rank = to_int(in[1].args[1]);
  if (!rank || *rank != inv.rank || in[1].args[2] != join_ints(inv.torsion)) return std::nullopt;
  if (is_cyclic(inv)) return std::nullopt;
  return stmt("center_trivial", {g});
}

std::optional<Statement> simple_surface_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"surface_group", 2}})) return std::nullopt;
  const std::string& name = in[0].args[1];
  std::string center;
  if (name == "cylinder" || name == "mobius" || name == "klein") center = "Z";
  else if (name == "torus") center = "Z^2";
  else return std::nullopt;
  return stmt("center_nontrivial", {in[0].args[0], center});
}

std::optional<Statement> hypothesis_failure_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"hypothesis_fails", 2}})) return std::nullopt;
  return stmt("theorem_inapplicable", {in[0].args[0]});
}

std::optional<Statement> literature_rule(const std::vector<Statement>& in) {
  if (in.size() != 1 || in[0].predicate != "cites" || in[0].args.size() < 2) return std::nullopt;
  const auto& a = in[0].args;
  return stmt(a[1], std::vector<std::string>(a.begin() + 2, a.end()));
}

std::optional<Statement> niceness_puncture_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"nice", 2}, {"puncture_pair", 4}})) return std::nullopt;
  const auto& pp = in[1].args;  // (N'; M'; N; M)
  if (pp[2] != in[0].args[0] || pp[3] != in[0].args[1]) return std::nullopt;
  return stmt("nice", {pp[0], pp[1]});
}

bool evidence_holds(const Statement& ev) {
  const auto& a = ev.args;
  if (a.size() < 2) return false;
  const std::string& kind = a[1];
  if (kind == "trivial" || kind == "not_simply_connected") return a.size() == 2;
  if (kind == "cyclic") return a.size() == 3 && to_int(a[2]).value_or(0) >= 2;
  if (kind == "boundary_word_order" && a.size() == 4) {
    auto orders = parse_orders(a[2]);
    if (!orders || orders->size() < 2) return false;
    FreeProductContext ctx(*orders);
    std::vector<FactorSyllable> boundary;
    for (std::size_t f = 0; f < ctx.factor_count(); ++f) boundary.push_back({f, 1});
    return to_string(element_order(ctx, normal_form(ctx, boundary))) == a[3] && a[3] == "infinite";
  }
  return false;
}

std::optional<Statement> suborbifold_injectivity_rule(const std::vector<Statement>& in) {
  if (in.size() != 2 || in[0].predicate != "nice" || in[0].args.size() != 2 ||
      in[1].predicate != "pi1_evidence")
    return std::nullopt;
  const std::string& n = in[0].args[0];
  const std::string& m = in[0].args[1];
  if (in[1].args.empty() || in[1].args[0] != n || !evidence_holds(in[1])) return std::nullopt;
  return stmt("injective", {"PB_1(" + n + ")", "PB_1(" + m + ")"});
}

std::optional<Statement> extension_injectivity_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"extension", 3}, {"extension", 3}, {"injective", 2}, {"injective", 2}}))
    return std::nullopt;
  const auto& top = in[0].args;
  const auto& bottom = in[1].args;
  if (in[2].args != std::vector<std::string>{top[1], bottom[1]}) return std::nullopt;
  if (in[3].args != std::vector<std::string>{top[2], bottom[2]}) return std::nullopt;
  return stmt("injective", {top[0], bottom[0]});
}

std::optional<Statement> projection_factor_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"injective", 2}, {"composite", 3}})) return std::nullopt;
  const auto& c = in[1].args;  // A -> B -> C
  if (in[0].args != std::vector<std::string>{c[0], c[2]}) return std::nullopt;
  return stmt("injective", {c[0], c[1]});
}

std::optional<Statement> symmetric_inclusion_rule(const std::vector<Statement>& in) {
  if (!shape(in, {{"strings", 2}})) return std::nullopt;
  auto n = to_int(in[0].args[0]);
  auto m = to_int(in[0].args[1]);
  if (!n || !m || *n < 1 || *n > *m) return std::nullopt;
  return stmt("injective", {"S_" + in[0].args[0], "S_" + in[0].args[1]});
}

}  // namespace

std::string to_string(Rule rule) {
  for (const auto& [r, name] : kRuleNames)
    if (r == rule) return std::string(name);
  return "?";
}

std::optional<Rule> rule_from_string(std::string_view name) {
  for (const auto& [r, n] : kRuleNames)
    if (n == name) return r;
  return std::nullopt;
}

std::optional<Statement> apply_rule(Rule rule, const std::vector<Statement>& inputs) {
  try {
    switch (rule) {
      case Rule::FreeProductOfCyclics: return free_product_rule(inputs);
      case Rule::AmalgamRule: return amalgam_rule(inputs);
      case Rule::ExtensionRule: return extension_rule(inputs);
      case Rule::OneRelatorTorsion: return one_relator_rule_apply(inputs);
      case Rule::SimpleSurfaceTable: return simple_surface_rule(inputs);
      case Rule::HypothesisFailure: return hypothesis_failure_rule(inputs);
      case Rule::LiteratureCitation: return literature_rule(inputs);
      case Rule::NicenessPuncture: return niceness_puncture_rule(inputs);
      case Rule::SuborbifoldInjectivity: return suborbifold_injectivity_rule(inputs);
      case Rule::ExtensionInjectivity: return extension_injectivity_rule(inputs);
      case Rule::ProjectionFactor: return projection_factor_rule(inputs);
      case Rule::SymmetricInclusion: return symmetric_inclusion_rule(inputs);
    }
  } catch (const InvariantViolation&) {
    // Malformed payload inside a statement: the rule does not fire.
  }
  return std::nullopt;
}

bool ProofTrace::has_fact(const Statement& s) const {
  return std::any_of(facts.begin(), facts.end(), [&](const Fact& f) { return f.statement == s; });
}

void ProofTrace::add_fact(Statement s, std::string source) {
  if (!has_fact(s)) facts.push_back({std::move(s), std::move(source)});
}

const Statement& ProofTrace::derive(Rule rule, std::string anchor, std::vector<Statement> inputs) {
  auto conclusion = apply_rule(rule, inputs);
  if (!conclusion) {
    std::string msg = "rule " + to_string(rule) + " does not fire on:";
    for (const auto& s : inputs) msg += " " + s.to_string();
    throw std::logic_error(msg);
  }
  steps.push_back({rule, std::move(anchor), std::move(inputs), std::move(*conclusion), std::nullopt});
  return steps.back().conclusion;
}

void ProofTrace::merge(const ProofTrace& other) {
  for (const auto& f : other.facts) add_fact(f.statement, f.source);
  for (const auto& s : other.steps) {
    const bool known = std::any_of(steps.begin(), steps.end(), [&](const ProofStep& mine) {
      return mine.conclusion == s.conclusion && mine.rule == s.rule && mine.inputs == s.inputs;
    });
    if (!known) steps.push_back(s);
  }
  for (const auto& w : other.warnings)
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
}

const Statement* ProofTrace::final_conclusion() const {
  return steps.empty() ? nullptr : &steps.back().conclusion;
}

ReplayReport replay(const ProofTrace& trace) {
  ReplayReport report;
  std::vector<Statement> known;
  for (const auto& f : trace.facts) known.push_back(f.statement);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& step = trace.steps[i];
    const std::string where = "step " + std::to_string(i + 1) + " (" + to_string(step.rule) + ")";
    for (const auto& in : step.inputs)
      if (std::find(known.begin(), known.end(), in) == known.end()) {
        report.ok = false;
        report.errors.push_back(where + ": unreferenced input " + in.to_string());
      }
    auto got = apply_rule(step.rule, step.inputs);
    if (!got) {
      report.ok = false;
      report.errors.push_back(where + ": rule does not fire");
    } else if (!(*got == step.conclusion)) {
      report.ok = false;
      report.errors.push_back(where + ": rule yields " + got->to_string() + ", trace records " +
                              step.conclusion.to_string());
    }
    known.push_back(step.conclusion);
  }
  return report;
}

}  // namespace orbibraid
