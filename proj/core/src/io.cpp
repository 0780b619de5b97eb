#include "orbibraid/io.hpp"

#include "orbibraid/error.hpp"

namespace orbibraid::io {

namespace {

[[noreturn]] void schema(const std::string& rule, const std::string& detail) {
  throw InvariantViolation(rule, detail);
}

const json& field(const json& j, const char* key, const char* rule) {
  if (!j.is_object()) schema(rule, "expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) schema(rule, std::string("missing key '") + key + "'");
  return *it;
}

int count_field(const json& j, const char* key) {
  const json& v = field(j, key, "orbifold_schema");
  if (!v.is_number_integer()) {
    if (std::string(key) == "punctures")
      schema("finite_punctures", "punctures must be a finite integer");
    schema("orbifold_schema", std::string("'") + key + "' must be an integer");
  }
  return v.get<int>();
}

std::vector<int> int_list(const json& j, const char* rule) {
  if (!j.is_array()) schema(rule, "expected an array of integers");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) schema(rule, "expected an array of integers");
    out.push_back(e.get<int>());
  }
  return out;
}

}  // namespace

OrbifoldSpec spec_from_json(const json& j) {
  OrbifoldSpec s;
  const json& o = field(j, "orientable", "orbifold_schema");
  if (!o.is_boolean()) schema("orbifold_schema", "'orientable' must be a boolean");
  s.orientable = o.get<bool>();
  s.genus = count_field(j, "genus");
  s.boundary = count_field(j, "boundary");
  s.punctures = count_field(j, "punctures");
  s.cone_orders = int_list(field(j, "cone_orders", "orbifold_schema"), "orbifold_schema");
  s.validate();
  return s;
}

json to_json(const OrbifoldSpec& s) {
  return {{"orientable", s.orientable},
          {"genus", s.genus},
          {"boundary", s.boundary},
          {"punctures", s.punctures},
          {"cone_orders", s.cone_orders}};
}

SuborbifoldEmbedding embedding_from_json(const json& j) {
  SuborbifoldEmbedding e;
  e.ambient = spec_from_json(field(j, "ambient", "embedding_schema"));
  e.sub = spec_from_json(field(j, "sub", "embedding_schema"));
  const json& comps = field(j, "complement_components", "embedding_schema");
  if (!comps.is_array()) schema("embedding_schema", "'complement_components' must be an array");
  for (const auto& c : comps) {
    ComplementComponent cc;
    const json& sc = field(c, "simply_connected_underlying", "embedding_schema");
    if (!sc.is_boolean())
      schema("embedding_schema", "'simply_connected_underlying' must be a boolean");
    cc.simply_connected_underlying = sc.get<bool>();
    cc.spec = spec_from_json(field(c, "spec", "embedding_schema"));
    cc.cone_orders = c.contains("cone_orders") ? int_list(c["cone_orders"], "embedding_schema")
                                               : cc.spec.cone_orders;
    e.complement_components.push_back(std::move(cc));
  }
  e.validate();
  return e;
}

json to_json(const SuborbifoldEmbedding& e) {
  json comps = json::array();
  for (const auto& c : e.complement_components)
    comps.push_back({{"simply_connected_underlying", c.simply_connected_underlying},
                     {"cone_orders", c.cone_orders},
                     {"spec", to_json(c.spec)}});
  return {{"ambient", to_json(e.ambient)}, {"sub", to_json(e.sub)}, {"complement_components", comps}};
}

Presentation presentation_from_json(const json& j) {
  Presentation p;
  const json& gens = field(j, "generators", "presentation_schema");
  if (!gens.is_array()) schema("presentation_schema", "'generators' must be an array");
  for (const auto& g : gens) {
    if (!g.is_string()) schema("presentation_schema", "generator names must be strings");
    p.generators.push_back({g.get<std::string>(), GeneratorKind::Generic, 0});
  }
  const json& rels = field(j, "relators", "presentation_schema");
  if (!rels.is_array()) schema("presentation_schema", "'relators' must be an array");
  for (const auto& r : rels) {
    if (!r.is_array()) schema("presentation_schema", "a relator is an array of syllables");
    std::vector<Syllable> syl;
    for (const auto& s : r) {
      if (!s.is_array() || s.size() != 2 || !s[0].is_string() || !s[1].is_number_integer())
        schema("presentation_schema", "a syllable is [generator, exponent]");
      syl.push_back({s[0].get<std::string>(), s[1].get<std::int64_t>()});
    }
    p.relators.push_back(Word(std::move(syl)));
  }
  p.validate();
  return p;
}

json to_json(const Presentation& p) {
  json rels = json::array();
  for (const auto& r : p.relators) {
    json word = json::array();
    for (const auto& s : r.syllables()) word.push_back({s.generator, s.exponent});
    rels.push_back(word);
  }
  return {{"generators", p.generator_names()}, {"relators", rels}};
}

FreeProductContext context_from_json(const json& j) {
  const json& arr = j.is_object() ? field(j, "factor_orders", "context_schema") : j;
  if (!arr.is_array()) schema("context_schema", "expected an array of factor orders");
  std::vector<Order> orders;
  for (const auto& e : arr) {
    if (e.is_null() || (e.is_string() && (e == "inf" || e == "infinity"))) {
      orders.push_back(kInfinite);
    } else if (e.is_number_integer()) {
      orders.push_back(e.get<std::int64_t>());
    } else {
      schema("context_schema", "factor order must be an integer or \"inf\"");
    }
  }
  return FreeProductContext(std::move(orders));
}

json to_json(const FreeProductContext& ctx) {
  json arr = json::array();
  for (const auto& q : ctx.factor_orders()) {
    if (q) arr.push_back(*q);
    else arr.push_back("inf");
  }
  return {{"factor_orders", arr}};
}

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) schema("matrix_schema", "expected an array of rows");
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) schema("matrix_schema", "each row must be an array");
    std::vector<std::int64_t> row;
    for (const auto& v : r) {
      if (!v.is_number_integer()) schema("matrix_schema", "entries must be integers");
      row.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

json to_json(const IntMatrix& m) { return m.to_rows(); }

json to_json(const AbelianInvariants& inv) {
  return {{"rank", inv.rank}, {"torsion", inv.torsion}, {"cyclic", is_cyclic(inv)}};
}

json to_json(const SmithResult& r) {
  json out = {{"factors", r.factors}};
  if (r.witness) {
    out["left"] = to_json(r.witness->left);
    out["right"] = to_json(r.witness->right);
    out["diagonal"] = to_json(r.witness->diagonal);
  }
  return out;
}

json steps_to_json(const ProofTrace& t) {
  json arr = json::array();
  for (const auto& s : t.steps) {
    json inputs = json::array();
    for (const auto& in : s.inputs) inputs.push_back(in.to_string());
    json step = {{"rule", to_string(s.rule)},
                 {"anchor", s.anchor},
                 {"inputs", inputs},
                 {"conclusion", s.conclusion.to_string()}};
    if (s.induction) step["induction"] = *s.induction;
    arr.push_back(std::move(step));
  }
  return arr;
}

json facts_to_json(const ProofTrace& t) {
  json arr = json::array();
  for (const auto& f : t.facts) arr.push_back({{"statement", f.statement.to_string()}, {"source", f.source}});
  return arr;
}

ProofTrace trace_from_json(const json& facts, const json& steps) {
  ProofTrace t;
  if (!facts.is_array() || !steps.is_array()) schema("trace_schema", "facts and trace must be arrays");
  for (const auto& f : facts)
    t.facts.push_back({Statement::parse(field(f, "statement", "trace_schema").get<std::string>()),
                       field(f, "source", "trace_schema").get<std::string>()});
  for (const auto& s : steps) {
    ProofStep step;
    const std::string name = field(s, "rule", "trace_schema").get<std::string>();
    auto rule = rule_from_string(name);
    if (!rule) schema("trace_schema", "unknown rule '" + name + "'");
    step.rule = *rule;
    step.anchor = field(s, "anchor", "trace_schema").get<std::string>();
    for (const auto& in : field(s, "inputs", "trace_schema"))
      step.inputs.push_back(Statement::parse(in.get<std::string>()));
    step.conclusion = Statement::parse(field(s, "conclusion", "trace_schema").get<std::string>());
    if (s.contains("induction")) step.induction = s["induction"].get<int>();
    t.steps.push_back(std::move(step));
  }
  return t;
}

json to_json(const CenterVerdict& v, const BraidGroupId& group) {
  return {{"group", {{"base", to_json(group.base)}, {"n", group.strings}, {"pure", group.pure}}},
          {"label", v.group},
          {"status", to_string(v.status)},
          {"trace", steps_to_json(v.trace)},
          {"facts", facts_to_json(v.trace)},
          {"warnings", v.trace.warnings}};
}

json to_json(const NiceReport& r) {
  json viol = json::array();
  for (const auto& v : r.violations) viol.push_back({{"component", v.component}, {"reason", v.reason}});
  return {{"nice", r.nice}, {"violations", viol}};
}

json to_json(const InjectivityVerdict& v, const SuborbifoldEmbedding& e, int n, int m, bool pure) {
  json viol = json::array();
  for (const auto& x : v.violations) viol.push_back({{"component", x.component}, {"reason", x.reason}});
  return {{"embedding", to_json(e)},
          {"n", n},
          {"m", m},
          {"pure", pure},
          {"status", to_string(v.status)},
          {"trace", steps_to_json(v.trace)},
          {"facts", facts_to_json(v.trace)},
          {"violations", viol},
          {"notes", v.notes},
          {"warnings", v.trace.warnings}};
}

}  // namespace orbibraid::io
